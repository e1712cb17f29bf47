#include "densify/mincut.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace densify {

FlowNetwork::FlowNetwork(std::size_t nodes, NodeId source, NodeId sink)
    : nodes_(nodes), source_(source), sink_(sink) {
    if (source >= nodes || sink >= nodes) throw std::invalid_argument("terminal outside the network");
    if (source == sink) throw std::invalid_argument("source and sink must differ");
}

std::size_t FlowNetwork::add_arc(NodeId tail, NodeId head, Capacity capacity) {
    if (tail >= nodes_ || head >= nodes_) throw std::out_of_range("arc endpoint outside the network");
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    arcs_.push_back({tail, head, capacity, false});
    return arcs_.size() - 1;
}

std::size_t FlowNetwork::add_edge(NodeId a, NodeId b, Capacity capacity) {
    if (a >= nodes_ || b >= nodes_) throw std::out_of_range("edge endpoint outside the network");
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    arcs_.push_back({a, b, capacity, true});
    return arcs_.size() - 1;
}

namespace {

// Highest-label push-relabel with gap and global relabeling. A single phase
// handles both directions: nodes that can no longer reach the sink climb
// above height n and return their excess to the source, so the result is a
// proper flow, not just a preflow.
class PushRelabel {
public:
    explicit PushRelabel(const FlowNetwork& net)
        : n_(static_cast<NodeId>(net.node_count())), s_(net.source()), t_(net.sink()) {
        build(net);
    }

    MinCut solve(const FlowNetwork& net) {
        height_.assign(n_, 0);
        excess_.assign(n_, 0);
        height_[s_] = n_;
        for (std::size_t a = first_[s_]; a < first_[s_ + 1]; ++a) {
            const Capacity c = residual_[a];
            if (c > 0) push(a, s_, c);
        }
        global_relabel();

        while (true) {
            while (top_ >= 0 && active_[static_cast<std::size_t>(top_)].empty()) --top_;
            if (top_ < 0) break;
            auto& bucket = active_[static_cast<std::size_t>(top_)];
            const NodeId u = bucket.back();
            bucket.pop_back();
            if (excess_[u] <= 0 || static_cast<std::int64_t>(height_[u]) != top_) continue;
            discharge(u);
            if (relabels_since_global_ > n_) global_relabel();
        }

        MinCut out;
        out.value = excess_[t_];
        const auto reach = reaches_sink();
        out.source_side.resize(n_);
        for (NodeId u = 0; u < n_; ++u) out.source_side[u] = reach[u] ? 0 : 1;
        out.flow.reserve(net.arcs().size());
        for (std::size_t i = 0; i < net.arcs().size(); ++i) {
            out.flow.push_back(net.arcs()[i].capacity - residual_[forward_[i]]);
        }
        return out;
    }

private:
    void build(const FlowNetwork& net) {
        constexpr Capacity limit = std::numeric_limits<Capacity>::max() / 2;
        first_.assign(static_cast<std::size_t>(n_) + 1, 0);
        Capacity source_total = 0;
        for (const auto& arc : net.arcs()) {
            if (arc.capacity > limit) throw std::overflow_error("arc capacity too large");
            ++first_[arc.tail + 1];
            ++first_[arc.head + 1];
            if (arc.tail == s_ || (arc.undirected && arc.head == s_)) {
                if (__builtin_add_overflow(source_total, arc.capacity, &source_total)) {
                    throw std::overflow_error("total source capacity overflows");
                }
            }
        }
        for (NodeId u = 0; u < n_; ++u) first_[u + 1] += first_[u];
        const std::size_t m = first_[n_];
        head_.resize(m);
        residual_.resize(m);
        reverse_.resize(m);
        forward_.resize(net.arcs().size());
        std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
        for (std::size_t i = 0; i < net.arcs().size(); ++i) {
            const auto& arc = net.arcs()[i];
            const std::size_t f = fill[arc.tail]++;
            const std::size_t b = fill[arc.head]++;
            head_[f] = arc.head;
            head_[b] = arc.tail;
            residual_[f] = arc.capacity;
            residual_[b] = arc.undirected ? arc.capacity : 0;
            reverse_[f] = b;
            reverse_[b] = f;
            forward_[i] = f;
        }
        current_.assign(n_, 0);
        active_.assign(2 * static_cast<std::size_t>(n_) + 1, {});
        level_head_.assign(n_, kNone);
        next_.assign(n_, kNone);
        prev_.assign(n_, kNone);
    }

    static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

    void push(std::size_t a, NodeId u, Capacity delta) {
        const NodeId v = head_[a];
        residual_[a] -= delta;
        residual_[reverse_[a]] += delta;
        excess_[u] -= delta;
        if (v != s_ && v != t_ && excess_[v] == 0) activate(v);
        excess_[v] += delta;
    }

    void activate(NodeId v) {
        const auto h = static_cast<std::int64_t>(height_[v]);
        if (h >= static_cast<std::int64_t>(active_.size())) return;
        active_[static_cast<std::size_t>(h)].push_back(v);
        top_ = std::max(top_, h);
    }

    void level_insert(NodeId u) {
        const NodeId h = height_[u];
        if (h >= n_) return;
        prev_[u] = kNone;
        next_[u] = level_head_[h];
        if (next_[u] != kNone) prev_[next_[u]] = u;
        level_head_[h] = u;
        max_level_ = std::max(max_level_, static_cast<std::int64_t>(h));
    }

    void level_remove(NodeId u) {
        const NodeId h = height_[u];
        if (h >= n_) return;
        if (prev_[u] != kNone) {
            next_[prev_[u]] = next_[u];
        } else {
            level_head_[h] = next_[u];
        }
        if (next_[u] != kNone) prev_[next_[u]] = prev_[u];
    }

    void discharge(NodeId u) {
        while (excess_[u] > 0) {
            const std::size_t end = first_[u + 1];
            std::size_t& a = current_[u];
            if (a == end) {
                relabel(u);
                continue;
            }
            const NodeId v = head_[a];
            if (residual_[a] > 0 && height_[u] == height_[v] + 1) {
                push(a, u, std::min(excess_[u], residual_[a]));
                if (excess_[u] == 0) break;
            }
            ++a;
        }
    }

    void relabel(NodeId u) {
        ++relabels_since_global_;
        const NodeId old = height_[u];
        NodeId lowest = kNone;
        for (std::size_t a = first_[u]; a < first_[u + 1]; ++a) {
            if (residual_[a] > 0) lowest = std::min(lowest, height_[head_[a]]);
        }
        level_remove(u);
        height_[u] = lowest == kNone ? 2 * n_ : lowest + 1;
        current_[u] = first_[u];
        level_insert(u);
        if (old < n_ && level_head_[old] == kNone) gap(old);
    }

    // No node sits at height `empty`, so nothing above it (and below n) can
    // reach the sink any more.
    void gap(NodeId empty) {
        for (auto h = static_cast<std::int64_t>(empty) + 1; h <= max_level_; ++h) {
            NodeId u = level_head_[static_cast<std::size_t>(h)];
            level_head_[static_cast<std::size_t>(h)] = kNone;
            while (u != kNone) {
                const NodeId next = next_[u];
                height_[u] = n_;
                current_[u] = first_[u];
                if (excess_[u] > 0 && u != s_ && u != t_) activate(u);
                u = next;
            }
        }
        max_level_ = static_cast<std::int64_t>(empty) - 1;
    }

    std::vector<bool> reaches_sink() const {
        std::vector<bool> seen(n_, false);
        std::vector<NodeId> queue{t_};
        seen[t_] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const NodeId x = queue[i];
            for (std::size_t a = first_[x]; a < first_[x + 1]; ++a) {
                const NodeId y = head_[a];
                if (!seen[y] && y != s_ && residual_[reverse_[a]] > 0) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        return seen;
    }

    void global_relabel() {
        relabels_since_global_ = 0;
        std::fill(level_head_.begin(), level_head_.end(), kNone);
        max_level_ = -1;
        for (auto& bucket : active_) bucket.clear();
        top_ = -1;

        std::vector<bool> seen(n_, false);
        std::vector<NodeId> queue{t_};
        seen[t_] = true;
        height_[t_] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const NodeId x = queue[i];
            for (std::size_t a = first_[x]; a < first_[x + 1]; ++a) {
                const NodeId y = head_[a];
                if (!seen[y] && y != s_ && residual_[reverse_[a]] > 0) {
                    seen[y] = true;
                    height_[y] = height_[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (NodeId u = 0; u < n_; ++u) {
            if (u == s_) {
                height_[u] = n_;
            } else if (!seen[u]) {
                height_[u] = std::max(height_[u], n_);
            }
            current_[u] = first_[u];
            level_insert(u);
            if (u != s_ && u != t_ && excess_[u] > 0) activate(u);
        }
    }

    NodeId n_;
    NodeId s_;
    NodeId t_;
    std::vector<std::size_t> first_;
    std::vector<NodeId> head_;
    std::vector<Capacity> residual_;
    std::vector<std::size_t> reverse_;
    std::vector<std::size_t> forward_;

    std::vector<NodeId> height_;
    std::vector<Capacity> excess_;
    std::vector<std::size_t> current_;
    std::vector<std::vector<NodeId>> active_;
    std::int64_t top_ = -1;

    std::vector<NodeId> level_head_;
    std::vector<NodeId> next_;
    std::vector<NodeId> prev_;
    std::int64_t max_level_ = -1;
    std::size_t relabels_since_global_ = 0;
};

}  // namespace

MinCut min_cut(const FlowNetwork& net) {
    PushRelabel solver(net);
    return solver.solve(net);
}

}  // namespace densify
