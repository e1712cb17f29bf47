#include "densify/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace densify {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Normalizes to u < w, sorts and removes duplicates. Returns the number of
// collapsed duplicates; self-loops must already be gone.
std::size_t canonicalize(EdgeList& edges) {
    for (auto& [u, w] : edges) {
        if (u > w) std::swap(u, w);
    }
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    const auto removed = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    return removed;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> labels) {
    EdgeList list;
    list.reserve(edges.size());
    for (const auto& [u, w] : edges) {
        if (u >= n || w >= n) throw std::out_of_range("edge endpoint out of range");
        if (u != w) list.emplace_back(u, w);
    }
    canonicalize(list);

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, w] : list) {
        ++g.offsets_[u + 1];
        ++g.offsets_[w + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.resize(2 * list.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, w] : list) g.targets_[fill[w]++] = u;
    for (const auto& [u, w] : list) g.targets_[fill[u]++] = w;
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }

    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    } else if (labels.size() != n) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(VertexId u, VertexId w) const noexcept {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), w);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (const VertexId w : neighbors(u)) {
            if (u < w) out.emplace_back(u, w);
        }
    }
    return out;
}

LoadedGraph load_edge_list(std::istream& in) {
    LoadedGraph result;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> labels;
    EdgeList edges;

    auto intern = [&](const std::string& label) {
        const auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r\v\f");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream tokens(line);
        std::string a;
        std::string b;
        std::string extra;
        tokens >> a >> b;
        if (b.empty() || (tokens >> extra)) {
            throw ParseError(line_no, "expected exactly two vertex labels");
        }
        const VertexId u = intern(a);
        const VertexId w = intern(b);
        if (u == w) {
            ++result.stats.self_loops_dropped;
            continue;
        }
        edges.emplace_back(u, w);
    }
    result.stats.lines_read = line_no;

    result.stats.duplicates_collapsed = canonicalize(edges);
    const std::size_t n = labels.size();
    result.graph = Graph::from_edges(n, edges, std::move(labels));
    return result;
}

LoadedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, w] : g.edges()) out << g.label(u) << ' ' << g.label(w) << '\n';
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> ids) : mask_(universe, 0) {
    for (const VertexId v : ids) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
    VertexSet s(universe);
    s.ids_.resize(universe);
    for (std::size_t v = 0; v < universe; ++v) s.ids_[v] = static_cast<VertexId>(v);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
}

void VertexSet::insert(VertexId v) {
    if (v >= mask_.size()) throw std::out_of_range("vertex id outside the set universe");
    if (mask_[v] != 0) return;
    mask_[v] = 1;
    ids_.insert(std::upper_bound(ids_.begin(), ids_.end(), v), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    return std::all_of(ids_.begin(), ids_.end(), [&](VertexId v) { return other.contains(v); });
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet out(std::max(universe(), other.universe()));
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out.ids_));
    for (const VertexId v : out.ids_) out.mask_[v] = 1;
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    VertexSet out(universe());
    for (const VertexId v : ids_) {
        if (!other.contains(v)) {
            out.ids_.push_back(v);
            out.mask_[v] = 1;
        }
    }
    return out;
}

bool VertexSet::disjoint(const VertexSet& other) const noexcept {
    return std::none_of(ids_.begin(), ids_.end(), [&](VertexId v) { return other.contains(v); });
}

VertexSet vertex_set_by_labels(const Graph& g, std::initializer_list<std::string_view> labels) {
    VertexSet out(g.vertex_count());
    for (const auto label : labels) {
        const auto& all = g.labels();
        const auto it = std::find(all.begin(), all.end(), label);
        if (it == all.end()) throw std::out_of_range("unknown vertex label: " + std::string(label));
        out.insert(static_cast<VertexId>(it - all.begin()));
    }
    return out;
}

std::size_t internal_edge_count(const Graph& g, const VertexSet& x) {
    std::size_t twice = 0;
    for (const VertexId v : x.ids()) {
        for (const VertexId w : g.neighbors(v)) twice += x.contains(w) ? 1 : 0;
    }
    return twice / 2;
}

std::size_t cross_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (!x.disjoint(y)) throw std::domain_error("cross_edge_count: sets overlap");
    std::size_t count = 0;
    for (const VertexId v : x.ids()) {
        for (const VertexId w : g.neighbors(v)) count += y.contains(w) ? 1 : 0;
    }
    return count;
}

std::size_t marginal_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return internal_edge_count(g, x) + cross_edge_count(g, x, y);
}

Rational density(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw std::domain_error("density of an empty set");
    return {static_cast<Rational::int_type>(internal_edge_count(g, x)), static_cast<Rational::int_type>(x.size())};
}

Rational outer_density(const Graph& g, const VertexSet& x, const VertexSet& y) {
    const VertexSet fresh = x.set_difference(y);
    if (fresh.empty()) throw std::domain_error("outer_density: X is contained in Y");
    return {static_cast<Rational::int_type>(marginal_edge_count(g, fresh, y)),
            static_cast<Rational::int_type>(fresh.size())};
}

}  // namespace densify
