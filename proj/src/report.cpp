#include "densify/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace densify::report {

namespace {

std::vector<std::string> shell_labels(const Graph& g, const Chain& chain, std::size_t i) {
    std::vector<std::string> out;
    for (const VertexId v : chain.shell(i)) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string decimal(const Rational& r) { return r.to_decimal(6); }

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, w] : g.edges()) edges.push_back({u, w});
    return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

nlohmann::json load_stats_to_json(const Graph& g, const LoadStats& stats) {
    return {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"lines_read", stats.lines_read},
            {"self_loops_dropped", stats.self_loops_dropped},
            {"duplicates_collapsed", stats.duplicates_collapsed}};
}

nlohmann::json chain_to_json(const Graph& g, const Chain& chain, const std::vector<std::size_t>* core_k) {
    nlohmann::json sets = nlohmann::json::array();
    Rational edges_so_far(0);
    for (std::size_t i = 1; i < chain.length(); ++i) {
        const auto size = static_cast<Rational::int_type>(chain.sizes()[i]);
        const auto shell_size = static_cast<Rational::int_type>(chain.sizes()[i] - chain.sizes()[i - 1]);
        const Rational& step = chain.step_density(i);
        edges_so_far += step * Rational(shell_size);
        const Rational whole = edges_so_far / Rational(size);
        nlohmann::json entry = {{"index", i},
                                {"size", chain.sizes()[i]},
                                {"shell", shell_labels(g, chain, i)},
                                {"step_density", step.to_string()},
                                {"step_density_decimal", decimal(step)},
                                {"density", whole.to_string()},
                                {"density_decimal", decimal(whole)}};
        if (core_k != nullptr) entry["k"] = core_k->at(i - 1);
        sets.push_back(std::move(entry));
    }
    const std::size_t nonempty = chain.nonempty_count();
    return {{"kind", std::string(to_string(chain.kind()))},
            {"chain_length", chain.length()},
            {"nonempty_sets", nonempty},
            {"nonempty_proper_sets", nonempty == 0 ? 0 : nonempty - 1},
            {"sets", std::move(sets)}};
}

Chain chain_from_json(const Graph& g, const nlohmann::json& doc) {
    static const std::unordered_map<std::string, ChainKind> kinds = {
        {"exact", ChainKind::exact}, {"greedy", ChainKind::greedy}, {"core", ChainKind::core}, {"oracle", ChainKind::oracle}};
    const auto kind_it = kinds.find(doc.at("kind").get<std::string>());
    if (kind_it == kinds.end()) throw std::invalid_argument("unknown chain kind");

    std::unordered_map<std::string, VertexId> id_of;
    for (VertexId v = 0; v < g.vertex_count(); ++v) id_of.emplace(g.label(v), v);

    std::vector<std::size_t> level(g.vertex_count(), 0);
    std::size_t index = 0;
    for (const auto& entry : doc.at("sets")) {
        ++index;
        for (const auto& label : entry.at("shell")) {
            const auto it = id_of.find(label.get<std::string>());
            if (it == id_of.end()) throw std::invalid_argument("unknown label in chain");
            if (level[it->second] != 0) throw std::invalid_argument("vertex listed twice in chain");
            level[it->second] = index;
        }
    }
    if (std::find(level.begin(), level.end(), std::size_t{0}) != level.end()) {
        throw std::invalid_argument("chain does not cover every vertex");
    }
    Chain chain = Chain::from_levels(g, kind_it->second, level);
    index = 0;
    for (const auto& entry : doc.at("sets")) {
        ++index;
        if (entry.at("size").get<std::size_t>() != chain.sizes()[index] ||
            entry.at("step_density").get<std::string>() != chain.step_density(index).to_string()) {
            throw std::invalid_argument("chain document disagrees with the graph");
        }
    }
    return chain;
}

std::string chain_to_tsv(const Graph& g, const Chain& chain) {
    std::ostringstream out;
    out << "index\tsize\tstep_density\tstep_density_decimal\tshell\n";
    for (std::size_t i = 1; i < chain.length(); ++i) {
        out << i << '\t' << chain.sizes()[i] << '\t' << chain.step_density(i) << '\t' << decimal(chain.step_density(i))
            << '\t';
        const auto labels = shell_labels(g, chain, i);
        for (std::size_t k = 0; k < labels.size(); ++k) out << (k == 0 ? "" : ",") << labels[k];
        out << '\n';
    }
    return out.str();
}

std::string profile_to_tsv(const Profile& prof) {
    std::ostringstream out;
    out << "i\tprofile\tprofile_decimal\n";
    for (std::size_t i = 1; i <= prof.size(); ++i) {
        out << i << '\t' << prof.at(i) << '\t' << decimal(prof.at(i)) << '\n';
    }
    return out.str();
}

}  // namespace densify::report
