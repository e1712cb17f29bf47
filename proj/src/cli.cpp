#include "densify/cli.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "densify/core.hpp"
#include "densify/exact.hpp"
#include "densify/graph.hpp"
#include "densify/greedy.hpp"
#include "densify/metrics.hpp"
#include "densify/oracle.hpp"
#include "densify/report.hpp"

namespace densify::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kAlgorithms = {"exact", "greedy", "core"};

struct Decomposition {
    std::string algorithm;
    Chain chain;
    std::optional<std::vector<std::size_t>> core_k;
    std::optional<std::size_t> cut_calls;
    double elapsed_ms = 0;
};

Decomposition decompose(const Graph& g, const std::string& algorithm) {
    Decomposition d;
    d.algorithm = algorithm;
    const auto start = std::chrono::steady_clock::now();
    if (algorithm == "exact") {
        ExactStats stats;
        d.chain = exact_ld(g, &stats);
        d.cut_calls = stats.cut_calls;
    } else if (algorithm == "greedy") {
        d.chain = greedy_ld(g);
    } else {
        CoreResult core = core_decomposition(g);
        d.chain = std::move(core.chain);
        d.core_k = std::move(core.core_value);
    }
    d.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return d;
}

json chain_json(const Graph& g, const Decomposition& d) {
    return report::chain_to_json(g, d.chain, d.core_k ? &*d.core_k : nullptr);
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_decompose(const LoadedGraph& loaded, const std::string& algorithm, const std::string& format, bool oracle,
                  std::ostream& out) {
    const Graph& g = loaded.graph;
    const Decomposition d = decompose(g, algorithm);
    if (format == "tsv") {
        out << report::chain_to_tsv(g, d.chain);
        return kExitOk;
    }
    json doc = {{"schema_version", report::kSchemaVersion},
                {"command", "decompose"},
                {"algorithm", algorithm},
                {"graph", report::load_stats_to_json(g, loaded.stats)},
                {"elapsed_ms", d.elapsed_ms},
                {"chain", chain_json(g, d)}};
    if (d.cut_calls) doc["cut_calls"] = *d.cut_calls;
    if (oracle) {
        const Chain reference = oracle::brute_locally_dense_chain(g);
        doc["oracle"] = {{"exponential", true},
                         {"matches", reference.same_sets(d.chain)},
                         {"chain", report::chain_to_json(g, reference)}};
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_compare(const LoadedGraph& loaded, const std::vector<std::string>& algorithms, const std::string& format,
                std::ostream& out) {
    const Graph& g = loaded.graph;
    std::vector<std::future<Decomposition>> jobs;
    for (const auto& a : algorithms) {
        jobs.push_back(std::async(std::launch::async, [&g, a] { return decompose(g, a); }));
    }
    std::vector<Decomposition> runs;
    for (auto& job : jobs) runs.push_back(job.get());

    std::vector<Profile> profiles;
    std::vector<std::vector<std::int64_t>> assignment;
    for (const auto& run : runs) {
        profiles.push_back(profile(run.chain));
        assignment.push_back(chain_index_assignment(run.chain));
    }

    json pairs = json::array();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            const auto tau = kendall_tau_b(assignment[i], assignment[j]);
            const Rational forward = profile_ratio(runs[i].chain, runs[j].chain);
            const Rational backward = profile_ratio(runs[j].chain, runs[i].chain);
            json entry = {{"a", runs[i].algorithm},
                          {"b", runs[j].algorithm},
                          {"kendall_tau_b", tau ? json(*tau) : json(nullptr)},
                          {"profile_ratio_a_b", forward.to_string()},
                          {"profile_ratio_a_b_decimal", forward.to_decimal(2)},
                          {"profile_ratio_b_a", backward.to_string()},
                          {"profile_ratio_b_a_decimal", backward.to_decimal(2)}};
            if (g.vertex_count() > 0 && profiles[j].at(1) != Rational(0)) {
                const Rational inner = profiles[i].at(1) / profiles[j].at(1);
                entry["inner_density_ratio_a_b"] = inner.to_string();
                entry["inner_density_ratio_a_b_decimal"] = inner.to_decimal(2);
            }
            pairs.push_back(std::move(entry));
        }
    }

    if (format == "tsv") {
        out << "a\tb\tkendall_tau_b\tprofile_ratio_a_b\tprofile_ratio_b_a\n";
        for (const auto& p : pairs) {
            out << p["a"].get<std::string>() << '\t' << p["b"].get<std::string>() << '\t'
                << (p["kendall_tau_b"].is_null() ? std::string("NA") : std::to_string(p["kendall_tau_b"].get<double>()))
                << '\t' << p["profile_ratio_a_b"].get<std::string>() << '\t'
                << p["profile_ratio_b_a"].get<std::string>() << '\n';
        }
        out << "\nalgorithm\tnonempty_sets\tchain_length\n";
        for (const auto& run : runs) {
            out << run.algorithm << '\t' << run.chain.nonempty_count() << '\t' << run.chain.length() << '\n';
        }
        out << "\ni";
        for (const auto& run : runs) out << '\t' << run.algorithm;
        out << '\n';
        for (std::size_t i = 1; i <= g.vertex_count(); ++i) {
            out << i;
            for (const auto& p : profiles) out << '\t' << p.at(i);
            out << '\n';
        }
        return kExitOk;
    }

    json sizes = json::object();
    json elapsed = json::object();
    json prof = json::object();
    json chains = json::object();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Chain& c = runs[i].chain;
        sizes[runs[i].algorithm] = {{"nonempty_sets", c.nonempty_count()},
                                    {"nonempty_proper_sets", c.nonempty_count() == 0 ? 0 : c.nonempty_count() - 1},
                                    {"chain_length", c.length()}};
        elapsed[runs[i].algorithm] = runs[i].elapsed_ms;
        json values = json::array();
        for (const auto& v : profiles[i].values()) values.push_back(v.to_string());
        prof[runs[i].algorithm] = std::move(values);
        chains[runs[i].algorithm] = chain_json(g, runs[i]);
    }
    json doc = {{"schema_version", report::kSchemaVersion},
                {"command", "compare"},
                {"graph", report::load_stats_to_json(g, loaded.stats)},
                {"algorithms", algorithms},
                {"sizes", std::move(sizes)},
                {"elapsed_ms", std::move(elapsed)},
                {"pairs", std::move(pairs)},
                {"profiles", std::move(prof)},
                {"chains", std::move(chains)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_profile(const LoadedGraph& loaded, const std::string& algorithm, const std::string& format,
                std::ostream& out) {
    const Decomposition d = decompose(loaded.graph, algorithm);
    const Profile prof = profile(d.chain);
    if (format == "json") {
        json values = json::array();
        for (std::size_t i = 1; i <= prof.size(); ++i) {
            values.push_back({{"i", i}, {"profile", prof.at(i).to_string()}, {"decimal", report::decimal(prof.at(i))}});
        }
        json doc = {{"schema_version", report::kSchemaVersion},
                    {"command", "profile"},
                    {"algorithm", algorithm},
                    {"graph", report::load_stats_to_json(loaded.graph, loaded.stats)},
                    {"profile", std::move(values)}};
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << report::profile_to_tsv(prof);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally-dense graph decomposition toolkit", "densify"};
    app.require_subcommand(1);

    std::string input;
    std::string algorithm = "exact";
    std::string format = "json";
    std::string out_path;
    std::string algos = "core,greedy,exact";
    bool oracle = false;
    std::uint64_t seed = 0;

    auto* decompose_cmd = app.add_subcommand("decompose", "Run one decomposition and report its chain");
    decompose_cmd->add_option("--algo", algorithm, "exact | greedy | core")->check(CLI::IsMember(kAlgorithms));
    decompose_cmd->add_option("--input", input, "Edge-list file")->required();
    decompose_cmd->add_option("--output", format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    decompose_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    decompose_cmd->add_flag("--oracle", oracle,
                            "Also run the brute-force oracle (exponential; at most 14 vertices)");
    decompose_cmd->add_option("--seed", seed, "Reserved; all algorithms are deterministic");

    std::string compare_format = "json";
    auto* compare_cmd = app.add_subcommand("compare", "Compare decompositions (Kendall tau-b, profile ratios)");
    compare_cmd->add_option("--input", input, "Edge-list file")->required();
    compare_cmd->add_option("--algos", algos, "Comma-separated subset of exact,greedy,core");
    compare_cmd->add_option("--output", compare_format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    compare_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    compare_cmd->add_option("--seed", seed, "Reserved; all algorithms are deterministic");

    std::string profile_algorithm;
    std::string profile_format = "tsv";
    auto* profile_cmd = app.add_subcommand("profile", "Emit the profile function of one decomposition");
    profile_cmd->add_option("--input", input, "Edge-list file")->required();
    profile_cmd->add_option("--algo", profile_algorithm, "exact | greedy | core")
        ->required()
        ->check(CLI::IsMember(kAlgorithms));
    profile_cmd->add_option("--output", profile_format, "tsv | json")->check(CLI::IsMember({"json", "tsv"}));
    profile_cmd->add_option("--out", out_path, "Write the profile here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::vector<std::string> algorithm_list;
    if (compare_cmd->parsed()) {
        std::stringstream ss(algos);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (std::find(kAlgorithms.begin(), kAlgorithms.end(), item) == kAlgorithms.end()) {
                err << "densify: unknown algorithm in --algos: " << item << '\n';
                return kExitUsage;
            }
            algorithm_list.push_back(item);
        }
        if (algorithm_list.empty()) {
            err << "densify: --algos is empty\n";
            return kExitUsage;
        }
    }

    try {
        const LoadedGraph loaded = load_edge_list_file(input);
        Output sink(out_path, out);
        if (decompose_cmd->parsed()) return cmd_decompose(loaded, algorithm, format, oracle, sink.stream());
        if (compare_cmd->parsed()) return cmd_compare(loaded, algorithm_list, compare_format, sink.stream());
        return cmd_profile(loaded, profile_algorithm, profile_format, sink.stream());
    } catch (const ParseError& e) {
        err << "densify: " << input << ": " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "densify: " << e.what() << '\n';
        return kExitDataError;
    }
}

}  // namespace densify::cli
