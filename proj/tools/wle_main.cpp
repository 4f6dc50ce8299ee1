#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wle/energy.hpp"
#include "wle/generators.hpp"
#include "wle/graph.hpp"
#include "wle/spectra.hpp"
#include "wle/verify.hpp"
#include "wle/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GenOptions {
    std::string family;
    int n = 0, a = 0, b = 0, p = 0, q = 0;
    double prob = 0.5;
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string format = "edgelist";
};

struct GraphCmdOptions {
    std::string path;
    std::string format = "tsv";  // indices only
    std::string kind = "all";    // energy only
};

struct VerifyOptions {
    std::string config_path;
    std::vector<std::string> theorems;
    std::vector<std::string> families;
    std::vector<std::string> files;
    std::vector<std::string> kinds;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    bool self_test = false;
};

int run_gen(const GenOptions& opt) {
    wle::FamilySpec spec;
    spec.family = wle::family_from_name(opt.family);
    spec.n = opt.n;
    spec.a = opt.a;
    spec.b = opt.b;
    spec.p = opt.p;
    spec.q = opt.q;
    spec.prob = opt.prob;
    spec.seed = opt.seed;
    const wle::Graph g = wle::generate(spec);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (opt.out != "-") {
        file.open(opt.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + opt.out);
        out = &file;
    }
    if (opt.format == "edgelist") {
        wle::write_edge_list(g, *out);
    } else if (opt.format == "graph6") {
        *out << wle::to_graph6(g) << '\n';
    } else {
        throw std::invalid_argument("unknown output format: " + opt.format);
    }
    return kExitOk;
}

nlohmann::ordered_json weights_json(const wle::Graph& g) {
    nlohmann::ordered_json w;
    for (wle::WeightKind kind : wle::all_weight_kinds)
        w[wle::weight_kind_name(kind)] = wle::weight_vector(g, kind).values;
    return w;
}

int run_indices(const GraphCmdOptions& opt) {
    const auto graphs = wle::load_graph_file(opt.path);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const wle::Graph& g = graphs[gi];
        const wle::IndexReport report = wle::index_report(g);
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["graph"] = opt.path + ":" + std::to_string(gi + 1);
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["wiener"] = report.wiener;
            j["first_zagreb"] = report.first_zagreb;
            j["total_eccentricity"] = report.total_eccentricity;
            j["forgotten"] = report.forgotten;
            j["radius"] = report.radius;
            j["diameter"] = report.diameter;
            j["weights"] = weights_json(g);
            std::cout << j.dump() << '\n';
        } else if (opt.format == "tsv") {
            if (gi) std::cout << '\n';
            std::cout << "graph\t" << opt.path << ":" << gi + 1 << '\n'
                      << "n\t" << g.vertex_count() << '\n'
                      << "m\t" << g.edge_count() << '\n'
                      << "wiener\t" << report.wiener << '\n'
                      << "first_zagreb\t" << report.first_zagreb << '\n'
                      << "total_eccentricity\t" << report.total_eccentricity << '\n'
                      << "forgotten\t" << report.forgotten << '\n'
                      << "radius\t" << report.radius << '\n'
                      << "diameter\t" << report.diameter << '\n';
            for (wle::WeightKind kind : wle::all_weight_kinds) {
                std::cout << "weight." << wle::weight_kind_name(kind);
                for (double v : wle::weight_vector(g, kind).values) std::cout << '\t' << v;
                std::cout << '\n';
            }
        } else {
            throw std::invalid_argument("unknown indices format: " + opt.format);
        }
    }
    return kExitOk;
}

int run_energy(const GraphCmdOptions& opt) {
    const auto graphs = wle::load_graph_file(opt.path);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const wle::Graph& g = graphs[gi];
        nlohmann::ordered_json j;
        j["graph"] = opt.path + ":" + std::to_string(gi + 1);
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["connected"] = wle::is_connected(g);
        j["bipartite"] = wle::bipartition(g).bipartite;
        if (opt.kind == "all") {
            const wle::EnergyReport report = wle::energy_report(g);
            j["adjacency_energy"] = report.adjacency_energy;
            for (wle::WeightKind kind : wle::all_weight_kinds) {
                const auto& entry = report.entry(kind);
                auto& jk = j["kinds"][wle::weight_kind_name(kind)];
                jk["laplacian_energy"] = entry.laplacian_energy;
                jk["mean_weight"] = entry.mean_weight;
                jk["n_mean_deviation"] = entry.n_mean_deviation;
            }
        } else {
            const auto kind = wle::weight_kind_from_name(opt.kind);
            if (!kind) throw std::invalid_argument("unknown weight kind: " + opt.kind);
            const wle::WeightVector w = wle::weight_vector(g, *kind);
            j["adjacency_energy"] = wle::graph_energy(g);
            auto& jk = j["kinds"][opt.kind];
            jk["laplacian_energy"] = wle::laplacian_energy(g, w);
            jk["mean_weight"] = w.mean();
            jk["n_mean_deviation"] = g.vertex_count() * wle::mean_deviation(w);
        }
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    wle::CorpusConfig cfg;
    cfg.all_theorems = true;
    if (!opt.config_path.empty()) cfg = wle::load_corpus_config(opt.config_path);

    // family entries carry commas in their parameter lists, so only ';'
    // separates entries packed into one flag value
    auto split_on = [](const std::vector<std::string>& raw, const std::string& seps) {
        std::vector<std::string> out;
        for (const std::string& chunk : raw) {
            std::string current;
            for (char c : chunk + seps.substr(0, 1)) {
                if (seps.find(c) != std::string::npos) {
                    while (!current.empty() && current.front() == ' ') current.erase(current.begin());
                    while (!current.empty() && current.back() == ' ') current.pop_back();
                    if (!current.empty()) out.push_back(current);
                    current.clear();
                } else {
                    current += c;
                }
            }
        }
        return out;
    };
    auto parse_csv = [&](const std::vector<std::string>& raw) { return split_on(raw, ",;"); };

    if (!opt.families.empty()) cfg.families = split_on(opt.families, ";");
    if (!opt.files.empty()) cfg.files = split_on(opt.files, ";,");
    if (!opt.kinds.empty()) {
        const auto names = parse_csv(opt.kinds);
        cfg.kinds.clear();
        cfg.all_kinds = false;
        for (const std::string& name : names) {
            if (name == "all") {
                cfg.all_kinds = true;
                cfg.kinds.clear();
                break;
            }
            const auto kind = wle::weight_kind_from_name(name);
            if (!kind) throw std::invalid_argument("unknown weight kind: " + name);
            cfg.kinds.push_back(*kind);
        }
    }
    if (!opt.theorems.empty()) {
        const auto names = parse_csv(opt.theorems);
        cfg.theorems.clear();
        cfg.all_theorems = false;
        for (const std::string& name : names) {
            if (name == "all") {
                cfg.all_theorems = true;
                cfg.theorems.clear();
                break;
            }
            const auto tag = wle::theorem_from_name(name);
            if (!tag) throw std::invalid_argument("unknown theorem tag: " + name);
            cfg.theorems.push_back(*tag);
        }
    }
    if (opt.tol) cfg.tolerance = *opt.tol;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.out) cfg.out = *opt.out;
    if (opt.format) cfg.format = *opt.format;

    std::ofstream file;
    std::ostream* report = &std::cout;
    if (!cfg.out.empty() && cfg.out != "-") {
        file.open(cfg.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open report file: " + cfg.out);
        report = &file;
    }

    const wle::CorpusSummary summary = opt.self_test
                                           ? wle::run_self_test(cfg.tolerance, *report)
                                           : wle::run_corpus(cfg, *report);
    if (summary.exit_code() != 0) {
        std::cerr << "verify: " << summary.violations << " violation(s), "
                  << summary.consistency_failures << " consistency failure(s) in "
                  << summary.records << " record(s)\n";
        return kExitViolation;
    }
    std::cerr << "verify: all " << summary.records << " record(s) hold\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy and weighted Laplacian energy toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph from a named family");
    gen_cmd->add_option("--family", gen.family, "family tag")->required();
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--a", gen.a, "first part size");
    gen_cmd->add_option("--b", gen.b, "second part size");
    gen_cmd->add_option("--p", gen.p, "nanotorus width parameter");
    gen_cmd->add_option("--q", gen.q, "nanotorus height parameter");
    gen_cmd->add_option("--prob", gen.prob, "edge probability for random families");
    gen_cmd->add_option("--seed", gen.seed, "64-bit seed for random families");
    gen_cmd->add_option("--out", gen.out, "output path, '-' for stdout");
    gen_cmd->add_option("--format", gen.format, "edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    GraphCmdOptions indices;
    auto* indices_cmd = app.add_subcommand("indices", "topological indices and weight vectors");
    indices_cmd->add_option("graphfile", indices.path, "edge-list or .g6 file")->required();
    indices_cmd->add_option("--format", indices.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    GraphCmdOptions energy;
    auto* energy_cmd = app.add_subcommand("energy", "graph energy and Laplacian energies");
    energy_cmd->add_option("graphfile", energy.path, "edge-list or .g6 file")->required();
    energy_cmd->add_option("--kind", energy.kind, "deg|tr|two_degree|deg2|ecc|deg3|all");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the energy inequalities over a corpus");
    verify_cmd->add_option("--config", verify.config_path, "key/value corpus config file");
    verify_cmd->add_option("--theorem", verify.theorems,
                           "upper_bound|bipartite_lower|sandwich|vt_equality|all");
    verify_cmd->add_option("--families", verify.families, "family:count[:params] entries");
    verify_cmd->add_option("--files", verify.files, "graph files or globs");
    verify_cmd->add_option("--kinds", verify.kinds, "weight kinds or 'all'");
    verify_cmd->add_option("--tol", verify.tol, "equality tolerance");
    verify_cmd->add_option("--seed", verify.seed, "corpus seed");
    verify_cmd->add_option("--out", verify.out, "report path (JSON lines)");
    verify_cmd->add_option("--format", verify.format, "report format (jsonl)");
    verify_cmd->add_flag("--self-test", verify.self_test,
                         "negative control: corrupt one LE value by +0.1 and expect failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (indices_cmd->parsed()) return run_indices(indices);
        if (energy_cmd->parsed()) return run_energy(energy);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
