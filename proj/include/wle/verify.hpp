#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wle/generators.hpp"
#include "wle/graph.hpp"
#include "wle/weights.hpp"

namespace wle {

enum class TheoremTag { upper_bound, bipartite_lower, sandwich, vt_equality };

const char* theorem_name(TheoremTag tag);
std::optional<TheoremTag> theorem_from_name(std::string_view name);

// One theorem instance checked on one graph. slack = right - left for the
// binding inequality; sandwich records additionally carry the slack of the
// upper bound. consistency captures the iff characterization: equality holds
// exactly when the weight is regular.
struct VerificationRecord {
    std::string graph_id;
    std::string kind;         // weight kind name, "all" for vt_equality
    TheoremTag theorem = TheoremTag::upper_bound;
    double left = 0.0;
    double right = 0.0;
    double slack = 0.0;
    double upper_slack = 0.0;  // sandwich only
    bool holds = false;
    bool equality = false;
    bool regular = false;
    bool consistency = false;
    std::string note;

    bool passes() const { return holds && consistency; }
};

std::string record_to_json(const VerificationRecord& r);

// LE_w(G) <= n*MD_w(G) + E(G) on connected graphs; equality iff w-regular.
VerificationRecord check_upper_bound(const Graph& g, WeightKind kind, double tol);

// LE_w(G) >= E(G) on bipartite graphs; equality iff w-regular. Non-bipartite
// input is rejected with the odd-cycle witness in the message.
VerificationRecord check_bipartite_lower(const Graph& g, WeightKind kind, double tol);

// max{n*MD_w(G), E(G)} <= LE_w(G) <= n*MD_w(G) + E(G) on bipartite graphs.
VerificationRecord check_sandwich(const Graph& g, WeightKind kind, double tol);

// E = LE_tr = LE_two_degree = LE_deg2 = LE_deg = LE_ecc, pairwise within tol.
// The caller asserts vertex-transitivity by construction; the record also
// notes whether deg, tr, two_degree and ecc are each regular.
VerificationRecord check_vt_equality(const Graph& g, double tol);

// One corpus source drawn from a graph family, parsed from
//   family:count[:key=value|key=lo..hi,...]
// with integer keys n,a,b,p,q (ranges allowed) and real key prob.
struct FamilyEntry {
    Family family = Family::path;
    int count = 0;
    int n_lo = 0, n_hi = 0;
    int a_lo = 0, a_hi = 0;
    int b_lo = 0, b_hi = 0;
    int p_lo = 0, p_hi = 0;
    int q_lo = 0, q_hi = 0;
    double prob = 0.5;
    std::string text;  // original spec string, used in graph ids
};

FamilyEntry parse_family_entry(std::string_view text);

struct CorpusConfig {
    std::vector<std::string> families;   // family entry strings
    std::vector<std::string> files;      // paths or globs (* in the filename)
    std::vector<WeightKind> kinds;       // empty + all_kinds=true means all six
    bool all_kinds = true;
    std::vector<TheoremTag> theorems;    // explicit tags are enforced as-is;
    bool all_theorems = false;           // "all" runs whichever tags apply
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
    std::string out;                     // report path, empty = stdout
    std::string format = "jsonl";
};

// Key/value config file: one "key = value" per line, '#' comments. Keys match
// the CorpusConfig fields (families, files, kinds, theorems, tolerance, seed,
// out, format).
CorpusConfig parse_corpus_config(std::istream& in);
CorpusConfig load_corpus_config(const std::string& path);

struct CorpusSummary {
    long long records = 0;
    long long holds = 0;
    long long violations = 0;
    long long equalities = 0;
    long long regular = 0;
    long long consistency_failures = 0;

    int exit_code() const { return (violations > 0 || consistency_failures > 0) ? 1 : 0; }
};

// One corpus graph with its deterministic identifier. vertex_transitive is
// set for families transitive by construction (cycle, complete, nanotorus,
// balanced complete bipartite), never computed.
struct CorpusItem {
    Graph graph;
    std::string id;
    bool vertex_transitive = false;
};

// Materializes the corpus a config describes: family draws first (seeded,
// deterministic), then file graphs in path order.
std::vector<CorpusItem> corpus_graphs(const CorpusConfig& cfg);

// Evaluates every (graph, kind, theorem) record, streaming JSON lines plus a
// trailing summary object to `report`. Deterministic for a fixed config.
// Invalid configs (no sources, bad tolerance, unreadable files) raise
// std::invalid_argument.
CorpusSummary run_corpus(const CorpusConfig& cfg, std::ostream& report);

// Negative control: recomputes two known equality cases with the Laplacian
// energy deliberately corrupted by +0.1 and reports the resulting failures.
// Must always yield exit code 1.
CorpusSummary run_self_test(double tol, std::ostream& report);

}  // namespace wle
