#include "wle/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "wle/energy.hpp"
#include "wle/rng.hpp"
#include "wle/spectra.hpp"

namespace wle {

const char* theorem_name(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::upper_bound: return "upper_bound";
        case TheoremTag::bipartite_lower: return "bipartite_lower";
        case TheoremTag::sandwich: return "sandwich";
        case TheoremTag::vt_equality: return "vt_equality";
    }
    return "?";
}

std::optional<TheoremTag> theorem_from_name(std::string_view name) {
    if (name == "upper_bound") return TheoremTag::upper_bound;
    if (name == "bipartite_lower") return TheoremTag::bipartite_lower;
    if (name == "sandwich") return TheoremTag::sandwich;
    if (name == "vt_equality") return TheoremTag::vt_equality;
    return std::nullopt;
}

std::string record_to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph_id;
    j["kind"] = r.kind;
    j["theorem"] = theorem_name(r.theorem);
    j["left"] = r.left;
    j["right"] = r.right;
    j["slack"] = r.slack;
    if (r.theorem == TheoremTag::sandwich) j["upper_slack"] = r.upper_slack;
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    j["regular"] = r.regular;
    j["consistency"] = r.consistency;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

std::string witness_string(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(cycle[i]);
    }
    return s;
}

void require_bipartite(const Graph& g, const char* what) {
    const Bipartition b = bipartition(g);
    if (!b.bipartite)
        throw std::invalid_argument(std::string(what) + " requires a bipartite graph; odd cycle " +
                                    witness_string(b.odd_cycle));
}

// The three scalar inputs of every inequality record for one (graph, kind).
struct KindValues {
    double le = 0.0;    // LE_w(G)
    double n_md = 0.0;  // n * MD_w(G)
    double e = 0.0;     // E(G)
    bool regular = false;
};

KindValues eval_kind(const Graph& g, WeightKind kind, double adjacency_energy,
                     const DistanceMatrix* dist) {
    const WeightVector w = dist != nullptr && is_distance_based(kind)
                               ? weight_vector(g, kind, *dist)
                               : weight_vector(g, kind);
    KindValues v;
    v.le = laplacian_energy(g, w);
    v.n_md = static_cast<double>(g.vertex_count()) * mean_deviation(w);
    v.e = adjacency_energy;
    v.regular = is_regular(w);
    return v;
}

VerificationRecord make_upper_bound_record(const KindValues& v, double tol) {
    VerificationRecord r;
    r.theorem = TheoremTag::upper_bound;
    r.left = v.le;
    r.right = v.n_md + v.e;
    r.slack = r.right - r.left;
    r.holds = r.slack >= -tol;
    r.equality = std::abs(r.slack) <= tol;
    r.regular = v.regular;
    r.consistency = r.equality == r.regular;
    return r;
}

VerificationRecord make_bipartite_lower_record(const KindValues& v, double tol) {
    VerificationRecord r;
    r.theorem = TheoremTag::bipartite_lower;
    r.left = v.e;
    r.right = v.le;
    r.slack = r.right - r.left;
    r.holds = r.slack >= -tol;
    r.equality = std::abs(r.slack) <= tol;
    r.regular = v.regular;
    r.consistency = r.equality == r.regular;
    return r;
}

VerificationRecord make_sandwich_record(const KindValues& v, double tol) {
    VerificationRecord r;
    r.theorem = TheoremTag::sandwich;
    r.left = std::max(v.n_md, v.e);
    r.right = v.le;
    r.slack = r.right - r.left;
    r.upper_slack = (v.n_md + v.e) - v.le;
    r.holds = r.slack >= -tol && r.upper_slack >= -tol;
    r.equality = std::abs(v.le - v.e) <= tol;  // lower bound attained at E(G)
    r.regular = v.regular;
    r.consistency = r.equality == r.regular;
    return r;
}

// Kinds entering the vertex-transitive equality chain; deg3 is not part of it.
constexpr std::array<WeightKind, 5> kVtKinds = {
    WeightKind::deg, WeightKind::tr, WeightKind::two_degree, WeightKind::deg2, WeightKind::ecc,
};

VerificationRecord make_vt_record(const Graph& g, double adjacency_energy,
                                  const DistanceMatrix& dist, double tol) {
    VerificationRecord r;
    r.theorem = TheoremTag::vt_equality;
    r.kind = "all";
    double lo = adjacency_energy, hi = adjacency_energy;
    bool regular = true;
    for (WeightKind kind : kVtKinds) {
        const WeightVector w = weight_vector(g, kind, dist);
        const double le = laplacian_energy(g, w);
        lo = std::min(lo, le);
        hi = std::max(hi, le);
        if (kind != WeightKind::deg2) regular = regular && is_regular(w);
    }
    r.left = lo;
    r.right = hi;
    r.slack = hi - lo;
    r.holds = r.slack <= tol;
    r.equality = r.holds;
    r.regular = regular;
    r.consistency = r.equality == r.regular;
    return r;
}

}  // namespace

VerificationRecord check_upper_bound(const Graph& g, WeightKind kind, double tol) {
    require_connected(g, "upper_bound");
    VerificationRecord r = make_upper_bound_record(eval_kind(g, kind, graph_energy(g), nullptr), tol);
    r.kind = weight_kind_name(kind);
    return r;
}

VerificationRecord check_bipartite_lower(const Graph& g, WeightKind kind, double tol) {
    require_bipartite(g, "bipartite_lower");
    if (is_distance_based(kind)) require_connected(g, "bipartite_lower with a distance weight");
    VerificationRecord r =
        make_bipartite_lower_record(eval_kind(g, kind, graph_energy(g), nullptr), tol);
    r.kind = weight_kind_name(kind);
    return r;
}

VerificationRecord check_sandwich(const Graph& g, WeightKind kind, double tol) {
    require_bipartite(g, "sandwich");
    if (is_distance_based(kind)) require_connected(g, "sandwich with a distance weight");
    VerificationRecord r = make_sandwich_record(eval_kind(g, kind, graph_energy(g), nullptr), tol);
    r.kind = weight_kind_name(kind);
    return r;
}

VerificationRecord check_vt_equality(const Graph& g, double tol) {
    require_connected(g, "vt_equality");
    return make_vt_record(g, graph_energy(g), distance_matrix(g), tol);
}

namespace {

struct IntRange {
    int lo = 0, hi = 0;
    bool set = false;
};

[[noreturn]] void bad_entry(std::string_view text, const std::string& why) {
    throw std::invalid_argument("bad family entry '" + std::string(text) + "': " + why);
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        parts.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

FamilyEntry parse_family_entry(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) bad_entry(text, "expected family:count[:params]");

    FamilyEntry entry;
    entry.text = trim(text);
    entry.family = family_from_name(trim(parts[0]));
    try {
        entry.count = std::stoi(trim(parts[1]));
    } catch (const std::exception&) {
        bad_entry(text, "count is not an integer");
    }
    if (entry.count < 1) bad_entry(text, "count must be positive");

    IntRange n, a, b, p, q;
    double prob = 0.5;
    if (parts.size() == 3) {
        for (const std::string& raw : split(parts[2], ',')) {
            const std::string param = trim(raw);
            if (param.empty()) continue;
            const auto eq = param.find('=');
            if (eq == std::string::npos) bad_entry(text, "parameter '" + param + "' lacks '='");
            const std::string key = trim(param.substr(0, eq));
            const std::string value = trim(param.substr(eq + 1));
            if (key == "prob") {
                try {
                    prob = std::stod(value);
                } catch (const std::exception&) {
                    bad_entry(text, "prob is not a number");
                }
                continue;
            }
            IntRange* target = key == "n"   ? &n
                               : key == "a" ? &a
                               : key == "b" ? &b
                               : key == "p" ? &p
                               : key == "q" ? &q
                                            : nullptr;
            if (target == nullptr) bad_entry(text, "unknown parameter '" + key + "'");
            try {
                const auto dots = value.find("..");
                if (dots == std::string::npos) {
                    target->lo = target->hi = std::stoi(value);
                } else {
                    target->lo = std::stoi(value.substr(0, dots));
                    target->hi = std::stoi(value.substr(dots + 2));
                }
            } catch (const std::exception&) {
                bad_entry(text, "parameter '" + key + "' is not an integer or lo..hi range");
            }
            if (target->lo > target->hi) bad_entry(text, "empty range for '" + key + "'");
            target->set = true;
        }
    }

    const bool needs_n = entry.family == Family::path || entry.family == Family::cycle ||
                         entry.family == Family::complete || entry.family == Family::star ||
                         entry.family == Family::random_connected ||
                         entry.family == Family::random_tree;
    const bool needs_ab = entry.family == Family::complete_bipartite ||
                          entry.family == Family::random_bipartite;
    const bool needs_pq = entry.family == Family::nanotorus;
    if (needs_n && !n.set) bad_entry(text, "missing parameter n");
    if (needs_ab && !(a.set && b.set)) bad_entry(text, "missing parameters a and b");
    if (needs_pq && !(p.set && q.set)) bad_entry(text, "missing parameters p and q");

    entry.n_lo = n.lo; entry.n_hi = n.hi;
    entry.a_lo = a.lo; entry.a_hi = a.hi;
    entry.b_lo = b.lo; entry.b_hi = b.hi;
    entry.p_lo = p.lo; entry.p_hi = p.hi;
    entry.q_lo = q.lo; entry.q_hi = q.hi;
    entry.prob = prob;
    return entry;
}

namespace {

bool is_random_family(Family f) {
    return f == Family::random_connected || f == Family::random_tree ||
           f == Family::random_bipartite;
}

bool known_vertex_transitive(const FamilyEntry& entry, const FamilySpec& spec) {
    switch (entry.family) {
        case Family::cycle:
        case Family::complete:
        case Family::nanotorus:
            return true;
        case Family::complete_bipartite:
            return spec.a == spec.b;
        default:
            return false;
    }
}

std::string spec_id(const FamilyEntry& entry, const FamilySpec& spec, int index) {
    std::string id = std::string(family_name(entry.family)) + "[" + std::to_string(index) + "]{";
    bool first = true;
    auto add = [&](const std::string& key, const std::string& value) {
        if (!first) id += ',';
        id += key + "=" + value;
        first = false;
    };
    switch (entry.family) {
        case Family::path:
        case Family::cycle:
        case Family::complete:
        case Family::star:
        case Family::random_tree:
        case Family::random_connected:
            add("n", std::to_string(spec.n));
            break;
        case Family::complete_bipartite:
        case Family::random_bipartite:
            add("a", std::to_string(spec.a));
            add("b", std::to_string(spec.b));
            break;
        case Family::nanotorus:
            add("p", std::to_string(spec.p));
            add("q", std::to_string(spec.q));
            break;
    }
    if (entry.family == Family::random_connected || entry.family == Family::random_bipartite) {
        std::ostringstream oss;
        oss << entry.prob;
        add("prob", oss.str());
    }
    if (is_random_family(entry.family)) add("seed", std::to_string(spec.seed));
    id += '}';
    return id;
}

// Expands a path that may contain '*' wildcards in its filename component.
std::vector<std::string> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    if (pattern.find('*') == std::string::npos) return {pattern};

    const fs::path p(pattern);
    const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    const std::string name_pattern = p.filename().string();

    auto matches = [](const std::string& name, const std::string& pat) {
        // Greedy '*' matcher over the filename only.
        std::size_t n = 0, w = 0, star = std::string::npos, backtrack = 0;
        while (n < name.size()) {
            if (w < pat.size() && (pat[w] == name[n])) {
                ++n; ++w;
            } else if (w < pat.size() && pat[w] == '*') {
                star = w++;
                backtrack = n;
            } else if (star != std::string::npos) {
                w = star + 1;
                n = ++backtrack;
            } else {
                return false;
            }
        }
        while (w < pat.size() && pat[w] == '*') ++w;
        return w == pat.size();
    };

    std::vector<std::string> found;
    std::error_code ec;
    for (const auto& dirent : fs::directory_iterator(dir, ec)) {
        if (!dirent.is_regular_file()) continue;
        if (matches(dirent.path().filename().string(), name_pattern))
            found.push_back(dirent.path().string());
    }
    if (ec) throw std::invalid_argument("cannot read directory for pattern: " + pattern);
    std::sort(found.begin(), found.end());
    if (found.empty()) throw std::invalid_argument("no files match pattern: " + pattern);
    return found;
}

}  // namespace

std::vector<CorpusItem> corpus_graphs(const CorpusConfig& cfg) {
    std::vector<CorpusItem> corpus;
    std::uint64_t global_index = 0;

    for (const std::string& family_text : cfg.families) {
        const FamilyEntry entry = parse_family_entry(family_text);
        for (int i = 0; i < entry.count; ++i, ++global_index) {
            SplitMix64 rng(derive_seed(cfg.seed, global_index));
            FamilySpec spec;
            spec.family = entry.family;
            spec.prob = entry.prob;
            auto draw = [&rng](int lo, int hi) {
                return lo == hi ? lo : static_cast<int>(rng.next_in(lo, hi));
            };
            spec.n = draw(entry.n_lo, entry.n_hi);
            spec.a = draw(entry.a_lo, entry.a_hi);
            spec.b = draw(entry.b_lo, entry.b_hi);
            spec.p = draw(entry.p_lo, entry.p_hi);
            spec.q = draw(entry.q_lo, entry.q_hi);
            spec.seed = rng.next();
            corpus.push_back({generate(spec), spec_id(entry, spec, i),
                              known_vertex_transitive(entry, spec)});
        }
    }

    for (const std::string& pattern : cfg.files) {
        for (const std::string& path : expand_glob(pattern)) {
            const auto graphs = load_graph_file(path);
            for (std::size_t k = 0; k < graphs.size(); ++k)
                corpus.push_back({graphs[k], path + ":" + std::to_string(k + 1), false});
        }
    }
    return corpus;
}

namespace {

void tally(CorpusSummary& summary, const VerificationRecord& r) {
    ++summary.records;
    if (r.holds) ++summary.holds; else ++summary.violations;
    if (r.equality) ++summary.equalities;
    if (r.regular) ++summary.regular;
    if (!r.consistency) ++summary.consistency_failures;
}

void emit(std::ostream& out, CorpusSummary& summary, const VerificationRecord& r) {
    tally(summary, r);
    out << record_to_json(r) << '\n';
}

void emit_summary(std::ostream& out, const CorpusSummary& summary, double tol) {
    nlohmann::ordered_json j;
    j["summary"]["records"] = summary.records;
    j["summary"]["holds"] = summary.holds;
    j["summary"]["violations"] = summary.violations;
    j["summary"]["equalities"] = summary.equalities;
    j["summary"]["regular"] = summary.regular;
    j["summary"]["consistency_failures"] = summary.consistency_failures;
    j["summary"]["tolerance"] = tol;
    out << j.dump() << '\n';
}

}  // namespace

CorpusSummary run_corpus(const CorpusConfig& cfg, std::ostream& report) {
    if (cfg.families.empty() && cfg.files.empty())
        throw std::invalid_argument("corpus config names no graph source (families or files)");
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!cfg.all_kinds && cfg.kinds.empty()) throw std::invalid_argument("no weight kinds selected");
    if (!cfg.all_theorems && cfg.theorems.empty()) throw std::invalid_argument("no theorems selected");
    if (cfg.format != "jsonl") throw std::invalid_argument("unsupported report format: " + cfg.format);

    const std::vector<WeightKind> kinds =
        cfg.all_kinds ? std::vector<WeightKind>(all_weight_kinds.begin(), all_weight_kinds.end())
                      : cfg.kinds;
    const std::vector<TheoremTag> theorems =
        cfg.all_theorems ? std::vector<TheoremTag>{TheoremTag::upper_bound, TheoremTag::bipartite_lower,
                                                   TheoremTag::sandwich, TheoremTag::vt_equality}
                         : cfg.theorems;

    CorpusSummary summary;
    for (const CorpusItem& item : corpus_graphs(cfg)) {
        const Graph& g = item.graph;
        const bool connected = is_connected(g);
        const bool bipartite_graph = bipartition(g).bipartite;
        const double e = graph_energy(g);
        std::optional<DistanceMatrix> dist;
        if (connected) dist.emplace(distance_matrix(g));

        for (TheoremTag theorem : theorems) {
            // In --theorem all mode a tag that does not apply to this graph is
            // skipped; an explicitly requested tag is enforced and errors out.
            if (theorem == TheoremTag::vt_equality) {
                if (cfg.all_theorems && !item.vertex_transitive) continue;
                if (!connected) {
                    if (cfg.all_theorems) continue;
                    require_connected(g, "vt_equality");
                }
                VerificationRecord r = make_vt_record(g, e, *dist, cfg.tolerance);
                r.graph_id = item.id;
                emit(report, summary, r);
                continue;
            }

            const bool needs_bipartite = theorem != TheoremTag::upper_bound;
            if (needs_bipartite && !bipartite_graph) {
                if (cfg.all_theorems) continue;
                require_bipartite(g, theorem_name(theorem));
            }
            if (theorem == TheoremTag::upper_bound && !connected) {
                if (cfg.all_theorems) continue;
                require_connected(g, "upper_bound");
            }

            for (WeightKind kind : kinds) {
                if (is_distance_based(kind) && !connected) {
                    if (cfg.all_kinds) continue;
                    require_connected(g, weight_kind_name(kind));
                }
                const KindValues values = eval_kind(g, kind, e, dist ? &*dist : nullptr);
                VerificationRecord r;
                switch (theorem) {
                    case TheoremTag::upper_bound: r = make_upper_bound_record(values, cfg.tolerance); break;
                    case TheoremTag::bipartite_lower: r = make_bipartite_lower_record(values, cfg.tolerance); break;
                    default: r = make_sandwich_record(values, cfg.tolerance); break;
                }
                r.graph_id = item.id;
                r.kind = weight_kind_name(kind);
                emit(report, summary, r);
            }
        }
    }
    emit_summary(report, summary, cfg.tolerance);
    return summary;
}

CorpusSummary run_self_test(double tol, std::ostream& report) {
    // Negative control on a known equality case: C4 with the degree weight is
    // regular, so E = LE = 4 and n*MD = 0. Corrupting LE by +0.1 must surface
    // as a failed record; a harness that cannot fail would pass vacuously.
    FamilySpec spec;
    spec.family = Family::cycle;
    spec.n = 4;
    const Graph c4 = generate(spec);
    const double e = graph_energy(c4);
    KindValues values = eval_kind(c4, WeightKind::deg, e, nullptr);
    values.le += 0.1;

    CorpusSummary summary;

    VerificationRecord upper = make_upper_bound_record(values, tol);
    upper.graph_id = "self_test:cycle[0]{n=4}";
    upper.kind = weight_kind_name(WeightKind::deg);
    upper.note = "self-test: LE corrupted by +0.1";
    emit(report, summary, upper);

    VerificationRecord lower = make_bipartite_lower_record(values, tol);
    lower.graph_id = "self_test:cycle[0]{n=4}";
    lower.kind = weight_kind_name(WeightKind::deg);
    lower.note = "self-test: LE corrupted by +0.1";
    emit(report, summary, lower);

    emit_summary(report, summary, tol);
    return summary;
}

namespace {

void apply_config_line(CorpusConfig& cfg, const std::string& key, const std::string& value) {
    auto parse_list = [](const std::string& v, char sep) {
        std::vector<std::string> out;
        for (const std::string& piece : split(v, sep)) {
            const std::string t = trim(piece);
            if (!t.empty()) out.push_back(t);
        }
        return out;
    };

    if (key == "families") {
        for (auto& s : parse_list(value, ';')) cfg.families.push_back(s);
    } else if (key == "files") {
        for (auto& s : parse_list(value, ';'))
            for (auto& piece : parse_list(s, ',')) cfg.files.push_back(piece);
    } else if (key == "kinds") {
        if (trim(value) == "all") {
            cfg.all_kinds = true;
            cfg.kinds.clear();
        } else {
            cfg.all_kinds = false;
            for (auto& s : parse_list(value, ',')) {
                const auto kind = weight_kind_from_name(s);
                if (!kind) throw std::invalid_argument("unknown weight kind: " + s);
                cfg.kinds.push_back(*kind);
            }
        }
    } else if (key == "theorems") {
        if (trim(value) == "all") {
            cfg.all_theorems = true;
            cfg.theorems.clear();
        } else {
            cfg.all_theorems = false;
            for (auto& s : parse_list(value, ',')) {
                const auto tag = theorem_from_name(s);
                if (!tag) throw std::invalid_argument("unknown theorem tag: " + s);
                cfg.theorems.push_back(*tag);
            }
        }
    } else if (key == "tolerance" || key == "tol") {
        cfg.tolerance = std::stod(value);
    } else if (key == "seed") {
        cfg.seed = std::stoull(value);
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        cfg.format = value;
    } else {
        throw std::invalid_argument("unknown config key: " + key);
    }
}

}  // namespace

CorpusConfig parse_corpus_config(std::istream& in) {
    CorpusConfig cfg;
    cfg.all_theorems = true;  // theorems default to "all applicable"
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not 'key = value'");
        try {
            apply_config_line(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
        } catch (const std::exception& err) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    return cfg;
}

CorpusConfig load_corpus_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_corpus_config(in);
}

}  // namespace wle
