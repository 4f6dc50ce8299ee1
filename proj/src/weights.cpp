#include "wle/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wle {

const char* weight_kind_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::deg: return "deg";
        case WeightKind::tr: return "tr";
        case WeightKind::two_degree: return "two_degree";
        case WeightKind::deg2: return "deg2";
        case WeightKind::ecc: return "ecc";
        case WeightKind::deg3: return "deg3";
    }
    return "?";
}

std::optional<WeightKind> weight_kind_from_name(std::string_view name) {
    for (WeightKind kind : all_weight_kinds)
        if (name == weight_kind_name(kind)) return kind;
    return std::nullopt;
}

bool is_distance_based(WeightKind kind) {
    return kind == WeightKind::tr || kind == WeightKind::ecc;
}

double WeightVector::mean() const {
    if (values.empty()) throw std::invalid_argument("weight vector is empty");
    double total = 0.0;
    for (double v : values) total += v;
    return total / static_cast<double>(values.size());
}

WeightVector weight_vector(const Graph& g, WeightKind kind) {
    if (is_distance_based(kind)) return weight_vector(g, kind, distance_matrix(g));
    const int n = g.vertex_count();
    WeightVector w;
    w.kind = kind;
    w.values.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const double d = g.degree(v);
        switch (kind) {
            case WeightKind::deg: w.values[static_cast<std::size_t>(v)] = d; break;
            case WeightKind::deg2: w.values[static_cast<std::size_t>(v)] = d * d; break;
            case WeightKind::deg3: w.values[static_cast<std::size_t>(v)] = d * d * d; break;
            case WeightKind::two_degree: {
                long long t = 0;
                for (int u : g.neighbors(v)) t += g.degree(u);
                w.values[static_cast<std::size_t>(v)] = static_cast<double>(t);
                break;
            }
            default: break;
        }
    }
    return w;
}

WeightVector weight_vector(const Graph& g, WeightKind kind, const DistanceMatrix& dist) {
    if (!is_distance_based(kind)) return weight_vector(g, kind);
    if (dist.order() != g.vertex_count())
        throw std::invalid_argument("distance matrix order does not match graph");
    const int n = g.vertex_count();
    WeightVector w;
    w.kind = kind;
    w.values.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        w.values[static_cast<std::size_t>(v)] =
            kind == WeightKind::tr ? static_cast<double>(dist.row_sum(v))
                                   : static_cast<double>(dist.row_max(v));
    return w;
}

long long wiener(const Graph& g) {
    const auto dist = distance_matrix(g);
    long long total = 0;
    for (int v = 0; v < dist.order(); ++v) total += dist.row_sum(v);
    return total / 2;
}

long long first_zagreb(const Graph& g) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const long long d = g.degree(v);
        total += d * d;
    }
    return total;
}

long long total_eccentricity(const Graph& g) {
    const auto dist = distance_matrix(g);
    long long total = 0;
    for (int v = 0; v < dist.order(); ++v) total += dist.row_max(v);
    return total;
}

int radius(const Graph& g) {
    const auto dist = distance_matrix(g);
    int best = dist.row_max(0);
    for (int v = 1; v < dist.order(); ++v) best = std::min(best, dist.row_max(v));
    return best;
}

int diameter(const Graph& g) {
    const auto dist = distance_matrix(g);
    int best = 0;
    for (int v = 0; v < dist.order(); ++v) best = std::max(best, dist.row_max(v));
    return best;
}

long long forgotten(const Graph& g) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const long long d = g.degree(v);
        total += d * d * d;
    }
    return total;
}

IndexReport index_report(const Graph& g) {
    const auto dist = distance_matrix(g);
    IndexReport r;
    r.first_zagreb = first_zagreb(g);
    r.forgotten = forgotten(g);
    long long transmissions = 0;
    int ecc_min = dist.row_max(0), ecc_max = 0;
    for (int v = 0; v < dist.order(); ++v) {
        transmissions += dist.row_sum(v);
        const int e = dist.row_max(v);
        r.total_eccentricity += e;
        ecc_min = std::min(ecc_min, e);
        ecc_max = std::max(ecc_max, e);
    }
    r.wiener = transmissions / 2;
    r.radius = ecc_min;
    r.diameter = ecc_max;
    return r;
}

double mean_deviation(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean deviation of an empty vector");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double total = 0.0;
    for (double v : values) total += std::abs(v - mean);
    return total / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("variance of an empty vector");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double total = 0.0;
    for (double v : values) total += (v - mean) * (v - mean);
    return total / static_cast<double>(values.size());
}

double mean_deviation(const WeightVector& w) { return mean_deviation(std::span<const double>(w.values)); }

double variance(const WeightVector& w) { return variance(std::span<const double>(w.values)); }

bool is_regular(const WeightVector& w, double tol) {
    const double mean = w.mean();
    return std::all_of(w.values.begin(), w.values.end(),
                       [&](double v) { return std::abs(v - mean) <= tol; });
}

}  // namespace wle
