#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wle/graph.hpp"

namespace wle {

// The six vertex weights: degree, transmission, 2-degree (sum of neighbor
// degrees), squared degree, eccentricity, cubed degree.
enum class WeightKind { deg, tr, two_degree, deg2, ecc, deg3 };

inline constexpr std::array<WeightKind, 6> all_weight_kinds = {
    WeightKind::deg,  WeightKind::tr,  WeightKind::two_degree,
    WeightKind::deg2, WeightKind::ecc, WeightKind::deg3,
};

const char* weight_kind_name(WeightKind kind);
std::optional<WeightKind> weight_kind_from_name(std::string_view name);

// True for tr and ecc, which need all-pairs distances (and a connected graph).
bool is_distance_based(WeightKind kind);

struct WeightVector {
    WeightKind kind = WeightKind::deg;
    std::vector<double> values;
    double mean() const;
};

WeightVector weight_vector(const Graph& g, WeightKind kind);
// Variant reusing an already computed distance matrix for tr/ecc.
WeightVector weight_vector(const Graph& g, WeightKind kind, const DistanceMatrix& dist);

// Topological indices. The distance-based ones (wiener, total_eccentricity,
// radius, diameter) reject disconnected graphs.
long long wiener(const Graph& g);
long long first_zagreb(const Graph& g);
long long total_eccentricity(const Graph& g);
int radius(const Graph& g);
int diameter(const Graph& g);
long long forgotten(const Graph& g);

struct IndexReport {
    long long wiener = 0;
    long long first_zagreb = 0;
    long long total_eccentricity = 0;
    long long forgotten = 0;
    int radius = 0;
    int diameter = 0;
};

IndexReport index_report(const Graph& g);

// Mean absolute deviation and population variance; two-pass, errors on empty
// input.
double mean_deviation(std::span<const double> values);
double variance(std::span<const double> values);
double mean_deviation(const WeightVector& w);
double variance(const WeightVector& w);

// A weight is regular when every value sits within tol of the mean.
bool is_regular(const WeightVector& w, double tol = 1e-9);

}  // namespace wle
