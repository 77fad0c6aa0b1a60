#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perical/linalg.hpp"

namespace perical {

// Point of rational projective space: primitive integer coordinates with the
// first nonzero one positive.
struct ProjPoint {
    std::vector<long> coords;

    bool operator==(const ProjPoint&) const = default;
    auto operator<=>(const ProjPoint&) const = default;

    std::string str() const;
};

ProjPoint normalize(const std::vector<mpq_class>& v);
ProjPoint normalize_int(std::vector<long> v);

struct Configuration {
    int dim = 2;  // ambient projective dimension; coordinates have dim+1 entries
    std::vector<ProjPoint> points;

    static Configuration make(int dim, std::vector<ProjPoint> pts);
};

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Linear rank of the coordinate matrix (projective span dim = rank - 1).
int span_rank(const std::vector<ProjPoint>& pts);

struct OrdinaryLine {
    size_t i, j;  // the two configuration points spanning the line
};
struct CollinearCertificate {
    int rank;  // <= 2
};
using SylvesterGallaiResult = std::variant<OrdinaryLine, CollinearCertificate>;

// Either a line containing exactly two configuration points, or the rank
// certificate that all points are collinear. Needs at least two points.
SylvesterGallaiResult sylvester_gallai_witness(const Configuration& cfg);

struct HansenWitness {
    std::vector<size_t> hyperplane_points;  // indices of points on the hyperplane
    std::vector<size_t> subspace_points;    // all but one, in a (d-2)-subspace
    size_t exceptional;
};

// Hyperplane spanned by configuration points whose incident points, except
// exactly one, lie in a codimension-2 subspace. The input must span; for
// spanning rational configurations the theorem guarantees a witness, so a
// failure to find one signals an implementation bug.
HansenWitness hansen_witness(const Configuration& cfg);

struct LineCheckResult {
    bool ok = true;
    // On failure, the pair spanning the violating line.
    std::optional<std::pair<ProjPoint, ProjPoint>> violating_line;
};

// The two bullet conditions on an S^2-vertex configuration: every line
// through two Omega-points meets N, every line through an Omega-point and an
// N-point meets Omega again. Point sets must be disjoint.
LineCheckResult s2comb_check(const Configuration& omega, const Configuration& nset);

// The strengthened conditions from the bounded-dimension argument: on every
// line through two Omega-points lies a third point of Omega union N, and on
// every line through an Omega-point and an N-point lies another Omega-point.
LineCheckResult extended_sg_check(const Configuration& omega, const Configuration& nset);

struct DimensionBoundReport {
    int dim = 0;
    int grid = 0;
    int max_points = 0;
    long configurations_checked = 0;
    long satisfiable = 0;
    int max_span_rank = 0;  // over satisfiable Omega sets (linear rank)
};

// Exhaustively scans Omega subsets of the normalized grid {-grid..grid}^{d+1}
// (up to max_points points) for which some grid-based N completes an
// s2comb-satisfying pair, and records the maximal span. Empirical
// confirmation at desk scale, not a proof.
DimensionBoundReport dimension_bound_search(int dim, int grid, int max_points = 8);

// All distinct normalized grid points of P^dim with coordinates in
// {-grid..grid}.
std::vector<ProjPoint> grid_points(int dim, int grid);

// Search for a non-collinear subset (at most max_points points) of the given
// ground set in which every connecting line carries a third point, i.e. a
// Sylvester-Gallai counterexample. Returns nullopt when none exists (the
// theorem); used as the exhaustive acceptance sweep.
std::optional<std::vector<ProjPoint>> sylvester_gallai_counterexample(
    const std::vector<ProjPoint>& ground, int max_points);

}  // namespace perical
