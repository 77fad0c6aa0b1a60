#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "perical/linalg.hpp"

namespace perical {

using RatVec = std::vector<mpq_class>;
using RatMat = std::vector<RatVec>;

// Multiset of nonzero rational weight vectors in Q^d.
struct WeightMultiset {
    std::vector<RatVec> weights;
};

// Three edge weight multisets of a GKM-style triangle, of common size m.
struct Triangle {
    WeightMultiset A, B, C;

    static Triangle make(WeightMultiset a, WeightMultiset b, WeightMultiset c);
    int ambient_dim() const;
    int m() const { return static_cast<int>(A.weights.size()); }
};

struct AxiomCheckResult {
    bool ok = true;
    std::string reason;
};

// Frozen combinatorial axioms: equal sizes, and for every 2-plane spanned by
// one weight from each of two different sets the three sets meet it in
// equally many weights (with multiplicity).
AxiomCheckResult triangle_axioms_check(const Triangle& t);

// Whether the three degree-m products of the edge weights are linearly
// dependent in Q[x_1..x_d].
bool lindep_products_check(const Triangle& t);

enum class TriangleKind { Type1, Type2, NotTransversal, AxiomViolation };

std::string to_string(TriangleKind k);

struct TriangleClassification {
    TriangleKind kind = TriangleKind::AxiomViolation;
    std::string reason;  // set for AxiomViolation

    // Normal-form parameters in input coordinates (c is zero or independent
    // of a and b). Valid for Type1/Type2.
    RatVec a, b, c;

    // Invertible matrix sending a -> e1, b -> e2, (c -> e3 when nonzero);
    // together with the per-weight scalars it carries the input onto the
    // normal form exactly.
    RatMat basis_change;
    std::vector<mpq_class> scalars_a, scalars_b, scalars_c;

    // The transformed weights, for direct inspection.
    std::vector<RatVec> normal_a, normal_b, normal_c;
};

// Constructive classification following the transversal-weights argument:
// NotTransversal when one span contains the other, otherwise Type1/Type2
// with an explicit change of basis, or AxiomViolation when an intermediate
// construction cannot be completed.
TriangleClassification triangle_classify(const Triangle& t);

// Applies an invertible matrix and per-weight scalars; test helper for the
// invariance properties.
Triangle transform_triangle(const Triangle& t, const RatMat& m,
                            const std::vector<mpq_class>& sa,
                            const std::vector<mpq_class>& sb,
                            const std::vector<mpq_class>& sc);

}  // namespace perical
