#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "perical/chern.hpp"
#include "perical/symfunc.hpp"

namespace perical {

// var_degree 2 models Chern generators (P^i raises weight by (p-1)i, and at
// p=2 P^i means Sq^{2i}); var_degree 1 models Stiefel-Whitney generators at
// p=2, where the same operation is the raw Sq^i.
struct PrimeContext {
    int p;
    int var_degree = 2;

    PrimeContext(int prime, int vdeg = 2);
};

// Generalized binomial: zero for k < 0, the usual convention for n < 0.
mpz_class binom(long n, long k);

// Reduced power P^i on the symmetric-function model: expand each term into
// as many variables as it has parts, apply the total power x -> x + x^p per
// variable, keep the weight-(w + (p-1)i) component and recollect. Input must
// be homogeneous; the result has coefficients in {0,...,p-1}.
SymFunc steenrod_power(const PrimeContext& ctx, int i, const SymFunc& f);

// f^p mod p: every part scales by p, coefficients are preserved.
SymFunc frobenius_power(const PrimeContext& ctx, const SymFunc& f);

// P^i(fg) = sum_{a+b=i} P^a(f) P^b(g) mod p.
bool verify_cartan(const PrimeContext& ctx, int i, const SymFunc& f, const SymFunc& g);

// Adem relation P^a P^b (a < pb) checked on every basis element of weight
// <= weight_bound.
bool verify_adem_instance(const PrimeContext& ctx, int a, int b, int weight_bound);

// Wu formula Sq^i(w_{k-i}) = sum_t binom(k-i-1-t, i-t) w_t w_{k-t} mod 2,
// with w_j = ((1)^j) on degree-1 generators. Requires 0 <= i <= k-i.
bool verify_wu(int k, int i);

// Coefficient of c_k in the Chern expansion of P^i(c_{k-(p-1)i}) mod p.
// Throws if it disagrees with binom(k-(p-1)i-1, i) mod p.
int bp_leading_coefficient(int p, int k, int i);

// Full Chern-basis expansion of P^i(c_source) mod p.
ChernPoly chern_coefficient_profile(const PrimeContext& ctx, int i, int source);

// Witness that c_k is, modulo products of lower degree Chern classes, a
// nonzero multiple of a reduced power of a lower Chern class. Eligible
// k = lambda p^i with p not dividing lambda and lambda > p.
struct DecompositionCertificate {
    int p = 0;
    int k = 0;
    int source_index = 0;
    int op_exponent = 0;   // the e of P^e applied to c_source
    int leading_coeff = 0; // nonzero element of F_p
    ChernPoly decomposable_part;
    bool verified = false;
};

DecompositionCertificate decompose_chern(int p, int k);

// S_l = { partitions with some multiplicity not divisible by p^l } spans an
// ideal: outside coefficients of inside-times-anything products vanish mod p.
bool verify_sl_ideal(int p, int l, int weight_bound);

// Arithmetic kernel of the improved going-down lemma: the degree bookkeeping
// a_j = ceil(j(p-1)/lambda) and the first a <= (p-1)/2 with
// [a*lambda]_{p-1} < a*lambda/p.
struct DescentTrace {
    int p = 0;
    long lambda = 0;
    struct Row {
        long j;
        long a;           // ceil(j(p-1)/lambda)
        long deg_factor;  // a*lambda - j(p-1)
    };
    std::vector<Row> rows;
    std::optional<long> witness_a;
};

DescentTrace descent_trace(int p, long lambda);

}  // namespace perical
