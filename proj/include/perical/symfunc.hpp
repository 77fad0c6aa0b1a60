#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perical/partition.hpp"

namespace perical {

// Integer linear combination of monomial symmetric functions, the additive
// basis of H*(BU). Terms are kept in descending lex order and zero
// coefficients are never stored.
class SymFunc {
public:
    using TermMap = std::map<Partition, mpz_class, LexGreater>;

    SymFunc() = default;
    explicit SymFunc(const Partition& p, mpz_class coeff = 1);

    static SymFunc zero() { return SymFunc(); }
    static SymFunc unit() { return SymFunc(Partition()); }

    // "(4,2,1) + 3(4,1,1,1) - 2(3,3,1)"; "0" denotes the zero function.
    static SymFunc parse(const std::string& text);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    mpz_class coeff(const Partition& p) const;

    // Present iff nonzero and all partitions share one weight.
    std::optional<int> homogeneous_weight() const;

    void add_term(const Partition& p, const mpz_class& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const mpz_class& c) const;
    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return terms_ != o.terms_; }

    std::string str() const;

private:
    TermMap terms_;
};

// Product of two basis elements via the matching calculus. Homogeneous of
// weight weight(pn)+weight(pm).
SymFunc mult_monomial(const Partition& pn, const Partition& pm);

// Bilinear extension of mult_monomial.
SymFunc mult(const SymFunc& f, const SymFunc& g);

// Coefficients reduced into {0,...,p-1}; p must be prime.
SymFunc reduce_mod(const SymFunc& f, int p);

bool is_prime(long n);

// Brute-force expansion into N commuting variables: full coefficient table
// keyed by exponent tuples of length N. N must be at least the maximal
// number of parts among the terms of f (the faithfulness threshold).
using ExpandTable = std::map<std::vector<int>, mpz_class>;
ExpandTable expand_oracle(const SymFunc& f, int nvars);

// Collect an expansion back into the monomial basis: read off the
// coefficients of non-increasing exponent tuples.
SymFunc collect_expansion(const ExpandTable& table);

// Plain polynomial product of two expansion tables (test oracle for mult).
ExpandTable expand_product(const ExpandTable& a, const ExpandTable& b);

// All partitions of the given weight, in descending lex order.
std::vector<Partition> partitions_of(int weight);

}  // namespace perical
