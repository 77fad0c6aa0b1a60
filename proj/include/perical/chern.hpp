#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "perical/partition.hpp"
#include "perical/symfunc.hpp"

namespace perical {

// Integer polynomial in the elementary symmetric functions e_k = ((1)^k),
// i.e. the universal Chern classes. A term c_{k_1}...c_{k_r} is keyed by the
// index multiset {k_1,...,k_r} stored as a partition.
class ChernPoly {
public:
    using TermMap = std::map<Partition, mpz_class, LexGreater>;

    ChernPoly() = default;
    explicit ChernPoly(const Partition& indices, mpz_class coeff = 1);

    static ChernPoly one() { return ChernPoly(Partition()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(const Partition& indices) const;

    void add_term(const Partition& indices, const mpz_class& c);

    ChernPoly& operator+=(const ChernPoly& o);
    ChernPoly operator+(const ChernPoly& o) const;
    ChernPoly operator*(const mpz_class& c) const;
    bool operator==(const ChernPoly& o) const { return terms_ == o.terms_; }

    // 2 * (sum of indices) per term; present iff all terms agree.
    std::optional<int> homogeneous_degree() const;

    std::string str() const;  // "c6 + 2 c3^2 - c2 c1"

private:
    TermMap terms_;
};

// Triangular elimination against the descending lex order. The input must be
// homogeneous. When mod is given, coefficients are reduced at every step.
ChernPoly monomial_to_elementary(const SymFunc& f, std::optional<int> mod = std::nullopt);

// Inverse conversion: expand every product of e_k via mult_monomial.
SymFunc elementary_to_monomial(const ChernPoly& g, std::optional<int> mod = std::nullopt);

}  // namespace perical
