#pragma once

#include <gmpxx.h>

#include <vector>

#include "perical/partition.hpp"

namespace perical {

// One equivalence class of contributing terms in the product of two
// monomial symmetric functions, encoded as a two-row exponent matrix.
// Canonical column order: decreasing top+bottom, ties by decreasing top.
// Columns (0,0) are never stored.
class Matching {
public:
    struct Column {
        int top = 0;
        int bottom = 0;
        bool operator==(const Column&) const = default;
        auto operator<=>(const Column&) const = default;
    };

    explicit Matching(std::vector<Column> cols);

    const std::vector<Column>& columns() const { return cols_; }

    // Column sums, sorted: the basis element this class contributes to.
    Partition target() const;

    Partition top_partition() const;
    Partition bottom_partition() const;

    // Number of matchings in the class: the product over constant-sum
    // blocks of multinomial(r_i; (r_{a,b} | a+b = o_i)).
    mpz_class coefficient() const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<Column> cols_;
};

// Every contributing class of pn*pm, each in canonical form, no duplicates.
// Deterministic order: by target partition (descending lex), then by column
// content.
std::vector<Matching> enumerate_matchings(const Partition& pn, const Partition& pm);

}  // namespace perical
