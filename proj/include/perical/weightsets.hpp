#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace perical {

// Sign-normalized weight of a T^4-representation: entries in {-1,0,1} once a
// set containing the standard basis satisfies the determinant condition, and
// the first nonzero coordinate is +1.
struct Weight4 {
    std::array<int, 4> c{0, 0, 0, 0};

    static Weight4 normalized(std::array<int, 4> v);

    bool operator==(const Weight4&) const = default;
};

// Fixed global order: standard basis first, then the remaining normalized
// vectors ordered by coordinate tuples with 0 < -1 < 1 per slot. Only
// vectors with entries in {-1,0,1} have a rank.
int global_rank(const Weight4& w);
const std::vector<Weight4>& full_list();

// Weight set containing the standard basis, kept sorted by global rank.
class WeightSet {
public:
    WeightSet() = default;
    // Validates: entries in {-1,0,1}, normalized, contains the basis, no
    // duplicates, and condition (star).
    static WeightSet make(std::vector<Weight4> weights);
    // The standard basis e_1..e_4.
    static WeightSet basis();

    const std::vector<Weight4>& weights() const { return w_; }
    size_t size() const { return w_.size(); }

    bool operator==(const WeightSet&) const = default;
    bool operator<(const WeightSet& o) const;  // lex on global ranks

    std::string str() const;

private:
    std::vector<Weight4> w_;
    friend WeightSet unchecked_set(std::vector<Weight4> sorted);
};

// Condition (star): every 4-subset has determinant in {-1,0,1}.
bool star_check(const std::vector<Weight4>& ws);

// All extensions of each input by one vector strictly later in the global
// order that still satisfy (star). Inputs must share one size.
std::vector<WeightSet> extend(const std::vector<WeightSet>& level);

// Lexicographically minimal set in the orbit under basis changes drawn from
// unimodular 4-subsets of the set itself, composed with sign diagonals and
// per-weight sign normalization. Idempotent and constant on orbits.
WeightSet canonical_form(const WeightSet& ws);

bool equivalent(const WeightSet& a, const WeightSet& b);

// A 3-dimensional subspace meeting the set in exactly three linearly
// independent weights, reported by an integer normal vector; searching spans
// of independent 3-subsets is exhaustive because any witness subspace is
// spanned by the three weights it contains.
std::optional<std::array<int, 4>> splitting_t3(const WeightSet& ws);

struct ClassificationTable {
    struct Entry {
        WeightSet set;  // canonical representative
        bool splitting;
    };
    std::vector<Entry> classes;              // sorted by (size, lex)
    std::map<int, int> histogram_by_size() const;
    int splitting_count() const;
};

// Level-by-level extension from the standard basis with canonical-form
// deduplication, until no set extends.
ClassificationTable classify_all(int jobs = 1);

long det4(const Weight4& a, const Weight4& b, const Weight4& c, const Weight4& d);

}  // namespace perical
