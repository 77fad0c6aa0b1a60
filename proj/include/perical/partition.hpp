#pragma once

#include <string>
#include <vector>

namespace perical {

// Integer partition (n_1 >= n_2 >= ... >= n_k >= 1). The empty partition is
// the unit. Weight is the sum of parts; for degree-2 generators the
// cohomological degree is twice the weight.
class Partition {
public:
    Partition() = default;

    // Parts must be positive; they are sorted into non-increasing order.
    static Partition of(std::vector<int> parts);

    // Accepts "(2,1,1)", "()" and the power notation "((2)^1,(1)^2)".
    // Power notation requires strictly decreasing bases.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(size_t i) const { return parts_[i]; }

    // Multiplicity-run view: pairs (value, multiplicity), values decreasing.
    std::vector<std::pair<int, int>> runs() const;

    Partition conjugate() const;

    std::string str() const;         // "(2,1,1)", "()"
    std::string str_powers() const;  // "((2)^1,(1)^2)"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
};

// Lexicographic comparison from the left, strings padded with zeros on the
// right. Returns -1, 0, 1.
int compare_lex(const Partition& a, const Partition& b);

// Strict "greater" in the lex order; the canonical term order used for
// printing and triangular elimination is descending.
struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const
    {
        return compare_lex(a, b) > 0;
    }
};

}  // namespace perical
