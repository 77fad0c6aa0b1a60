#include "perical/matching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace perical {

Matching::Matching(std::vector<Column> cols) : cols_(std::move(cols))
{
    for (const auto& c : cols_) {
        if (c.top < 0 || c.bottom < 0 || (c.top == 0 && c.bottom == 0))
            throw std::invalid_argument("matching column must be nonnegative and not (0,0)");
    }
    std::sort(cols_.begin(), cols_.end(), [](const Column& a, const Column& b) {
        int sa = a.top + a.bottom, sb = b.top + b.bottom;
        if (sa != sb)
            return sa > sb;
        return a.top > b.top;
    });
}

Partition Matching::target() const
{
    std::vector<int> sums;
    sums.reserve(cols_.size());
    for (const auto& c : cols_)
        sums.push_back(c.top + c.bottom);
    return Partition::of(std::move(sums));
}

Partition Matching::top_partition() const
{
    std::vector<int> t;
    for (const auto& c : cols_)
        if (c.top > 0)
            t.push_back(c.top);
    return Partition::of(std::move(t));
}

Partition Matching::bottom_partition() const
{
    std::vector<int> b;
    for (const auto& c : cols_)
        if (c.bottom > 0)
            b.push_back(c.bottom);
    return Partition::of(std::move(b));
}

mpz_class Matching::coefficient() const
{
    // Blocks are maximal runs of equal column sum (columns are canonical).
    mpz_class result = 1;
    size_t i = 0;
    while (i < cols_.size()) {
        size_t j = i;
        int sum = cols_[i].top + cols_[i].bottom;
        std::map<std::pair<int, int>, unsigned long> type_counts;
        while (j < cols_.size() && cols_[j].top + cols_[j].bottom == sum) {
            ++type_counts[{cols_[j].top, cols_[j].bottom}];
            ++j;
        }
        mpz_class block;
        mpz_fac_ui(block.get_mpz_t(), static_cast<unsigned long>(j - i));
        for (const auto& [type, cnt] : type_counts) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), cnt);
            block /= f;
        }
        result *= block;
        i = j;
    }
    return result;
}

namespace {

    // Distribute, for each distinct top value, a sub-multiset of the
    // remaining bottom values (unfilled slots pair with zero), then emit the
    // leftover bottoms as fresh columns.
    void enumerate_rec(const std::vector<std::pair<int, int>>& top_runs, size_t ti,
                       std::vector<std::pair<int, int>>& bottom_avail,
                       std::vector<Matching::Column>& cols, std::vector<Matching>& out)
    {
        if (ti == top_runs.size()) {
            std::vector<Matching::Column> final_cols = cols;
            for (const auto& [val, cnt] : bottom_avail)
                for (int j = 0; j < cnt; ++j)
                    final_cols.push_back({0, val});
            out.emplace_back(std::move(final_cols));
            return;
        }

        auto [top_val, top_cnt] = top_runs[ti];

        // Choose usage u_j of each bottom value, sum <= top_cnt.
        std::vector<int> usage(bottom_avail.size(), 0);
        auto choose = [&](auto&& self, size_t bi, int remaining) -> void {
            if (bi == bottom_avail.size()) {
                size_t base = cols.size();
                for (size_t j = 0; j < bottom_avail.size(); ++j) {
                    for (int u = 0; u < usage[j]; ++u)
                        cols.push_back({top_val, bottom_avail[j].first});
                    bottom_avail[j].second -= usage[j];
                }
                int zeros = remaining;
                for (int z = 0; z < zeros; ++z)
                    cols.push_back({top_val, 0});
                enumerate_rec(top_runs, ti + 1, bottom_avail, cols, out);
                for (size_t j = 0; j < bottom_avail.size(); ++j)
                    bottom_avail[j].second += usage[j];
                cols.resize(base);
                return;
            }
            int cap = std::min(bottom_avail[bi].second, remaining);
            for (int u = 0; u <= cap; ++u) {
                usage[bi] = u;
                self(self, bi + 1, remaining - u);
            }
            usage[bi] = 0;
        };
        choose(choose, 0, top_cnt);
    }

}  // namespace

std::vector<Matching> enumerate_matchings(const Partition& pn, const Partition& pm)
{
    std::vector<Matching> out;
    auto top_runs = pn.runs();
    auto bottom_avail = pm.runs();
    std::vector<Matching::Column> cols;
    enumerate_rec(top_runs, 0, bottom_avail, cols, out);

    std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
        int c = compare_lex(a.target(), b.target());
        if (c != 0)
            return c > 0;
        return a.columns() < b.columns();
    });
    return out;
}

}  // namespace perical
