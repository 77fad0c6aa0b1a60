#include "perical/weightsets.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace perical {

Weight4 Weight4::normalized(std::array<int, 4> v)
{
    int lead = 0;
    for (int x : v)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead == 0)
        throw std::invalid_argument("weight must be nonzero");
    Weight4 w;
    for (int i = 0; i < 4; ++i)
        w.c[i] = lead < 0 ? -v[i] : v[i];
    return w;
}

namespace {

    // Slot order 0 < -1 < 1, matching the enumeration the table rows use.
    int slot_key(int x) { return x == 0 ? 0 : (x == -1 ? 1 : 2); }

    int small_code(const Weight4& w)
    {
        int code = 0;
        for (int i = 0; i < 4; ++i) {
            if (w.c[i] < -1 || w.c[i] > 1)
                return -1;
            code = code * 3 + slot_key(w.c[i]);
        }
        return code;  // 0..80
    }

    struct GlobalOrderTables {
        std::vector<Weight4> list;
        std::array<int, 81> rank_of_code;
        GlobalOrderTables()
        {
            rank_of_code.fill(-1);
            for (int i = 0; i < 4; ++i) {
                Weight4 e;
                e.c[i] = 1;
                list.push_back(e);
            }
            static const int vals[3] = {0, -1, 1};
            for (int a : vals)
                for (int b : vals)
                    for (int c : vals)
                        for (int d : vals) {
                            std::array<int, 4> v{a, b, c, d};
                            int nonzero = 0;
                            bool lead_pos = false;
                            for (int x : v)
                                if (x != 0) {
                                    if (nonzero == 0)
                                        lead_pos = x > 0;
                                    ++nonzero;
                                }
                            if (nonzero >= 2 && lead_pos)
                                list.push_back(Weight4{v});
                        }
            for (size_t r = 0; r < list.size(); ++r)
                rank_of_code[small_code(list[r])] = static_cast<int>(r);
        }
    };

    const GlobalOrderTables& tables()
    {
        static GlobalOrderTables t;
        return t;
    }

}  // namespace

int global_rank(const Weight4& w)
{
    int code = small_code(w);
    int r = code < 0 ? -1 : tables().rank_of_code[code];
    if (r < 0)
        throw std::invalid_argument("weight has no global rank (entries outside {-1,0,1}?)");
    return r;
}

const std::vector<Weight4>& full_list()
{
    return tables().list;
}

long det4(const Weight4& a, const Weight4& b, const Weight4& c, const Weight4& d)
{
    const std::array<const Weight4*, 4> rows{&a, &b, &c, &d};
    long m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = rows[i]->c[j];
    // cofactor expansion along the first row
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

bool star_check(const std::vector<Weight4>& ws)
{
    size_t n = ws.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l) {
                    long d = det4(ws[i], ws[j], ws[k], ws[l]);
                    if (d < -1 || d > 1)
                        return false;
                }
    return true;
}

WeightSet unchecked_set(std::vector<Weight4> sorted)
{
    WeightSet s;
    s.w_ = std::move(sorted);
    return s;
}

WeightSet WeightSet::make(std::vector<Weight4> weights)
{
    std::sort(weights.begin(), weights.end(),
              [](const Weight4& a, const Weight4& b) { return global_rank(a) < global_rank(b); });
    for (size_t i = 1; i < weights.size(); ++i)
        if (weights[i] == weights[i - 1])
            throw std::invalid_argument("weight set has duplicates");
    for (int i = 0; i < 4; ++i) {
        Weight4 e;
        e.c[i] = 1;
        if (std::find(weights.begin(), weights.end(), e) == weights.end())
            throw std::invalid_argument("weight set must contain the standard basis");
    }
    if (!star_check(weights))
        throw std::invalid_argument("weight set violates condition (star)");
    return unchecked_set(std::move(weights));
}

WeightSet WeightSet::basis()
{
    std::vector<Weight4> b(full_list().begin(), full_list().begin() + 4);
    return unchecked_set(std::move(b));
}

bool WeightSet::operator<(const WeightSet& o) const
{
    size_t n = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = global_rank(w_[i]), b = global_rank(o.w_[i]);
        if (a != b)
            return a < b;
    }
    return w_.size() < o.w_.size();
}

std::string WeightSet::str() const
{
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i)
            os << ", ";
        os << '(';
        for (int j = 0; j < 4; ++j) {
            if (j)
                os << ',';
            os << w_[i].c[j];
        }
        os << ')';
    }
    os << '}';
    return os.str();
}

std::vector<WeightSet> extend(const std::vector<WeightSet>& level)
{
    std::vector<WeightSet> out;
    for (const WeightSet& ws : level) {
        int max_rank = global_rank(ws.weights().back());
        const auto& all = full_list();
        for (size_t r = max_rank + 1; r < all.size(); ++r) {
            const Weight4& v = all[r];
            // Only 4-subsets through v are new.
            bool ok = true;
            const auto& w = ws.weights();
            size_t n = w.size();
            for (size_t i = 0; ok && i < n; ++i)
                for (size_t j = i + 1; ok && j < n; ++j)
                    for (size_t k = j + 1; ok && k < n; ++k)
                        if (long d = det4(w[i], w[j], w[k], v); d < -1 || d > 1)
                            ok = false;
            if (!ok)
                continue;
            std::vector<Weight4> nw = w;
            nw.push_back(v);
            out.push_back(unchecked_set(std::move(nw)));
        }
    }
    return out;
}

namespace {

    // Integer inverse of a 4x4 matrix with det +-1 (adjugate over det).
    bool unimodular_inverse(const std::array<Weight4, 4>& cols, long inv[4][4])
    {
        long m[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m[i][j] = cols[j].c[i];  // chosen weights as columns
        auto minor3 = [&](int r, int c) {
            int ri[3], ci[3], t = 0;
            for (int i = 0; i < 4; ++i)
                if (i != r)
                    ri[t++] = i;
            t = 0;
            for (int j = 0; j < 4; ++j)
                if (j != c)
                    ci[t++] = j;
            return m[ri[0]][ci[0]] * (m[ri[1]][ci[1]] * m[ri[2]][ci[2]] -
                                      m[ri[1]][ci[2]] * m[ri[2]][ci[1]]) -
                   m[ri[0]][ci[1]] * (m[ri[1]][ci[0]] * m[ri[2]][ci[2]] -
                                      m[ri[1]][ci[2]] * m[ri[2]][ci[0]]) +
                   m[ri[0]][ci[2]] * (m[ri[1]][ci[0]] * m[ri[2]][ci[1]] -
                                      m[ri[1]][ci[1]] * m[ri[2]][ci[0]]);
        };
        long det = 0;
        for (int j = 0; j < 4; ++j)
            det += (j % 2 ? -1 : 1) * m[0][j] * minor3(0, j);
        if (det != 1 && det != -1)
            return false;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                long cof = ((i + j) % 2 ? -1 : 1) * minor3(j, i);
                inv[i][j] = cof * det;  // det = +-1
            }
        return true;
    }

}  // namespace

WeightSet canonical_form(const WeightSet& ws)
{
    const auto& w = ws.weights();
    const size_t n = w.size();

    // Any clean equivalent of the set arises from one basis change drawn
    // from the set itself plus a sign diagonal, so a single pass over those
    // transforms visits the whole orbit.
    std::optional<WeightSet> best;
    std::array<Weight4, 4> cols;
    std::array<size_t, 4> idx;

    auto consider = [&](const long inv[4][4], int signs) {
        std::vector<Weight4> mapped;
        mapped.reserve(n);
        for (const Weight4& omega : w) {
            std::array<int, 4> u;
            for (int i = 0; i < 4; ++i) {
                long s = 0;
                for (int j = 0; j < 4; ++j)
                    s += inv[i][j] * omega.c[j];
                if (signs & (1 << i))
                    s = -s;
                u[i] = static_cast<int>(s);
            }
            mapped.push_back(Weight4::normalized(u));
        }
        std::sort(mapped.begin(), mapped.end(), [](const Weight4& a, const Weight4& b) {
            return global_rank(a) < global_rank(b);
        });
        WeightSet cand = unchecked_set(std::move(mapped));
        if (!best || cand < *best)
            best = cand;
    };

    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2])
                for (idx[3] = 0; idx[3] < n; ++idx[3]) {
                    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[0] == idx[3] ||
                        idx[1] == idx[2] || idx[1] == idx[3] || idx[2] == idx[3])
                        continue;
                    for (int t = 0; t < 4; ++t)
                        cols[t] = w[idx[t]];
                    long inv[4][4];
                    if (!unimodular_inverse(cols, inv))
                        continue;
                    for (int signs = 0; signs < 16; ++signs)
                        consider(inv, signs);
                }
    if (!best)
        throw std::logic_error("canonical_form: no unimodular 4-subset (set lacks the basis?)");
    return *best;
}

bool equivalent(const WeightSet& a, const WeightSet& b)
{
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::array<int, 4>> splitting_t3(const WeightSet& ws)
{
    const auto& w = ws.weights();
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                // Normal vector via cofactors of the 3xN system.
                std::array<int, 4> normal{};
                {
                    long m[3][4];
                    for (int t = 0; t < 4; ++t) {
                        m[0][t] = w[i].c[t];
                        m[1][t] = w[j].c[t];
                        m[2][t] = w[k].c[t];
                    }
                    auto det3 = [&](int c0, int c1, int c2) {
                        return m[0][c0] * (m[1][c1] * m[2][c2] - m[1][c2] * m[2][c1]) -
                               m[0][c1] * (m[1][c0] * m[2][c2] - m[1][c2] * m[2][c0]) +
                               m[0][c2] * (m[1][c0] * m[2][c1] - m[1][c1] * m[2][c0]);
                    };
                    normal[0] = static_cast<int>(det3(1, 2, 3));
                    normal[1] = static_cast<int>(-det3(0, 2, 3));
                    normal[2] = static_cast<int>(det3(0, 1, 3));
                    normal[3] = static_cast<int>(-det3(0, 1, 2));
                }
                bool independent = normal != std::array<int, 4>{0, 0, 0, 0};
                if (!independent)
                    continue;
                int inside = 0;
                for (const Weight4& omega : w) {
                    long dot = 0;
                    for (int t = 0; t < 4; ++t)
                        dot += static_cast<long>(normal[t]) * omega.c[t];
                    if (dot == 0)
                        ++inside;
                }
                if (inside == 3)
                    return normal;
            }
    return std::nullopt;
}

std::map<int, int> ClassificationTable::histogram_by_size() const
{
    std::map<int, int> h;
    for (const auto& e : classes)
        ++h[static_cast<int>(e.set.size())];
    return h;
}

int ClassificationTable::splitting_count() const
{
    int c = 0;
    for (const auto& e : classes)
        if (e.splitting)
            ++c;
    return c;
}

namespace {

    template <class In, class Fn>
    auto map_jobs(const std::vector<In>& items, int jobs, Fn fn)
        -> std::vector<decltype(fn(items.front()))>
    {
        using Out = decltype(fn(items.front()));
        std::vector<Out> out(items.size());
        if (jobs <= 1 || items.size() <= 1) {
            for (size_t i = 0; i < items.size(); ++i)
                out[i] = fn(items[i]);
            return out;
        }
        std::vector<std::future<void>> futures;
        size_t chunk = (items.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t lo = t * chunk, hi = std::min(items.size(), lo + chunk);
            if (lo >= hi)
                break;
            futures.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (size_t i = lo; i < hi; ++i)
                    out[i] = fn(items[i]);
            }));
        }
        for (auto& f : futures)
            f.get();
        return out;
    }

}  // namespace

ClassificationTable classify_all(int jobs)
{
    ClassificationTable table;
    std::vector<WeightSet> level{WeightSet::basis()};
    while (!level.empty()) {
        for (const WeightSet& ws : level)
            table.classes.push_back({ws, splitting_t3(ws).has_value()});
        std::vector<WeightSet> candidates = extend(level);
        std::vector<WeightSet> canon =
            map_jobs(candidates, jobs, [](const WeightSet& ws) { return canonical_form(ws); });
        std::set<WeightSet> next(canon.begin(), canon.end());
        level.assign(next.begin(), next.end());
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [](const ClassificationTable::Entry& a, const ClassificationTable::Entry& b) {
                  if (a.set.size() != b.set.size())
                      return a.set.size() < b.set.size();
                  return a.set < b.set;
              });
    return table;
}

}  // namespace perical
