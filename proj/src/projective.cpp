#include "perical/projective.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace perical {

std::string ProjPoint::str() const
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i)
            os << ':';
        os << coords[i];
    }
    os << ']';
    return os.str();
}

ProjPoint normalize_int(std::vector<long> v)
{
    long g = 0;
    for (long x : v)
        g = std::gcd(g, std::abs(x));
    if (g == 0)
        throw std::invalid_argument("projective point must be nonzero");
    long lead = 0;
    for (long x : v)
        if (x != 0) {
            lead = x;
            break;
        }
    long s = lead < 0 ? -g : g;
    for (long& x : v)
        x /= s;
    return ProjPoint{std::move(v)};
}

ProjPoint normalize(const std::vector<mpq_class>& v)
{
    mpz_class l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<long> ints;
    ints.reserve(v.size());
    for (const auto& q : v) {
        mpz_class z = q.get_num() * (l / q.get_den());
        if (!z.fits_slong_p())
            throw std::invalid_argument("projective coordinate overflow");
        ints.push_back(z.get_si());
    }
    return normalize_int(std::move(ints));
}

Configuration Configuration::make(int dim, std::vector<ProjPoint> pts)
{
    if (dim < 1)
        throw std::invalid_argument("configuration dimension must be at least 1");
    std::set<ProjPoint> seen;
    for (const auto& p : pts) {
        if (static_cast<int>(p.coords.size()) != dim + 1)
            throw std::invalid_argument("point has wrong coordinate length");
        if (!seen.insert(p).second)
            throw std::invalid_argument("configuration points must be distinct");
    }
    return Configuration{dim, std::move(pts)};
}

int span_rank(const std::vector<ProjPoint>& pts)
{
    if (pts.empty())
        return 0;
    RationalField f;
    Mat<RationalField> m;
    for (const auto& p : pts) {
        Vec<RationalField> row;
        for (long x : p.coords)
            row.push_back(mpq_class(x));
        m.push_back(std::move(row));
    }
    return rank(f, std::move(m));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c)
{
    return span_rank({a, b, c}) <= 2;
}

SylvesterGallaiResult sylvester_gallai_witness(const Configuration& cfg)
{
    const auto& pts = cfg.points;
    if (pts.size() < 2)
        throw std::invalid_argument("sylvester_gallai_witness needs at least two points");
    int full = span_rank(pts);
    if (full <= 2)
        return CollinearCertificate{full};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            bool ordinary = true;
            for (size_t k = 0; k < pts.size() && ordinary; ++k) {
                if (k == i || k == j)
                    continue;
                if (collinear(pts[i], pts[j], pts[k]))
                    ordinary = false;
            }
            if (ordinary)
                return OrdinaryLine{i, j};
        }
    throw std::logic_error("no ordinary line in a non-collinear rational configuration");
}

HansenWitness hansen_witness(const Configuration& cfg)
{
    const int d = cfg.dim;
    const auto& pts = cfg.points;
    if (span_rank(pts) != d + 1)
        throw std::invalid_argument("hansen_witness: configuration must span P^d");

    // Hyperplanes spanned by d-subsets of configuration points.
    std::vector<size_t> pick(d);
    std::vector<bool> mark(pts.size(), false);
    std::set<std::vector<size_t>> seen_incidence;

    std::vector<size_t> stack;
    auto try_hyperplane = [&](const std::vector<size_t>& gen) -> std::optional<HansenWitness> {
        std::vector<ProjPoint> gens;
        for (size_t g : gen)
            gens.push_back(pts[g]);
        if (span_rank(gens) != d)
            return std::nullopt;
        std::vector<size_t> incident;
        for (size_t t = 0; t < pts.size(); ++t) {
            auto with = gens;
            with.push_back(pts[t]);
            if (span_rank(with) == d)
                incident.push_back(t);
        }
        if (!seen_incidence.insert(incident).second)
            return std::nullopt;
        for (size_t excl : incident) {
            std::vector<ProjPoint> rest;
            std::vector<size_t> rest_idx;
            for (size_t t : incident)
                if (t != excl) {
                    rest.push_back(pts[t]);
                    rest_idx.push_back(t);
                }
            if (span_rank(rest) <= d - 1)
                return HansenWitness{incident, rest_idx, excl};
        }
        return std::nullopt;
    };

    std::optional<HansenWitness> found;
    auto rec = [&](auto&& self, size_t start, int need) -> void {
        if (found)
            return;
        if (need == 0) {
            if (auto w = try_hyperplane(stack))
                found = w;
            return;
        }
        for (size_t t = start; t + need <= pts.size() + 1 && t < pts.size(); ++t) {
            stack.push_back(t);
            self(self, t + 1, need - 1);
            stack.pop_back();
            if (found)
                return;
        }
    };
    rec(rec, 0, d);
    if (!found)
        throw std::logic_error("hansen_witness: exhaustive scan found no witness");
    return *found;
}

namespace {

    void check_disjoint(const Configuration& omega, const Configuration& nset)
    {
        if (omega.dim != nset.dim)
            throw std::invalid_argument("configurations live in different spaces");
        std::set<ProjPoint> o(omega.points.begin(), omega.points.end());
        for (const auto& p : nset.points)
            if (o.count(p))
                throw std::invalid_argument("point sets must be disjoint");
    }

}  // namespace

LineCheckResult s2comb_check(const Configuration& omega, const Configuration& nset)
{
    check_disjoint(omega, nset);
    const auto& O = omega.points;
    const auto& N = nset.points;
    for (size_t i = 0; i < O.size(); ++i)
        for (size_t j = i + 1; j < O.size(); ++j) {
            bool has_n = false;
            for (const auto& n : N)
                if (collinear(O[i], O[j], n)) {
                    has_n = true;
                    break;
                }
            if (!has_n)
                return {false, std::make_pair(O[i], O[j])};
        }
    for (const auto& o : O)
        for (const auto& n : N) {
            bool has_second = false;
            for (const auto& o2 : O) {
                if (o2 == o)
                    continue;
                if (collinear(o, n, o2)) {
                    has_second = true;
                    break;
                }
            }
            if (!has_second)
                return {false, std::make_pair(o, n)};
        }
    return {};
}

LineCheckResult extended_sg_check(const Configuration& omega, const Configuration& nset)
{
    check_disjoint(omega, nset);
    const auto& O = omega.points;
    const auto& N = nset.points;
    for (size_t i = 0; i < O.size(); ++i)
        for (size_t j = i + 1; j < O.size(); ++j) {
            bool has_third = false;
            for (const auto& p : O)
                if (!(p == O[i]) && !(p == O[j]) && collinear(O[i], O[j], p)) {
                    has_third = true;
                    break;
                }
            for (const auto& p : N) {
                if (has_third)
                    break;
                if (collinear(O[i], O[j], p))
                    has_third = true;
            }
            if (!has_third)
                return {false, std::make_pair(O[i], O[j])};
        }
    for (const auto& o : O)
        for (const auto& n : N) {
            bool has_second = false;
            for (const auto& o2 : O) {
                if (o2 == o)
                    continue;
                if (collinear(o, n, o2)) {
                    has_second = true;
                    break;
                }
            }
            if (!has_second)
                return {false, std::make_pair(o, n)};
        }
    return {};
}

std::vector<ProjPoint> grid_points(int dim, int grid)
{
    if (dim < 1 || grid < 1)
        throw std::invalid_argument("grid_points: need dim >= 1 and grid >= 1");
    std::set<ProjPoint> pts;
    std::vector<long> v(dim + 1, -grid);
    for (;;) {
        bool nonzero = false;
        for (long x : v)
            if (x)
                nonzero = true;
        if (nonzero)
            pts.insert(normalize_int(v));
        int pos = 0;
        while (pos <= dim && v[pos] == grid)
            v[pos++] = -grid;
        if (pos > dim)
            break;
        ++v[pos];
    }
    return {pts.begin(), pts.end()};
}

namespace {

    struct LineTable {
        // lines[i][j] = bitmask of ground points collinear with i and j
        std::vector<std::vector<uint64_t>> on_line;
        explicit LineTable(const std::vector<ProjPoint>& ground)
        {
            size_t n = ground.size();
            if (n > 64)
                throw std::invalid_argument("ground set too large for the bitmask search");
            on_line.assign(n, std::vector<uint64_t>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    uint64_t mask = 0;
                    for (size_t k = 0; k < n; ++k)
                        if (k == i || k == j || collinear(ground[i], ground[j], ground[k]))
                            mask |= uint64_t(1) << k;
                    on_line[i][j] = on_line[j][i] = mask;
                }
        }
    };

}  // namespace

std::optional<std::vector<ProjPoint>> sylvester_gallai_counterexample(
    const std::vector<ProjPoint>& ground, int max_points)
{
    LineTable lt(ground);
    const size_t n = ground.size();
    std::vector<size_t> chosen;
    std::optional<std::vector<ProjPoint>> hit;

    // A counterexample needs every connecting line to carry a third chosen
    // point. Points are added in index order; a pair whose line has no
    // ground point beyond the current maximum left to close it prunes.
    auto complete_ok = [&](uint64_t setmask) {
        for (size_t a = 0; a < chosen.size(); ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b) {
                uint64_t third = lt.on_line[chosen[a]][chosen[b]] & setmask;
                third &= ~(uint64_t(1) << chosen[a]);
                third &= ~(uint64_t(1) << chosen[b]);
                if (!third)
                    return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, size_t next, uint64_t setmask) -> void {
        if (hit)
            return;
        if (chosen.size() >= 3) {
            std::vector<ProjPoint> pts;
            for (size_t c : chosen)
                pts.push_back(ground[c]);
            if (span_rank(pts) >= 3 && complete_ok(setmask)) {
                hit = pts;
                return;
            }
        }
        if (chosen.size() == static_cast<size_t>(max_points))
            return;
        for (size_t t = next; t < n; ++t) {
            uint64_t later = ~uint64_t(0) << t;
            // Every open pair must still be closable by some point >= t.
            bool feasible = true;
            uint64_t newmask = setmask | (uint64_t(1) << t);
            for (size_t a = 0; a < chosen.size() && feasible; ++a)
                for (size_t b = a + 1; b < chosen.size() && feasible; ++b) {
                    uint64_t line = lt.on_line[chosen[a]][chosen[b]];
                    uint64_t closers = line & (newmask | later);
                    closers &= ~(uint64_t(1) << chosen[a]);
                    closers &= ~(uint64_t(1) << chosen[b]);
                    if (!closers)
                        feasible = false;
                }
            if (!feasible)
                continue;
            chosen.push_back(t);
            self(self, t + 1, newmask);
            chosen.pop_back();
            if (hit)
                return;
        }
    };
    rec(rec, 0, 0);
    return hit;
}

DimensionBoundReport dimension_bound_search(int dim, int grid, int max_points)
{
    if (dim < 2 || dim > 5)
        throw std::invalid_argument("dimension_bound_search: dim must be in 2..5");
    if (grid < 1 || grid > 2)
        throw std::invalid_argument("dimension_bound_search: grid must be 1 or 2");
    if (max_points < 2 || max_points > 8)
        throw std::invalid_argument("dimension_bound_search: max_points must be in 2..8");

    std::vector<ProjPoint> ground = grid_points(dim, grid);
    const size_t n = ground.size();
    if (n > 64)
        throw std::invalid_argument("dimension_bound_search: grid too large for the scan");
    LineTable lt(ground);

    DimensionBoundReport rep;
    rep.dim = dim;
    rep.grid = grid;
    rep.max_points = max_points;

    std::vector<size_t> omega;

    // For a fixed Omega: whether some N from the grid satisfies both bullet
    // conditions. Admissible n: every line through n and an Omega point holds
    // a second Omega point; condition (i) then needs an admissible non-Omega
    // point on every Omega pair-line.
    auto satisfiable = [&](uint64_t omask) {
        uint64_t admissible = 0;
        for (size_t t = 0; t < n; ++t) {
            if (omask & (uint64_t(1) << t))
                continue;
            bool ok = true;
            for (size_t a = 0; a < omega.size() && ok; ++a) {
                uint64_t others = lt.on_line[omega[a]][t] & omask;
                others &= ~(uint64_t(1) << omega[a]);
                if (!others)
                    ok = false;
            }
            if (ok)
                admissible |= uint64_t(1) << t;
        }
        for (size_t a = 0; a < omega.size(); ++a)
            for (size_t b = a + 1; b < omega.size(); ++b) {
                uint64_t closers = lt.on_line[omega[a]][omega[b]] & admissible;
                if (!closers)
                    return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, size_t next, uint64_t omask) -> void {
        if (omega.size() >= 2) {
            ++rep.configurations_checked;
            if (satisfiable(omask)) {
                ++rep.satisfiable;
                std::vector<ProjPoint> pts;
                for (size_t c : omega)
                    pts.push_back(ground[c]);
                rep.max_span_rank = std::max(rep.max_span_rank, span_rank(pts));
            }
        }
        if (omega.size() == static_cast<size_t>(max_points))
            return;
        for (size_t t = next; t < n; ++t) {
            // A pair-line with no further grid point can never satisfy (i).
            bool feasible = true;
            for (size_t a = 0; a < omega.size() && feasible; ++a) {
                uint64_t line = lt.on_line[omega[a]][t];
                line &= ~(uint64_t(1) << omega[a]);
                line &= ~(uint64_t(1) << t);
                if (!line)
                    feasible = false;
            }
            if (!feasible)
                continue;
            omega.push_back(t);
            self(self, t + 1, omask | (uint64_t(1) << t));
            omega.pop_back();
        }
    };
    rec(rec, 0, 0);
    return rep;
}

}  // namespace perical
