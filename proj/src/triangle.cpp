#include "perical/triangle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace perical {

namespace {

    const RationalField QF;

    bool vec_is_zero(const RatVec& v)
    {
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }

    RatVec vec_sub(const RatVec& a, const RatVec& b)
    {
        RatVec r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] - b[i];
        return r;
    }

    RatVec vec_scale(const RatVec& a, const mpq_class& c)
    {
        RatVec r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] * c;
        return r;
    }

    bool vec_lex_less(const RatVec& a, const RatVec& b)
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

    int mat_rank(const std::vector<RatVec>& rows)
    {
        if (rows.empty())
            return 0;
        return rank(QF, rows);
    }

    // Greedy independent subset, preserving order.
    std::vector<RatVec> row_basis(const std::vector<RatVec>& rows)
    {
        std::vector<RatVec> basis;
        for (const auto& r : rows) {
            basis.push_back(r);
            if (mat_rank(basis) != static_cast<int>(basis.size()))
                basis.pop_back();
        }
        return basis;
    }

    bool in_span(const RatVec& v, const std::vector<RatVec>& basis)
    {
        if (vec_is_zero(v))
            return true;
        auto with = basis;
        with.push_back(v);
        return mat_rank(with) == mat_rank(basis);
    }

    bool span_contained(const std::vector<RatVec>& a, const std::vector<RatVec>& basis_b)
    {
        for (const auto& v : a)
            if (!in_span(v, basis_b))
                return false;
        return true;
    }

    // Basis of span(A) intersect span(B).
    std::vector<RatVec> span_intersection(const std::vector<RatVec>& basis_a,
                                          const std::vector<RatVec>& basis_b)
    {
        if (basis_a.empty() || basis_b.empty())
            return {};
        size_t d = basis_a[0].size();
        size_t na = basis_a.size(), nb = basis_b.size();
        // Columns: alpha coefficients then beta coefficients.
        Mat<RationalField> m(d, Vec<RationalField>(na + nb, 0));
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < na; ++j)
                m[i][j] = basis_a[j][i];
            for (size_t j = 0; j < nb; ++j)
                m[i][na + j] = -basis_b[j][i];
        }
        std::vector<RatVec> out;
        for (const auto& ker : nullspace(QF, m)) {
            RatVec v(d, 0);
            for (size_t j = 0; j < na; ++j)
                for (size_t i = 0; i < d; ++i)
                    v[i] += ker[j] * basis_a[j][i];
            if (!vec_is_zero(v))
                out.push_back(v);
        }
        return row_basis(out);
    }

    // Coordinates of v in the given (independent) column basis.
    std::optional<RatVec> coords_in_basis(const RatVec& v, const std::vector<RatVec>& basis)
    {
        size_t d = v.size();
        Mat<RationalField> m(d, Vec<RationalField>(basis.size(), 0));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < basis.size(); ++j)
                m[i][j] = basis[j][i];
        return solve(QF, m, v);
    }

}  // namespace

Triangle Triangle::make(WeightMultiset a, WeightMultiset b, WeightMultiset c)
{
    size_t m = a.weights.size();
    if (m == 0 || b.weights.size() != m || c.weights.size() != m)
        throw std::invalid_argument("triangle edge multisets must share one positive size");
    size_t d = a.weights[0].size();
    for (const auto* set : {&a, &b, &c})
        for (const auto& w : set->weights) {
            if (w.size() != d)
                throw std::invalid_argument("triangle weights must share one ambient dimension");
            if (vec_is_zero(w))
                throw std::invalid_argument("triangle weights must be nonzero");
        }
    return Triangle{std::move(a), std::move(b), std::move(c)};
}

int Triangle::ambient_dim() const
{
    return static_cast<int>(A.weights[0].size());
}

AxiomCheckResult triangle_axioms_check(const Triangle& t)
{
    const std::vector<const WeightMultiset*> sets{&t.A, &t.B, &t.C};
    size_t m = t.A.weights.size();
    if (t.B.weights.size() != m || t.C.weights.size() != m)
        return {false, "edge multisets have different sizes"};

    auto count_in_plane = [&](const WeightMultiset& s, const RatVec& u, const RatVec& v) {
        int c = 0;
        for (const auto& w : s.weights)
            if (mat_rank({u, v, w}) <= 2)
                ++c;
        return c;
    };

    for (size_t si = 0; si < 3; ++si)
        for (size_t sj = si + 1; sj < 3; ++sj)
            for (const auto& u : sets[si]->weights)
                for (const auto& v : sets[sj]->weights) {
                    if (mat_rank({u, v}) != 2)
                        continue;
                    int ca = count_in_plane(t.A, u, v);
                    int cb = count_in_plane(t.B, u, v);
                    int cc = count_in_plane(t.C, u, v);
                    if (ca != cb || cb != cc) {
                        std::ostringstream os;
                        os << "2-plane counts differ (" << ca << "," << cb << "," << cc << ")";
                        return {false, os.str()};
                    }
                }
    return {};
}

namespace {

    using Monomial = std::vector<int>;

    std::map<Monomial, mpq_class> product_of_forms(const std::vector<RatVec>& forms, size_t d)
    {
        std::map<Monomial, mpq_class> poly{{Monomial(d, 0), 1}};
        for (const auto& form : forms) {
            std::map<Monomial, mpq_class> next;
            for (const auto& [mono, coeff] : poly)
                for (size_t i = 0; i < d; ++i) {
                    if (form[i] == 0)
                        continue;
                    Monomial m2 = mono;
                    ++m2[i];
                    next[m2] += coeff * form[i];
                }
            poly = std::move(next);
        }
        for (auto it = poly.begin(); it != poly.end();)
            it = it->second == 0 ? poly.erase(it) : std::next(it);
        return poly;
    }

}  // namespace

bool lindep_products_check(const Triangle& t)
{
    size_t d = t.A.weights[0].size();
    auto pa = product_of_forms(t.A.weights, d);
    auto pb = product_of_forms(t.B.weights, d);
    auto pc = product_of_forms(t.C.weights, d);

    std::set<Monomial> monos;
    for (const auto* p : {&pa, &pb, &pc})
        for (const auto& [m, c] : *p)
            monos.insert(m);
    Mat<RationalField> rows(3, Vec<RationalField>(monos.size(), 0));
    size_t col = 0;
    for (const auto& m : monos) {
        auto get = [&](const std::map<Monomial, mpq_class>& p) {
            auto it = p.find(m);
            return it == p.end() ? mpq_class(0) : it->second;
        };
        rows[0][col] = get(pa);
        rows[1][col] = get(pb);
        rows[2][col] = get(pc);
        ++col;
    }
    return rank(QF, rows) <= 2;
}

std::string to_string(TriangleKind k)
{
    switch (k) {
    case TriangleKind::Type1: return "Type1";
    case TriangleKind::Type2: return "Type2";
    case TriangleKind::NotTransversal: return "NotTransversal";
    case TriangleKind::AxiomViolation: return "AxiomViolation";
    }
    return "?";
}

Triangle transform_triangle(const Triangle& t, const RatMat& m,
                            const std::vector<mpq_class>& sa,
                            const std::vector<mpq_class>& sb,
                            const std::vector<mpq_class>& sc)
{
    auto apply = [&](const WeightMultiset& s, const std::vector<mpq_class>& scal) {
        WeightMultiset out;
        for (size_t i = 0; i < s.weights.size(); ++i) {
            RatVec v = mat_vec(QF, m, s.weights[i]);
            out.weights.push_back(vec_scale(v, scal[i]));
        }
        return out;
    };
    return Triangle::make(apply(t.A, sa), apply(t.B, sb), apply(t.C, sc));
}

namespace {

    TriangleClassification violation(const std::string& why)
    {
        TriangleClassification r;
        r.kind = TriangleKind::AxiomViolation;
        r.reason = why;
        return r;
    }

}  // namespace

TriangleClassification triangle_classify(const Triangle& t)
{
    if (auto ax = triangle_axioms_check(t); !ax.ok)
        return violation("axioms fail: " + ax.reason);

    const size_t d = t.A.weights[0].size();
    const size_t m = t.A.weights.size();

    std::vector<RatVec> basisA = row_basis(t.A.weights);
    std::vector<RatVec> basisB = row_basis(t.B.weights);

    if (span_contained(t.A.weights, basisB) || span_contained(t.B.weights, basisA)) {
        TriangleClassification r;
        r.kind = TriangleKind::NotTransversal;
        return r;
    }

    // Deterministic picks: first in the coordinate lex order.
    auto pick_outside = [&](const std::vector<RatVec>& cands, const std::vector<RatVec>& span) {
        std::vector<RatVec> sorted = cands;
        std::sort(sorted.begin(), sorted.end(), vec_lex_less);
        for (const auto& v : sorted)
            if (!in_span(v, span))
                return v;
        throw std::logic_error("no weight outside the span");
    };
    RatVec a = pick_outside(t.A.weights, basisB);
    RatVec b = pick_outside(t.B.weights, basisA);

    std::vector<RatVec> inter = span_intersection(basisA, basisB);

    // W = <a> + <b> + (span A  ^  span B) must hold all weights directly.
    std::vector<RatVec> wbasis{a, b};
    for (const auto& u : inter)
        wbasis.push_back(u);
    if (mat_rank(wbasis) != static_cast<int>(wbasis.size()))
        return violation("span decomposition is not direct");
    for (const auto* s : {&t.A, &t.B, &t.C})
        for (const auto& w : s->weights)
            if (!in_span(w, wbasis))
                return violation("weights do not lie in <a> + <b> + (A^B)");

    struct Coord {
        mpq_class on_a, on_b;
        RatVec residue;  // ambient component inside the intersection
    };
    auto split = [&](const RatVec& w) -> Coord {
        auto c = coords_in_basis(w, wbasis);
        if (!c)
            throw std::logic_error("coordinate split failed");
        RatVec residue = w;
        residue = vec_sub(residue, vec_scale(a, (*c)[0]));
        residue = vec_sub(residue, vec_scale(b, (*c)[1]));
        return {(*c)[0], (*c)[1], residue};
    };

    // Scaled representatives: a_i|_a = c_i|_a = 1, b_i|_b = 1.
    struct Scaled {
        RatVec w;          // scaled ambient weight
        mpq_class scalar;  // applied to the input weight
        mpq_class gamma;   // c-only: the b-coordinate after scaling
        RatVec residue;
    };
    std::vector<Scaled> As, Bs, Cs;
    for (const auto& w : t.A.weights) {
        Coord c = split(w);
        if (c.on_b != 0)
            return violation("an A-weight has a nonzero b-component");
        if (c.on_a == 0)
            return violation("an A-weight lies in the intersection span");
        mpq_class s = 1 / c.on_a;
        As.push_back({vec_scale(w, s), s, 0, vec_scale(c.residue, s)});
    }
    for (const auto& w : t.B.weights) {
        Coord c = split(w);
        if (c.on_a != 0)
            return violation("a B-weight has a nonzero a-component");
        if (c.on_b == 0)
            return violation("a B-weight lies in the intersection span");
        mpq_class s = 1 / c.on_b;
        Bs.push_back({vec_scale(w, s), s, 0, vec_scale(c.residue, s)});
    }
    for (const auto& w : t.C.weights) {
        Coord c = split(w);
        if (c.on_a == 0 || c.on_b == 0)
            return violation("a C-weight misses the a- or b-direction");
        mpq_class s = 1 / c.on_a;
        Cs.push_back({vec_scale(w, s), s, c.on_b * s, vec_scale(c.residue, s)});
    }

    // Pair every c with the b whose residue matches c's residue over gamma.
    std::vector<int> pair_of_c(m, -1);
    std::vector<bool> b_used(m, false);
    for (size_t ci = 0; ci < m; ++ci) {
        RatVec rho = vec_scale(Cs[ci].residue, 1 / Cs[ci].gamma);
        for (size_t bi = 0; bi < m; ++bi) {
            if (b_used[bi])
                continue;
            if (Bs[bi].residue == rho) {
                pair_of_c[ci] = static_cast<int>(bi);
                b_used[bi] = true;
                break;
            }
        }
        if (pair_of_c[ci] < 0)
            return violation("no B-weight matches a C-weight inside its 2-plane");
    }

    // Residue pattern of B determines the case.
    std::vector<size_t> nonzero_idx;
    for (size_t bi = 0; bi < m; ++bi)
        if (!vec_is_zero(Bs[bi].residue))
            nonzero_idx.push_back(bi);

    RatVec e1(d, 0), e2(d, 0), e3(d, 0);
    e1[0] = 1;
    e2[1] = 1;
    if (d >= 3)
        e3[2] = 1;
    auto plus = [&](const RatVec& x, const RatVec& y) {
        RatVec r(d);
        for (size_t i = 0; i < d; ++i)
            r[i] = x[i] + y[i];
        return r;
    };

    RatVec bstar, rstar(d, 0);
    std::vector<RatVec> target_a(m), target_b(m), target_c(m);
    TriangleKind kind;

    if (nonzero_idx.empty()) {
        for (const auto& as : As)
            if (!vec_is_zero(as.residue))
                return violation("A carries a residue while B does not");
        if (m == 1) {
            kind = TriangleKind::Type1;
            bstar = vec_scale(b, Cs[0].gamma);
            target_a[0] = e1;
            target_b[0] = e2;
            target_c[0] = plus(e1, e2);
        } else if (m == 2) {
            if (Cs[0].gamma != -Cs[1].gamma)
                return violation("double edge without opposite slopes (the three products "
                                 "cannot be dependent)");
            kind = TriangleKind::Type2;
            bstar = vec_scale(b, Cs[1].gamma);
            target_a = {e1, e1};
            target_b = {e2, e2};
            target_c = {vec_sub(e1, e2), plus(e1, e2)};
        } else {
            return violation("more than two edges inside one 2-plane");
        }
    } else if (nonzero_idx.size() == 1 && m == 2) {
        size_t br = nonzero_idx[0];
        size_t bz = 1 - br;
        size_t cz = pair_of_c[0] == static_cast<int>(bz) ? 0 : 1;
        size_t cr = 1 - cz;
        mpq_class gamma_z = Cs[cz].gamma, gamma_r = Cs[cr].gamma;
        if (gamma_r != -gamma_z)
            return violation("residue pair has non-opposite slopes");
        kind = TriangleKind::Type2;
        bstar = vec_scale(b, -gamma_z);
        rstar = vec_scale(Bs[br].residue, -gamma_z);
        // The same residue must show up in A.
        size_t az = m, ar = m;
        for (size_t i = 0; i < m; ++i) {
            if (vec_is_zero(As[i].residue) && az == m)
                az = i;
            else if (As[i].residue == rstar && ar == m)
                ar = i;
        }
        if (az == m || ar == m)
            return violation("A does not carry the residues of B");
        target_a[az] = e1;
        target_a[ar] = plus(e1, e3);
        target_b[bz] = e2;
        target_b[br] = plus(e2, e3);
        target_c[cz] = vec_sub(e1, e2);
        target_c[cr] = plus(plus(e1, e2), e3);
    } else if (nonzero_idx.size() == 1) {
        return violation("a residue next to a repeated edge forces a repeated difference weight");
    } else {
        return violation("two distinct residues would iterate to infinitely many weights");
    }

    TriangleClassification out;
    out.kind = kind;
    out.a = a;
    out.b = bstar;
    out.c = rstar;

    // Source basis columns [a, b*, (c), rest of intersection, completion];
    // the inverse realizes a -> e1, b* -> e2 and c -> e3.
    std::vector<RatVec> cols{a, bstar};
    if (!vec_is_zero(rstar))
        cols.push_back(rstar);
    for (const auto& u : inter) {
        cols.push_back(u);
        if (mat_rank(cols) != static_cast<int>(cols.size()))
            cols.pop_back();
    }
    for (size_t i = 0; i < d && cols.size() < d; ++i) {
        RatVec e(d, 0);
        e[i] = 1;
        cols.push_back(e);
        if (mat_rank(cols) != static_cast<int>(cols.size()))
            cols.pop_back();
    }
    if (cols.size() != d)
        return violation("could not complete the normal-form basis");
    Mat<RationalField> s(d, Vec<RationalField>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            s[i][j] = cols[j][i];
    out.basis_change = inverse(QF, s);

    auto land = [&](const std::vector<RatVec>& inputs, const std::vector<RatVec>& targets,
                    std::vector<mpq_class>& scalars, std::vector<RatVec>& normals) -> bool {
        for (size_t i = 0; i < inputs.size(); ++i) {
            RatVec img = mat_vec(QF, out.basis_change, inputs[i]);
            mpq_class sc = 0;
            for (size_t j = 0; j < d; ++j)
                if (img[j] != 0) {
                    sc = targets[i][j] / img[j];
                    break;
                }
            if (sc == 0 || vec_scale(img, sc) != targets[i])
                return false;
            scalars.push_back(sc);
            normals.push_back(targets[i]);
        }
        return true;
    };
    if (!land(t.A.weights, target_a, out.scalars_a, out.normal_a) ||
        !land(t.B.weights, target_b, out.scalars_b, out.normal_b) ||
        !land(t.C.weights, target_c, out.scalars_c, out.normal_c))
        return violation("weights do not land on the normal form");
    return out;
}

}  // namespace perical
