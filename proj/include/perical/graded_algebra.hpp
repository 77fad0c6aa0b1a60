#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "perical/linalg.hpp"

namespace perical {

template <class F>
struct Element {
    int degree = 0;
    Vec<F> coords;
};

// Finite-dimensional graded-commutative algebra given by structure
// constants, the host of the periodicity checker. Multiplication tensors are
// stored for a+b <= n only. Invariants (unital, graded-commutative,
// associative within the formal dimension) are checked eagerly.
template <class F>
class GradedAlgebra {
public:
    // tensor[ia][ib] = coordinates of e^a_ia * e^b_ib in H^{a+b}
    using Tensor = std::vector<std::vector<Vec<F>>>;
    using Structure = std::map<std::pair<int, int>, Tensor>;

    GradedAlgebra(F field, int n, std::vector<int> dims, Structure structure)
        : field_(std::move(field)), n_(n), dims_(std::move(dims)), structure_(std::move(structure))
    {
        validate();
    }

    const F& field() const { return field_; }
    int formal_dim() const { return n_; }
    int dim(int degree) const
    {
        return degree >= 0 && degree <= n_ ? dims_[degree] : 0;
    }
    const std::vector<int>& dims() const { return dims_; }
    const Structure& structure() const { return structure_; }

    Element<F> zero_element(int degree) const
    {
        return {degree, Vec<F>(dim(degree), field_.zero())};
    }
    Element<F> basis_element(int degree, int index) const
    {
        Element<F> e = zero_element(degree);
        e.coords[index] = field_.one();
        return e;
    }
    Element<F> unit() const { return basis_element(0, 0); }

    // Coordinates of e^a_ia * e^b_ib; zero when the pair has no tensor.
    Vec<F> basis_product(int a, int ia, int b, int ib) const
    {
        auto it = structure_.find({a, b});
        if (it == structure_.end())
            return Vec<F>(dim(a + b), field_.zero());
        return it->second[ia][ib];
    }

    Element<F> cup(const Element<F>& x, const Element<F>& y) const
    {
        if (x.degree + y.degree > n_)
            throw std::invalid_argument("cup product exceeds the formal dimension");
        Element<F> out = zero_element(x.degree + y.degree);
        for (size_t i = 0; i < x.coords.size(); ++i) {
            if (field_.is_zero(x.coords[i]))
                continue;
            for (size_t j = 0; j < y.coords.size(); ++j) {
                if (field_.is_zero(y.coords[j]))
                    continue;
                Vec<F> prod = basis_product(x.degree, static_cast<int>(i), y.degree,
                                            static_cast<int>(j));
                auto c = field_.mul(x.coords[i], y.coords[j]);
                for (size_t t = 0; t < out.coords.size(); ++t)
                    out.coords[t] = field_.add(out.coords[t], field_.mul(c, prod[t]));
            }
        }
        return out;
    }

    // Matrix of left multiplication by x from H^i to H^{i+|x|}.
    Mat<F> cup_map(const Element<F>& x, int i) const
    {
        if (i + x.degree > n_)
            throw std::invalid_argument("cup_map exceeds the formal dimension");
        int rows = dim(i + x.degree), cols = dim(i);
        Mat<F> m(rows, Vec<F>(cols, field_.zero()));
        for (int j = 0; j < cols; ++j) {
            Element<F> prod = cup(x, basis_element(i, j));
            for (int r = 0; r < rows; ++r)
                m[r][j] = prod.coords[r];
        }
        return m;
    }

    bool is_zero(const Element<F>& x) const
    {
        for (const auto& c : x.coords)
            if (!field_.is_zero(c))
                return false;
        return true;
    }

private:
    void validate() const
    {
        if (n_ < 0 || static_cast<int>(dims_.size()) != n_ + 1)
            throw std::invalid_argument("graded algebra: dims must cover degrees 0..n");
        if (dims_[0] != 1)
            throw std::invalid_argument("graded algebra: dim H^0 must be 1");
        for (int d : dims_)
            if (d < 0)
                throw std::invalid_argument("graded algebra: negative dimension");

        for (const auto& [key, tensor] : structure_) {
            auto [a, b] = key;
            if (a < 0 || b < 0 || a + b > n_)
                throw std::invalid_argument("graded algebra: tensor outside degree range");
            if (static_cast<int>(tensor.size()) != dims_[a])
                throw std::invalid_argument("graded algebra: tensor row count mismatch");
            for (const auto& row : tensor) {
                if (static_cast<int>(row.size()) != dims_[b])
                    throw std::invalid_argument("graded algebra: tensor column count mismatch");
                for (const auto& v : row)
                    if (static_cast<int>(v.size()) != dims_[a + b])
                        throw std::invalid_argument("graded algebra: tensor value dimension mismatch");
            }
        }

        // Unit acts as identity.
        for (int b = 0; b <= n_; ++b) {
            for (int ib = 0; ib < dims_[b]; ++ib) {
                Vec<F> left = basis_product(0, 0, b, ib);
                Vec<F> right = basis_product(b, ib, 0, 0);
                for (int t = 0; t < dims_[b]; ++t) {
                    auto expect = t == ib ? field_.one() : field_.zero();
                    if (left[t] != expect || right[t] != expect)
                        throw std::invalid_argument("graded algebra: unit does not act as identity");
                }
            }
        }

        // Graded commutativity on basis products.
        for (int a = 0; a <= n_; ++a)
            for (int b = 0; a + b <= n_; ++b)
                for (int ia = 0; ia < dims_[a]; ++ia)
                    for (int ib = 0; ib < dims_[b]; ++ib) {
                        Vec<F> xy = basis_product(a, ia, b, ib);
                        Vec<F> yx = basis_product(b, ib, a, ia);
                        bool flip = (a % 2) && (b % 2);
                        for (int t = 0; t < dims_[a + b]; ++t) {
                            auto rhs = flip ? field_.neg(yx[t]) : yx[t];
                            if (xy[t] != rhs)
                                throw std::invalid_argument(
                                    "graded algebra: not graded-commutative");
                        }
                    }

        // Associativity on basis triples within the formal dimension.
        for (int a = 0; a <= n_; ++a)
            for (int b = 0; a + b <= n_; ++b)
                for (int c = 0; a + b + c <= n_; ++c)
                    for (int ia = 0; ia < dims_[a]; ++ia)
                        for (int ib = 0; ib < dims_[b]; ++ib)
                            for (int ic = 0; ic < dims_[c]; ++ic) {
                                Element<F> ea = basis_element(a, ia);
                                Element<F> eb = basis_element(b, ib);
                                Element<F> ec = basis_element(c, ic);
                                Element<F> l = cup(cup(ea, eb), ec);
                                Element<F> r = cup(ea, cup(eb, ec));
                                if (l.coords != r.coords)
                                    throw std::invalid_argument(
                                        "graded algebra: not associative");
                            }
    }

    F field_;
    int n_;
    std::vector<int> dims_;
    Structure structure_;
};

template <class F>
Element<F> element_sub(const GradedAlgebra<F>& a, const Element<F>& x, const Element<F>& y)
{
    if (x.degree != y.degree)
        throw std::invalid_argument("element_sub: degrees differ");
    Element<F> r = x;
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = a.field().sub(r.coords[i], y.coords[i]);
    return r;
}

// Truncated polynomial algebra F[x]/(x^truncation) with |x| = gen_degree.
template <class F>
GradedAlgebra<F> truncated_poly_algebra(F field, int gen_degree, int truncation)
{
    if (gen_degree < 1 || truncation < 2)
        throw std::invalid_argument("truncated_poly_algebra: need gen_degree >= 1, truncation >= 2");
    int n = gen_degree * (truncation - 1);
    std::vector<int> dims(n + 1, 0);
    for (int k = 0; k < truncation; ++k)
        dims[k * gen_degree] = 1;
    typename GradedAlgebra<F>::Structure st;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            if (dims[a] == 0 || dims[b] == 0)
                continue;
            Vec<F> val(dims[a + b], field.zero());
            // x^i * x^j = x^{i+j}; odd generators square to zero.
            bool kill = (gen_degree % 2) && a > 0 && b > 0;
            if (dims[a + b] == 1 && !kill)
                val[0] = field.one();
            st[{a, b}] = typename GradedAlgebra<F>::Tensor{{val}};
        }
    return GradedAlgebra<F>(field, n, dims, st);
}

// Kuenneth tensor product.
template <class F>
GradedAlgebra<F> tensor_algebra(const GradedAlgebra<F>& x, const GradedAlgebra<F>& y)
{
    const F& f = x.field();
    int n = x.formal_dim() + y.formal_dim();
    // Basis of degree t: pairs (p, i) x (q, j), p+q = t, ordered by p.
    struct BasisRef {
        int p, i, q, j;
    };
    std::vector<std::vector<BasisRef>> basis(n + 1);
    std::vector<int> dims(n + 1, 0);
    for (int p = 0; p <= x.formal_dim(); ++p)
        for (int q = 0; q <= y.formal_dim(); ++q)
            for (int i = 0; i < x.dim(p); ++i)
                for (int j = 0; j < y.dim(q); ++j)
                    basis[p + q].push_back({p, i, q, j});
    for (int t = 0; t <= n; ++t)
        dims[t] = static_cast<int>(basis[t].size());

    auto index_of = [&](int t, int p, int i, int j) {
        for (size_t s = 0; s < basis[t].size(); ++s)
            if (basis[t][s].p == p && basis[t][s].i == i && basis[t][s].j == j)
                return static_cast<int>(s);
        throw std::logic_error("tensor basis lookup failed");
    };

    typename GradedAlgebra<F>::Structure st;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            if (dims[a] == 0 || dims[b] == 0)
                continue;
            typename GradedAlgebra<F>::Tensor tensor(
                dims[a], std::vector<Vec<F>>(dims[b], Vec<F>(dims[a + b], f.zero())));
            for (int ia = 0; ia < dims[a]; ++ia)
                for (int ib = 0; ib < dims[b]; ++ib) {
                    BasisRef u = basis[a][ia], v = basis[b][ib];
                    if (u.p + v.p > x.formal_dim() || u.q + v.q > y.formal_dim())
                        continue;
                    Vec<F> px = x.basis_product(u.p, u.i, v.p, v.i);
                    Vec<F> py = y.basis_product(u.q, u.j, v.q, v.j);
                    // Koszul sign from moving y-part of u past x-part of v.
                    bool flip = (u.q % 2) && (v.p % 2);
                    for (int ti = 0; ti < x.dim(u.p + v.p); ++ti) {
                        if (f.is_zero(px[ti]))
                            continue;
                        for (int tj = 0; tj < y.dim(u.q + v.q); ++tj) {
                            if (f.is_zero(py[tj]))
                                continue;
                            auto c = f.mul(px[ti], py[tj]);
                            if (flip)
                                c = f.neg(c);
                            int s = index_of(a + b, u.p + v.p, ti, tj);
                            tensor[ia][ib][s] = f.add(tensor[ia][ib][s], c);
                        }
                    }
                }
            st[{a, b}] = std::move(tensor);
        }
    return GradedAlgebra<F>(f, n, dims, st);
}

template <class F>
GradedAlgebra<F> model_sphere(F field, int n)
{
    return truncated_poly_algebra(std::move(field), n, 2);
}
template <class F>
GradedAlgebra<F> model_cp(F field, int m)
{
    return truncated_poly_algebra(std::move(field), 2, m + 1);
}
template <class F>
GradedAlgebra<F> model_hp(F field, int m)
{
    return truncated_poly_algebra(std::move(field), 4, m + 1);
}
template <class F>
GradedAlgebra<F> model_cayley_plane(F field)
{
    return truncated_poly_algebra(std::move(field), 8, 3);
}
template <class F>
GradedAlgebra<F> model_sphere_cross_hp(F field, int h, int k)
{
    if (h != 2 && h != 3)
        throw std::invalid_argument("sphere_cross_hp: h must be 2 or 3");
    return tensor_algebra(model_sphere(field, h), model_hp(field, k));
}

// Dispatch by name: "sphere(6)", "cp(3)", "hp(2)", "cayley_plane",
// "sphere_cross_hp(2,1)".
template <class F>
GradedAlgebra<F> model(const std::string& name, F field);

}  // namespace perical
