#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace perical {

// Exact field arithmetic behind the graded-algebra and projective code.
// Fields are small value objects carried alongside the data, so a prime
// field does not need per-element state.

struct RationalField {
    using Elem = mpq_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (a == 0)
            throw std::invalid_argument("division by zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_int(long n) const { return n; }
};

struct PrimeField {
    long p;
    using Elem = long;
    explicit PrimeField(long prime) : p(prime) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return (p - a % p) % p; }
    Elem inv(Elem a) const
    {
        a = ((a % p) + p) % p;
        if (a == 0)
            throw std::invalid_argument("division by zero");
        // Fermat; p is small.
        Elem r = 1, base = a;
        long e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a % p == 0; }
    Elem from_int(long n) const { return ((n % p) + p) % p; }
};

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Mat = std::vector<std::vector<typename F::Elem>>;

template <class F>
int rank(const F& f, Mat<F> m)
{
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(m[i][c])) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[r], m[pivot]);
        auto iv = f.inv(m[r][c]);
        for (int j = c; j < cols; ++j)
            m[r][j] = f.mul(m[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m[i][c]))
                continue;
            auto factor = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

// Solve A x = b; returns the particular solution with free variables zero,
// or nullopt when inconsistent. A is rows x cols, row-major.
template <class F>
std::optional<Vec<F>> solve(const F& f, Mat<F> a, Vec<F> b)
{
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(a[i][c])) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[r], a[pivot]);
        std::swap(b[r], b[pivot]);
        auto iv = f.inv(a[r][c]);
        for (int j = c; j < cols; ++j)
            a[r][j] = f.mul(a[r][j], iv);
        b[r] = f.mul(b[r], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(a[i][c]))
                continue;
            auto factor = a[i][c];
            for (int j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
            b[i] = f.sub(b[i], f.mul(factor, b[r]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!f.is_zero(b[i]))
            return std::nullopt;
    Vec<F> x(cols, f.zero());
    for (int i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i];
    return x;
}

// Inverse of a square matrix; throws when singular.
template <class F>
Mat<F> inverse(const F& f, Mat<F> a)
{
    int n = static_cast<int>(a.size());
    Mat<F> inv(n, Vec<F>(n, f.zero()));
    for (int i = 0; i < n; ++i)
        inv[i][i] = f.one();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!f.is_zero(a[i][c])) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw std::invalid_argument("matrix is singular");
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        auto iv = f.inv(a[c][c]);
        for (int j = 0; j < n; ++j) {
            a[c][j] = f.mul(a[c][j], iv);
            inv[c][j] = f.mul(inv[c][j], iv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || f.is_zero(a[i][c]))
                continue;
            auto factor = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
                inv[i][j] = f.sub(inv[i][j], f.mul(factor, inv[c][j]));
            }
        }
    }
    return inv;
}

// Basis of the kernel of A, one vector per free column.
template <class F>
std::vector<Vec<F>> nullspace(const F& f, Mat<F> a)
{
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(a[i][c])) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[r], a[pivot]);
        auto iv = f.inv(a[r][c]);
        for (int j = c; j < cols; ++j)
            a[r][j] = f.mul(a[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(a[i][c]))
                continue;
            auto factor = a[i][c];
            for (int j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<Vec<F>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        Vec<F> v(cols, f.zero());
        v[c] = f.one();
        for (int c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = f.neg(a[pivot_of_col[c2]][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Vec<F> mat_vec(const F& f, const Mat<F>& m, const Vec<F>& v)
{
    Vec<F> out(m.size(), f.zero());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            out[i] = f.add(out[i], f.mul(m[i][j], v[j]));
    return out;
}

}  // namespace perical
