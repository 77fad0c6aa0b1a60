#include "perical/steenrod.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace perical {

PrimeContext::PrimeContext(int prime, int vdeg) : p(prime), var_degree(vdeg)
{
    if (!is_prime(p))
        throw std::invalid_argument("PrimeContext: p must be prime");
    if (var_degree != 1 && var_degree != 2)
        throw std::invalid_argument("PrimeContext: var_degree must be 1 or 2");
    if (var_degree == 1 && p != 2)
        throw std::invalid_argument("PrimeContext: degree-1 generators only at p=2");
}

mpz_class binom(long n, long k)
{
    if (k < 0)
        return 0;
    mpz_class nn = n;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

namespace {

    // Weight-selected total power on one exponent vector: every slot t maps
    // n_t -> n_t + (p-1)s_t with coefficient binom(n_t, s_t), sum s_t = i.
    void total_power_rec(const std::vector<int>& exps, int p, size_t t, int budget,
                         std::vector<int>& cur, const mpz_class& coeff,
                         std::map<std::vector<int>, mpz_class>& acc)
    {
        if (t == exps.size()) {
            if (budget == 0)
                acc[cur] += coeff;
            return;
        }
        int rest_cap = 0;
        for (size_t u = t; u < exps.size(); ++u)
            rest_cap += exps[u];
        if (budget > rest_cap)
            return;
        for (int s = 0; s <= std::min(exps[t], budget); ++s) {
            cur[t] = exps[t] + (p - 1) * s;
            total_power_rec(exps, p, t + 1, budget - s, cur, coeff * binom(exps[t], s), acc);
        }
        cur[t] = exps[t];
    }

}  // namespace

SymFunc steenrod_power(const PrimeContext& ctx, int i, const SymFunc& f)
{
    if (i < 0)
        throw std::invalid_argument("steenrod_power: negative exponent");
    if (!f.is_zero() && !f.homogeneous_weight())
        throw std::invalid_argument("steenrod_power: input must be homogeneous");

    SymFunc out;
    for (const auto& [mu, coeff] : f.terms()) {
        if (mu.empty()) {
            if (i == 0)
                out.add_term(mu, coeff);
            continue;
        }
        std::map<std::vector<int>, mpz_class> acc;
        std::vector<int> exps(mu.parts().begin(), mu.parts().end());
        std::sort(exps.begin(), exps.end());
        do {
            std::vector<int> cur = exps;
            total_power_rec(exps, ctx.p, 0, i, cur, coeff, acc);
        } while (std::next_permutation(exps.begin(), exps.end()));

        // The accumulated polynomial is symmetric in the parts(mu) variables
        // and every term of P(m_mu) uses at most that many, so reading the
        // non-increasing representatives collects it faithfully.
        for (const auto& [e, c] : acc) {
            if (!std::is_sorted(e.begin(), e.end(), std::greater<int>()))
                continue;
            out.add_term(Partition::of(std::vector<int>(e.begin(), e.end())), c);
        }
    }
    return reduce_mod(out, ctx.p);
}

SymFunc frobenius_power(const PrimeContext& ctx, const SymFunc& f)
{
    SymFunc out;
    for (const auto& [mu, coeff] : f.terms()) {
        std::vector<int> scaled;
        scaled.reserve(mu.size());
        for (int part : mu.parts())
            scaled.push_back(part * ctx.p);
        out.add_term(Partition::of(std::move(scaled)), coeff);
    }
    return reduce_mod(out, ctx.p);
}

bool verify_cartan(const PrimeContext& ctx, int i, const SymFunc& f, const SymFunc& g)
{
    SymFunc lhs = steenrod_power(ctx, i, reduce_mod(mult(f, g), ctx.p));
    SymFunc rhs;
    for (int a = 0; a <= i; ++a)
        rhs += mult(steenrod_power(ctx, a, f), steenrod_power(ctx, i - a, g));
    return lhs == reduce_mod(rhs, ctx.p);
}

bool verify_adem_instance(const PrimeContext& ctx, int a, int b, int weight_bound)
{
    const int p = ctx.p;
    if (a >= p * b)
        throw std::invalid_argument("verify_adem_instance requires a < p*b");
    for (int w = 0; w <= weight_bound; ++w) {
        for (const Partition& mu : partitions_of(w)) {
            SymFunc x(mu);
            SymFunc lhs = steenrod_power(ctx, a, steenrod_power(ctx, b, x));
            SymFunc rhs;
            for (int j = 0; p * j <= a; ++j) {
                mpz_class c = binom((p - 1) * (b - j) - 1, a - p * j);
                if ((a + j) % 2)
                    c = -c;
                rhs += steenrod_power(ctx, a + b - j, steenrod_power(ctx, j, x)) * c;
            }
            if (lhs != reduce_mod(rhs, p))
                return false;
        }
    }
    return true;
}

namespace {

    SymFunc sw_class(int j)
    {
        if (j == 0)
            return SymFunc::unit();
        return SymFunc(Partition::of(std::vector<int>(j, 1)));
    }

}  // namespace

bool verify_wu(int k, int i)
{
    if (i < 0 || i > k - i)
        throw std::invalid_argument("verify_wu requires 0 <= i <= k-i");
    PrimeContext ctx(2, 1);
    SymFunc lhs = steenrod_power(ctx, i, sw_class(k - i));
    SymFunc rhs;
    for (int t = 0; t <= i; ++t)
        rhs += mult(sw_class(t), sw_class(k - t)) * binom(k - i - 1 - t, i - t);
    return lhs == reduce_mod(rhs, 2);
}

ChernPoly chern_coefficient_profile(const PrimeContext& ctx, int i, int source)
{
    if (ctx.var_degree != 2)
        throw std::invalid_argument("chern_coefficient_profile needs degree-2 generators");
    if (source < 0 || i < 0)
        throw std::invalid_argument("chern_coefficient_profile: negative arguments");
    SymFunc c_source = source == 0
                           ? SymFunc::unit()
                           : SymFunc(Partition::of(std::vector<int>(source, 1)));
    SymFunc image = steenrod_power(ctx, i, c_source);
    return monomial_to_elementary(image, ctx.p);
}

int bp_leading_coefficient(int p, int k, int i)
{
    if (k - (p - 1) * i < 1)
        throw std::invalid_argument("bp_leading_coefficient requires k-(p-1)i >= 1");
    PrimeContext ctx(p, 2);
    ChernPoly profile = chern_coefficient_profile(ctx, i, k - (p - 1) * i);
    mpz_class lead = profile.coeff(Partition::of({k}));
    mpz_class expected = binom(k - (p - 1) * i - 1, i) % p;
    if (expected < 0)
        expected += p;
    if (lead != expected) {
        std::ostringstream os;
        os << "leading coefficient of c" << k << " in P^" << i << "(c" << (k - (p - 1) * i)
           << ") mod " << p << " is " << lead.get_str() << ", expected " << expected.get_str();
        throw std::logic_error(os.str());
    }
    return static_cast<int>(lead.get_si());
}

DecompositionCertificate decompose_chern(int p, int k)
{
    if (!is_prime(p))
        throw std::invalid_argument("decompose_chern: p must be prime");
    if (k <= 0)
        throw std::invalid_argument("decompose_chern: k must be positive");
    long lambda = k;
    int i = 0;
    while (lambda % p == 0) {
        lambda /= p;
        ++i;
    }
    if (lambda <= p)
        throw std::invalid_argument("decompose_chern: k must be lambda*p^i with lambda > p coprime to p");

    long pi = 1;
    for (int t = 0; t < i; ++t)
        pi *= p;

    int op_exponent;
    int source;
    if (p != 2) {
        op_exponent = static_cast<int>(pi);
        source = static_cast<int>((lambda - p + 1) * pi);
    } else if (lambda % 4 == 3) {
        op_exponent = static_cast<int>(pi);
        source = static_cast<int>((lambda - 1) * pi);
    } else {
        // lambda = 1 mod 4: one step of P^{2^{i+1}} from c_{(lambda-2)2^i}.
        op_exponent = static_cast<int>(2 * pi);
        source = static_cast<int>((lambda - 2) * pi);
    }

    PrimeContext ctx(p, 2);
    ChernPoly profile = chern_coefficient_profile(ctx, op_exponent, source);

    DecompositionCertificate cert;
    cert.p = p;
    cert.k = k;
    cert.source_index = source;
    cert.op_exponent = op_exponent;
    Partition ck = Partition::of({k});
    mpz_class lead = profile.coeff(ck);
    cert.leading_coeff = static_cast<int>(lead.get_si());
    for (const auto& [indices, c] : profile.terms())
        if (!(indices == ck))
            cert.decomposable_part.add_term(indices, c);

    bool decomposable_ok = true;
    for (const auto& [indices, c] : cert.decomposable_part.terms())
        if (indices.size() < 2 || indices.part(0) >= k)
            decomposable_ok = false;
    cert.verified = cert.leading_coeff != 0 && decomposable_ok &&
                    profile.homogeneous_degree() == std::optional<int>(2 * k);
    return cert;
}

bool verify_sl_ideal(int p, int l, int weight_bound)
{
    if (!is_prime(p) || l <= 0)
        throw std::invalid_argument("verify_sl_ideal: need prime p and l >= 1");
    long pl = 1;
    for (int t = 0; t < l; ++t)
        pl *= p;

    auto in_sl = [&](const Partition& q) {
        for (auto [val, r] : q.runs())
            if (r % pl != 0)
                return true;
        return false;
    };

    for (int wn = 0; wn <= weight_bound; ++wn) {
        for (const Partition& pn : partitions_of(wn)) {
            if (in_sl(pn))
                continue;
            for (int wm = 1; wm <= wn; ++wm) {
                for (const Partition& pm : partitions_of(wm)) {
                    if (!in_sl(pm))
                        continue;
                    // Grading restricts the cofactor's weight.
                    for (const Partition& po : partitions_of(wn - wm)) {
                        mpz_class c = mult_monomial(pm, po).coeff(pn);
                        if (c % p != 0)
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

DescentTrace descent_trace(int p, long lambda)
{
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("descent_trace: p must be an odd prime");
    if (lambda <= p || lambda % p == 0)
        throw std::invalid_argument("descent_trace: lambda must exceed p and be coprime to p");

    DescentTrace tr;
    tr.p = p;
    tr.lambda = lambda;

    long witness = 0;
    for (long a = 1; a <= (p - 1) / 2; ++a) {
        long residue = (a * lambda) % (p - 1);
        if (residue * p < a * lambda) {
            witness = a;
            break;
        }
    }
    if (witness == 0)
        return tr;  // cannot happen for valid inputs; callers treat empty as failure

    // Rows up to the last j with a_j = witness, where the degree factor
    // equals the residue [a*lambda]_{p-1}.
    long j_last = witness * lambda / (p - 1);
    for (long j = 1; j <= j_last; ++j) {
        long a = (j * (p - 1) + lambda - 1) / lambda;  // ceil
        tr.rows.push_back({j, a, a * lambda - j * (p - 1)});
    }
    tr.witness_a = witness;
    return tr;
}

}  // namespace perical
