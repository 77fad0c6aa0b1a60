#include "perical/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace perical {

ChernPoly::ChernPoly(const Partition& indices, mpz_class coeff)
{
    add_term(indices, coeff);
}

mpz_class ChernPoly::coeff(const Partition& indices) const
{
    auto it = terms_.find(indices);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void ChernPoly::add_term(const Partition& indices, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(indices, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

ChernPoly ChernPoly::operator+(const ChernPoly& o) const
{
    ChernPoly r = *this;
    r += o;
    return r;
}

ChernPoly ChernPoly::operator*(const mpz_class& c) const
{
    ChernPoly r;
    if (c == 0)
        return r;
    for (const auto& [p, k] : terms_)
        r.terms_.emplace(p, k * c);
    return r;
}

std::optional<int> ChernPoly::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = 2 * terms_.begin()->first.weight();
    for (const auto& [p, c] : terms_)
        if (2 * p.weight() != d)
            return std::nullopt;
    return d;
}

std::string ChernPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || p.empty())
            os << a.get_str() << (p.empty() ? "" : " ");
        bool first_factor = true;
        for (auto [k, r] : p.runs()) {
            if (!first_factor)
                os << ' ';
            first_factor = false;
            os << 'c' << k;
            if (r > 1)
                os << '^' << r;
        }
    }
    return os.str();
}

namespace {

    mpz_class mod_reduce(const mpz_class& c, std::optional<int> mod)
    {
        if (!mod)
            return c;
        mpz_class m = c % *mod;
        if (m < 0)
            m += *mod;
        return m;
    }

}  // namespace

ChernPoly monomial_to_elementary(const SymFunc& f, std::optional<int> mod)
{
    if (!f.is_zero() && !f.homogeneous_weight())
        throw std::invalid_argument("monomial_to_elementary requires homogeneous input");

    // The leading lex term of e_{lambda'} (product over conjugate parts) is
    // m_lambda with coefficient 1, so repeatedly knocking out the lex-top
    // term terminates.
    SymFunc rest = f;
    ChernPoly out;
    while (!rest.is_zero()) {
        const auto& [lead, coeff_raw] = *rest.terms().begin();
        mpz_class c = mod_reduce(coeff_raw, mod);
        if (c == 0) {
            SymFunc pruned;
            for (const auto& [p, k] : rest.terms())
                pruned.add_term(p, mod_reduce(k, mod));
            rest = pruned;
            continue;
        }
        Partition indices = lead.conjugate();
        SymFunc prod = SymFunc::unit();
        for (int k : indices.parts()) {
            std::vector<int> ones(k, 1);
            prod = mult(prod, SymFunc(Partition::of(ones)));
            if (mod)
                prod = reduce_mod(prod, *mod);
        }
        out.add_term(indices, c);
        rest -= prod * c;
        if (mod) {
            SymFunc reduced;
            for (const auto& [p, k] : rest.terms())
                reduced.add_term(p, mod_reduce(k, mod));
            rest = reduced;
        }
    }
    return out;
}

SymFunc elementary_to_monomial(const ChernPoly& g, std::optional<int> mod)
{
    SymFunc out;
    for (const auto& [indices, c] : g.terms()) {
        SymFunc prod = SymFunc::unit();
        for (int k : indices.parts()) {
            std::vector<int> ones(k, 1);
            prod = mult(prod, SymFunc(Partition::of(ones)));
            if (mod)
                prod = reduce_mod(prod, *mod);
        }
        out += prod * c;
    }
    if (mod)
        out = reduce_mod(out, *mod);
    return out;
}

}  // namespace perical
