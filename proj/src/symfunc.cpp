#include "perical/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "perical/matching.hpp"

namespace perical {

SymFunc::SymFunc(const Partition& p, mpz_class coeff)
{
    add_term(p, coeff);
}

mpz_class SymFunc::coeff(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::optional<int> SymFunc::homogeneous_weight() const
{
    if (terms_.empty())
        return std::nullopt;
    int w = terms_.begin()->first.weight();
    for (const auto& [p, c] : terms_)
        if (p.weight() != w)
            return std::nullopt;
    return w;
}

void SymFunc::add_term(const Partition& p, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, -c);
    return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const
{
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const
{
    SymFunc r = *this;
    r -= o;
    return r;
}

SymFunc SymFunc::operator-() const
{
    SymFunc r;
    for (const auto& [p, c] : terms_)
        r.terms_.emplace(p, -c);
    return r;
}

SymFunc SymFunc::operator*(const mpz_class& c) const
{
    SymFunc r;
    if (c == 0)
        return r;
    for (const auto& [p, k] : terms_)
        r.terms_.emplace(p, k * c);
    return r;
}

std::string SymFunc::str() const
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
        if (a != 1)
            os << a.get_str();
        os << p.str();
    }
    return os.str();
}

SymFunc SymFunc::parse(const std::string& text)
{
    SymFunc r;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '0') {
        ++i;
        skip_ws();
        if (i == text.size())
            return r;
        throw std::invalid_argument("symfunc syntax error in '" + text + "'");
    }
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+')
                throw std::invalid_argument("symfunc syntax error in '" + text + "'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("symfunc syntax error: expected '+' or '-' in '" + text + "'");
        }
        first = false;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        mpz_class coeff = 1;
        if (i > start)
            coeff = mpz_class(text.substr(start, i - start));
        skip_ws();
        if (i >= text.size() || text[i] != '(')
            throw std::invalid_argument("symfunc syntax error: expected partition in '" + text + "'");
        int depth = 0;
        size_t pstart = i;
        do {
            if (text[i] == '(')
                ++depth;
            else if (text[i] == ')')
                --depth;
            ++i;
            if (i > text.size())
                throw std::invalid_argument("symfunc syntax error: unbalanced parentheses in '" + text + "'");
        } while (depth > 0);
        Partition p = Partition::parse(text.substr(pstart, i - pstart));
        r.add_term(p, sign * coeff);
        skip_ws();
    }
    return r;
}

SymFunc mult_monomial(const Partition& pn, const Partition& pm)
{
    SymFunc r;
    for (const Matching& m : enumerate_matchings(pn, pm))
        r.add_term(m.target(), m.coefficient());
    return r;
}

SymFunc mult(const SymFunc& f, const SymFunc& g)
{
    SymFunc r;
    for (const auto& [pf, cf] : f.terms())
        for (const auto& [pg, cg] : g.terms())
            r += mult_monomial(pf, pg) * (cf * cg);
    return r;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

SymFunc reduce_mod(const SymFunc& f, int p)
{
    if (!is_prime(p))
        throw std::invalid_argument("modulus must be prime");
    SymFunc r;
    for (const auto& [part, c] : f.terms()) {
        mpz_class m = c % p;
        if (m < 0)
            m += p;
        r.add_term(part, m);
    }
    return r;
}

ExpandTable expand_oracle(const SymFunc& f, int nvars)
{
    if (nvars < 0)
        throw std::invalid_argument("variable count must be nonnegative");
    ExpandTable table;
    for (const auto& [p, c] : f.terms()) {
        if (static_cast<size_t>(nvars) < p.size())
            throw std::invalid_argument("expand_oracle: " + std::to_string(nvars) +
                                        " variables cannot faithfully hold " + p.str());
        std::vector<int> exps(nvars, 0);
        std::copy(p.parts().begin(), p.parts().end(), exps.begin());
        std::sort(exps.begin(), exps.end());
        do {
            table[exps] += c;
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    for (auto it = table.begin(); it != table.end();)
        it = it->second == 0 ? table.erase(it) : std::next(it);
    return table;
}

SymFunc collect_expansion(const ExpandTable& table)
{
    SymFunc r;
    for (const auto& [exps, c] : table) {
        bool sorted_desc = std::is_sorted(exps.begin(), exps.end(), std::greater<int>());
        if (!sorted_desc)
            continue;
        std::vector<int> parts;
        for (int e : exps)
            if (e > 0)
                parts.push_back(e);
        r.add_term(Partition::of(std::move(parts)), c);
    }
    return r;
}

ExpandTable expand_product(const ExpandTable& a, const ExpandTable& b)
{
    ExpandTable r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            if (ea.size() != eb.size())
                throw std::invalid_argument("expansion tables have different variable counts");
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

namespace {
    void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                        std::vector<Partition>& out)
    {
        if (remaining == 0) {
            out.push_back(Partition::of(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            partitions_rec(remaining - p, p, cur, out);
            cur.pop_back();
        }
    }
}  // namespace

std::vector<Partition> partitions_of(int weight)
{
    if (weight < 0)
        throw std::invalid_argument("weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(weight, weight == 0 ? 1 : weight, cur, out);
    std::sort(out.begin(), out.end(), LexGreater{});
    return out;
}

}  // namespace perical
