#include "perical/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace perical {

Partition Partition::of(std::vector<int> parts)
{
    for (int p : parts)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition r;
    r.parts_ = std::move(parts);
    return r;
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<std::pair<int, int>> Partition::runs() const
{
    std::vector<std::pair<int, int>> r;
    for (int p : parts_) {
        if (!r.empty() && r.back().first == p)
            ++r.back().second;
        else
            r.push_back({p, 1});
    }
    return r;
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (parts_.empty())
        return Partition();
    c.resize(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++c[j];
    return Partition::of(std::move(c));
}

namespace {

    struct Cursor {
        const std::string& s;
        size_t i = 0;
        void skip_ws()
        {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
        }
        bool eat(char c)
        {
            skip_ws();
            if (i < s.size() && s[i] == c) {
                ++i;
                return true;
            }
            return false;
        }
        char peek()
        {
            skip_ws();
            return i < s.size() ? s[i] : '\0';
        }
        int read_int()
        {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i == start)
                throw std::invalid_argument("partition syntax error: expected integer in '" + s + "'");
            return std::stoi(s.substr(start, i - start));
        }
    };

}  // namespace

Partition Partition::parse(const std::string& text)
{
    Cursor c{text};
    if (!c.eat('('))
        throw std::invalid_argument("partition syntax error: expected '(' in '" + text + "'");
    if (c.eat(')')) {
        c.skip_ws();
        if (c.i != text.size())
            throw std::invalid_argument("partition syntax error: trailing characters in '" + text + "'");
        return Partition();
    }

    std::vector<int> parts;
    if (c.peek() == '(') {
        // power notation ((n1)^r1,(n2)^r2,...)
        int prev = 0;
        bool first = true;
        for (;;) {
            if (!c.eat('('))
                throw std::invalid_argument("partition syntax error in '" + text + "'");
            int n = c.read_int();
            if (!c.eat(')') || !c.eat('^'))
                throw std::invalid_argument("partition syntax error in '" + text + "'");
            int r = c.read_int();
            if (n <= 0 || r <= 0)
                throw std::invalid_argument("partition parts and exponents must be positive");
            if (!first && n >= prev)
                throw std::invalid_argument("power notation requires strictly decreasing bases in '" + text + "'");
            first = false;
            prev = n;
            for (int j = 0; j < r; ++j)
                parts.push_back(n);
            if (c.eat(')'))
                break;
            if (!c.eat(','))
                throw std::invalid_argument("partition syntax error in '" + text + "'");
        }
    } else {
        int prev = 0;
        bool first = true;
        for (;;) {
            int n = c.read_int();
            if (n <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (!first && n > prev)
                throw std::invalid_argument("partition parts must be non-increasing in '" + text + "'");
            first = false;
            prev = n;
            parts.push_back(n);
            if (c.eat(')'))
                break;
            if (!c.eat(','))
                throw std::invalid_argument("partition syntax error in '" + text + "'");
        }
    }
    c.skip_ws();
    if (c.i != text.size())
        throw std::invalid_argument("partition syntax error: trailing characters in '" + text + "'");

    Partition r;
    r.parts_ = std::move(parts);
    return r;
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::string Partition::str_powers() const
{
    if (parts_.empty())
        return "()";
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto [n, r] : runs()) {
        if (!first)
            os << ',';
        first = false;
        os << '(' << n << ")^" << r;
    }
    os << ')';
    return os.str();
}

int compare_lex(const Partition& a, const Partition& b)
{
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a.part(i) : 0;
        int y = i < b.size() ? b.part(i) : 0;
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

}  // namespace perical
