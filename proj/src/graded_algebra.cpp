#include "perical/graded_algebra.hpp"

#include <stdexcept>

namespace perical {

namespace {

    // "name(args)" -> {name, {ints}}
    std::pair<std::string, std::vector<int>> parse_model_name(const std::string& s)
    {
        auto open = s.find('(');
        if (open == std::string::npos)
            return {s, {}};
        if (s.back() != ')')
            throw std::invalid_argument("bad model name: " + s);
        std::string base = s.substr(0, open);
        std::vector<int> args;
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        size_t pos = 0;
        while (pos < inner.size()) {
            size_t comma = inner.find(',', pos);
            std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            args.push_back(std::stoi(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return {base, args};
    }

}  // namespace

template <class F>
GradedAlgebra<F> model(const std::string& name, F field)
{
    auto [base, args] = parse_model_name(name);
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("model " + base + " expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (base == "sphere") {
        need(1);
        return model_sphere(field, args[0]);
    }
    if (base == "cp") {
        need(1);
        return model_cp(field, args[0]);
    }
    if (base == "hp") {
        need(1);
        return model_hp(field, args[0]);
    }
    if (base == "cayley_plane") {
        need(0);
        return model_cayley_plane(field);
    }
    if (base == "sphere_cross_hp") {
        need(2);
        return model_sphere_cross_hp(field, args[0], args[1]);
    }
    throw std::invalid_argument("unsupported model: " + name);
}

template GradedAlgebra<RationalField> model(const std::string&, RationalField);
template GradedAlgebra<PrimeField> model(const std::string&, PrimeField);

}  // namespace perical
