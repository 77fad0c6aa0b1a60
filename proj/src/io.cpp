#include "perical/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace perical {

std::string mpq_str(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class mpq_parse(const json& j)
{
    if (j.is_number_integer())
        return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad rational: " + j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

namespace {

    long coeff_to_long(const mpz_class& c)
    {
        if (!c.fits_slong_p())
            throw std::invalid_argument("coefficient too large for JSON number");
        return c.get_si();
    }

}  // namespace

json symfunc_to_json(const SymFunc& f)
{
    json terms = json::array();
    for (const auto& [p, c] : f.terms()) {
        json t;
        t["parts"] = p.parts();
        t["coeff"] = coeff_to_long(c);
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

SymFunc symfunc_from_json(const json& j)
{
    SymFunc f;
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("parts").get<std::vector<int>>();
        long c = t.at("coeff").get<long>();
        f.add_term(Partition::of(std::move(parts)), c);
    }
    return f;
}

json chernpoly_to_json(const ChernPoly& g)
{
    json terms = json::array();
    for (const auto& [indices, c] : g.terms()) {
        json t;
        t["indices"] = indices.parts();
        t["coeff"] = coeff_to_long(c);
        terms.push_back(t);
    }
    return terms;
}

json certificate_to_json(const DecompositionCertificate& cert)
{
    return json{{"p", cert.p},
                {"k", cert.k},
                {"op_exponent", cert.op_exponent},
                {"source", cert.source_index},
                {"leading_coeff", cert.leading_coeff},
                {"decomposable", chernpoly_to_json(cert.decomposable_part)},
                {"verified", cert.verified}};
}

json descent_to_json(const DescentTrace& tr)
{
    json rows = json::array();
    for (const auto& r : tr.rows)
        rows.push_back(json{{"j", r.j}, {"a", r.a}, {"deg_factor", r.deg_factor}});
    json out{{"p", tr.p}, {"lambda", tr.lambda}, {"rows", rows}};
    if (tr.witness_a)
        out["witness_a"] = *tr.witness_a;
    return out;
}

json weightset_to_json(const WeightSet& ws)
{
    json arr = json::array();
    for (const auto& w : ws.weights())
        arr.push_back(std::vector<int>(w.c.begin(), w.c.end()));
    return arr;
}

WeightSet weightset_from_json(const json& j)
{
    std::vector<Weight4> ws;
    for (const auto& row : j) {
        auto v = row.get<std::vector<int>>();
        if (v.size() != 4)
            throw std::invalid_argument("weights must have four coordinates");
        ws.push_back(Weight4::normalized({v[0], v[1], v[2], v[3]}));
    }
    return WeightSet::make(std::move(ws));
}

json classification_to_json(const ClassificationTable& table)
{
    json classes = json::array();
    for (const auto& e : table.classes)
        classes.push_back(json{{"size", e.set.size()},
                               {"weights", weightset_to_json(e.set)},
                               {"splitting_t3", e.splitting}});
    json hist = json::object();
    for (auto [size, count] : table.histogram_by_size())
        hist[std::to_string(size)] = count;
    return json{{"classes", classes},
                {"histogram", hist},
                {"splitting_count", table.splitting_count()}};
}

std::string classification_to_text(const ClassificationTable& table)
{
    // Columns mirror the published table: size, weights beyond the basis,
    // splitting flag.
    std::vector<std::array<std::string, 3>> rows;
    for (const auto& e : table.classes) {
        std::ostringstream ws;
        bool first = true;
        for (const auto& w : e.set.weights()) {
            if (global_rank(w) < 4)
                continue;  // basis
            if (!first)
                ws << ' ';
            first = false;
            ws << '(' << w.c[0] << ',' << w.c[1] << ',' << w.c[2] << ',' << w.c[3] << ')';
        }
        rows.push_back({std::to_string(e.set.size()),
                        first ? std::string("-") : ws.str(),
                        e.splitting ? "yes" : "no"});
    }
    size_t w0 = 4, w1 = 30, w2 = 3;
    for (const auto& r : rows) {
        w0 = std::max(w0, r[0].size());
        w1 = std::max(w1, r[1].size());
        w2 = std::max(w2, r[2].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::string& a, const std::string& b, const std::string& c) {
        os << a << std::string(w0 - a.size(), ' ') << " | " << b
           << std::string(w1 - b.size(), ' ') << " | " << c << '\n';
    };
    emit("size", "weights beyond the standard basis", "splitting T^3");
    os << std::string(w0, '-') << "-+-" << std::string(w1, '-') << "-+-" << std::string(w2, '-')
       << '\n';
    for (const auto& r : rows)
        emit(r[0], r[1], r[2]);
    return os.str();
}

json configuration_to_json(const Configuration& cfg)
{
    json pts = json::array();
    for (const auto& p : cfg.points)
        pts.push_back(p.coords);
    return json{{"dim", cfg.dim}, {"points", pts}};
}

Configuration configuration_from_json(const json& j)
{
    int dim = j.at("dim").get<int>();
    std::vector<ProjPoint> pts;
    for (const auto& row : j.at("points")) {
        std::vector<mpq_class> v;
        for (const auto& x : row)
            v.push_back(mpq_parse(x));
        pts.push_back(normalize(v));
    }
    return Configuration::make(dim, std::move(pts));
}

namespace {

    WeightMultiset multiset_from_json(const json& j)
    {
        WeightMultiset m;
        for (const auto& row : j) {
            RatVec v;
            for (const auto& x : row)
                v.push_back(mpq_parse(x));
            m.weights.push_back(std::move(v));
        }
        return m;
    }

    json ratvec_to_json(const RatVec& v)
    {
        json a = json::array();
        for (const auto& x : v)
            a.push_back(mpq_str(x));
        return a;
    }

}  // namespace

Triangle triangle_from_json(const json& j)
{
    return Triangle::make(multiset_from_json(j.at("A")), multiset_from_json(j.at("B")),
                          multiset_from_json(j.at("C")));
}

json triangle_classification_to_json(const TriangleClassification& cls)
{
    json out{{"kind", to_string(cls.kind)}};
    if (cls.kind == TriangleKind::AxiomViolation)
        out["reason"] = cls.reason;
    if (cls.kind == TriangleKind::Type1 || cls.kind == TriangleKind::Type2) {
        out["a"] = ratvec_to_json(cls.a);
        out["b"] = ratvec_to_json(cls.b);
        out["c"] = ratvec_to_json(cls.c);
        json m = json::array();
        for (const auto& row : cls.basis_change)
            m.push_back(ratvec_to_json(row));
        out["basis_change"] = m;
        json sa = json::array(), sb = json::array(), sc = json::array();
        for (const auto& s : cls.scalars_a)
            sa.push_back(mpq_str(s));
        for (const auto& s : cls.scalars_b)
            sb.push_back(mpq_str(s));
        for (const auto& s : cls.scalars_c)
            sc.push_back(mpq_str(s));
        out["scalars"] = json{{"A", sa}, {"B", sb}, {"C", sc}};
        out["normal_form"] = json{{"A", json::array()}, {"B", json::array()}, {"C", json::array()}};
        for (const auto& v : cls.normal_a)
            out["normal_form"]["A"].push_back(ratvec_to_json(v));
        for (const auto& v : cls.normal_b)
            out["normal_form"]["B"].push_back(ratvec_to_json(v));
        for (const auto& v : cls.normal_c)
            out["normal_form"]["C"].push_back(ratvec_to_json(v));
    }
    return out;
}

namespace {

    template <class F>
    GradedAlgebra<F> algebra_from_json_impl(F field, const json& j)
    {
        int n = j.at("n").get<int>();
        std::vector<int> dims = j.at("dims").get<std::vector<int>>();
        typename GradedAlgebra<F>::Structure st;
        for (const auto& entry : j.at("structure")) {
            int a = entry.at("a").get<int>();
            int b = entry.at("b").get<int>();
            if (a < 0 || b < 0 || a + b > n)
                throw std::invalid_argument("structure entry outside degree range");
            int da = dims.at(a), db = dims.at(b), dc = dims.at(a + b);
            const auto& table = entry.at("table");
            if (static_cast<int>(table.size()) != da * db)
                throw std::invalid_argument("structure table must have dim(a)*dim(b) rows");
            typename GradedAlgebra<F>::Tensor tensor(
                da, std::vector<Vec<F>>(db, Vec<F>(dc, field.zero())));
            for (int ia = 0; ia < da; ++ia)
                for (int ib = 0; ib < db; ++ib) {
                    const auto& row = table.at(ia * db + ib);
                    if (static_cast<int>(row.size()) != dc)
                        throw std::invalid_argument("structure row has wrong length");
                    for (int t = 0; t < dc; ++t) {
                        if constexpr (std::is_same_v<F, RationalField>)
                            tensor[ia][ib][t] = mpq_parse(row.at(t));
                        else
                            tensor[ia][ib][t] = field.from_int(row.at(t).get<long>());
                    }
                }
            st[{a, b}] = std::move(tensor);
        }
        return GradedAlgebra<F>(field, n, dims, st);
    }

    int parse_field_tag(const std::string& tag)
    {
        // "Q" -> 0, "Fp:<p>" -> p
        if (tag == "Q")
            return 0;
        if (tag.rfind("Fp:", 0) == 0) {
            int p = std::stoi(tag.substr(3));
            if (!is_prime(p))
                throw std::invalid_argument("field characteristic must be prime");
            return p;
        }
        throw std::invalid_argument("field must be \"Q\" or \"Fp:<p>\"");
    }

}  // namespace

AlgebraVariant algebra_from_json(const json& j)
{
    int p = parse_field_tag(j.at("field").get<std::string>());
    if (p == 0)
        return algebra_from_json_impl(RationalField{}, j);
    return algebra_from_json_impl(PrimeField{p}, j);
}

AlgebraVariant named_model(const std::string& name, const std::string& field_tag)
{
    int p = parse_field_tag(field_tag);
    if (p == 0)
        return model(name, RationalField{});
    return model(name, PrimeField{p});
}

json element_to_json(const Element<RationalField>& e)
{
    json coords = json::array();
    for (const auto& c : e.coords)
        coords.push_back(mpq_str(c));
    return json{{"degree", e.degree}, {"coords", coords}};
}

json element_to_json(const Element<PrimeField>& e)
{
    json coords = json::array();
    for (long c : e.coords)
        coords.push_back(c);
    return json{{"degree", e.degree}, {"coords", coords}};
}

template <class F>
json report_to_json(const PeriodicityReport<F>& rep)
{
    json spectrum = json::array();
    for (int k : rep.spectrum)
        spectrum.push_back(k);
    json witnesses = json::array();
    for (const auto& [k, w] : rep.witnesses)
        witnesses.push_back(element_to_json(w));
    json out{{"spectrum", spectrum}, {"witnesses", witnesses}, {"exact", rep.exact}};
    if (rep.minimal_degree)
        out["minimal_degree"] = *rep.minimal_degree;
    return out;
}

template json report_to_json(const PeriodicityReport<RationalField>&);
template json report_to_json(const PeriodicityReport<PrimeField>&);

}  // namespace perical
