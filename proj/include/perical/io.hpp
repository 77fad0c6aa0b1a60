#pragma once

#include <json.hpp>

#include <variant>

#include "perical/chern.hpp"
#include "perical/graded_algebra.hpp"
#include "perical/periodicity.hpp"
#include "perical/projective.hpp"
#include "perical/steenrod.hpp"
#include "perical/symfunc.hpp"
#include "perical/triangle.hpp"
#include "perical/weightsets.hpp"

namespace perical {

using nlohmann::json;

std::string mpq_str(const mpq_class& q);
mpq_class mpq_parse(const json& j);

json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

json chernpoly_to_json(const ChernPoly& g);
json certificate_to_json(const DecompositionCertificate& cert);
json descent_to_json(const DescentTrace& tr);

json weightset_to_json(const WeightSet& ws);
WeightSet weightset_from_json(const json& j);
json classification_to_json(const ClassificationTable& table);
std::string classification_to_text(const ClassificationTable& table);

json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const json& j);

Triangle triangle_from_json(const json& j);
json triangle_classification_to_json(const TriangleClassification& cls);

// Either a rational or a prime-field algebra, decided by the "field" tag
// ("Q" or "Fp:<p>").
using AlgebraVariant =
    std::variant<GradedAlgebra<RationalField>, GradedAlgebra<PrimeField>>;
AlgebraVariant algebra_from_json(const json& j);
AlgebraVariant named_model(const std::string& name, const std::string& field_tag);

template <class F>
json report_to_json(const PeriodicityReport<F>& rep);

json element_to_json(const Element<RationalField>& e);
json element_to_json(const Element<PrimeField>& e);

}  // namespace perical
