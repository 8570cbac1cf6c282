#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reinhardt/classify.hpp"
#include "reinhardt/norms.hpp"
#include "reinhardt/spectrum.hpp"
#include "reinhardt/witness.hpp"

namespace reinhardt {

using Json = nlohmann::ordered_json;

/// Parses "1,-2,3/2" into scalars.
ExponentVector parse_vector(const std::string& csv, size_t n);
IntVector parse_int_vector(const std::string& csv, size_t n);
std::vector<mpq_class> parse_rational_list(const std::string& csv);

Json scalar_json(const Scalar& s);
Json vector_json(const ExponentVector& v);
Json int_vector_json(const IntVector& v);
Json interval_json(const Interval& v);

Json classify_report(const DomainSpec& spec);
Json norm_report(const NormResult& r, const ExponentVector& nu, const mpq_class& p);
Json sup_report(const NormResult& r, const ExponentVector& nu);
Json volume_report(const DomainSpec& spec, std::optional<MonteCarloOptions> mc);
Json witness_report(const WitnessFunction& w, const std::optional<WitnessCertificate>& cert,
                    const std::vector<mpq_class>& p_list);
Json spectrum_report(const DomainSpec& spec, const FunctionSpace& space, long radius);
Json integrable_report(const std::optional<IntegrableMonomial>& m);

}  // namespace reinhardt
