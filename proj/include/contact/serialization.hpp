#pragma once

#include <string>

#include "json.hpp"

#include "contact/covers.hpp"
#include "contact/curve_builder.hpp"
#include "contact/jet_oracle.hpp"
#include "contact/lefschetz.hpp"
#include "contact/polynomial.hpp"
#include "contact/resolution_model.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"
#include "contact/weights.hpp"

namespace contact
{

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"nvars": 2, "terms": [{"exp": [2, 0], "coef": 1}, ...]}
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const SncConfiguration& cfg);
SncConfiguration configuration_from_json(const Json& j);

Json to_json(const ValidationReport& report);

Json weights_to_json(const WeightVector& w);
WeightVector weights_from_json(const Json& j);

Json to_json(const ResolutionLog& log);
ResolutionLog resolution_log_from_json(const Json& j);

Json to_json(const SeparationResult& result);
SeparationResult separation_from_json(const Json& j);

Json to_json(const CoverHomology& cover);
CoverHomology cover_from_json(const Json& j);

Json to_json(const ContributingSet& set);
ContributingSet contributing_set_from_json(const Json& j);

Json to_json(const E1Page& page);
E1Page e1_page_from_json(const Json& j);

Json to_json(const HcReport& report);
HcReport hc_report_from_json(const Json& j);

Json to_json(const ZetaFactorization& zeta);
ZetaFactorization zeta_from_json(const Json& j);

Json to_json(const EulerCheck& check);
EulerCheck euler_check_from_json(const Json& j);

Json to_json(const CountReport& report);
CountReport count_report_from_json(const Json& j);

Json to_json(const ChiFit& fit);
ChiFit chi_fit_from_json(const Json& j);

Json to_json(const FibrationCheck& check);
FibrationCheck fibration_from_json(const Json& j);

Json to_json(const GapAnalysis& gap);
GapAnalysis gap_analysis_from_json(const Json& j);

// Reads a configuration or polynomial document from disk.
Json read_json_file(const std::string& path);

} // namespace contact
