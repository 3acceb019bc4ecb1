#pragma once

#include "reflectcg/boundary_k.hpp"
#include "reflectcg/re_engine.hpp"
#include "reflectcg/report.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace rcg {

using Json = nlohmann::ordered_json;

// Canonical polynomial encoding: a list of {"m": {var: exp, ...}, "c":
// [re, om]} ordered by the monomial order; coefficients as "num/den"
// strings. Byte-stable for identical values.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const Json& j);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);
// Form dump keyed by "klmn".
Json form_to_json(const Form& f);

std::string poly_to_latex(const Poly& p);
std::string ratfn_to_latex(const RatFn& f);
std::string mat_to_latex(const Mat& m);

// Parameter files: {"family":"I","B":[..],"D":[..],"E":[..]},
// {"family":"II","b":"..","F":[..],"G":[..]}, {"family":"C","c":[..4..]}.
struct ParamFile {
    std::variant<ParamsI, ParamsII, CParams> params;
    bool ad_t = false;  // for family C
};
ParamFile params_from_json(const Json& j);
Json params_to_json(const ParamsI& p);
Json params_to_json(const ParamsII& p);

Json report_to_json(const Report& r, bool with_timings = false);
std::string report_to_text(const Report& r);

}  // namespace rcg
