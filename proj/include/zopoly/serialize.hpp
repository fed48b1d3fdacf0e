#pragma once

#include <json.hpp>

#include "zopoly/cyclotomic.hpp"
#include "zopoly/diophant.hpp"
#include "zopoly/factor.hpp"
#include "zopoly/homometry.hpp"
#include "zopoly/polytope.hpp"

namespace zopoly {

using nlohmann::json;

// coefficients serialize as decimal strings (arbitrary precision)
json to_json(const IntPoly& f);
IntPoly poly_from_json(const json& j);

json to_json(const SupportSet& s);
json to_json(const CyclotomicFactorization& cf);
json to_json(const FactorizationReport& rep);
json to_json(const DifferenceMultiset& dm);
json to_json(const UniquenessReport& rep);
json to_json(const BoxParameters& p);
json to_json(const BoxCertificate& c);
json to_json(const BoundsReport& rep);
json to_json(const Polytope2& p);
json to_json(const BivariateSupport& p);
json to_json(const GHPair& gh);

} // namespace zopoly
