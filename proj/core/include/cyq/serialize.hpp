#pragma once

#include <json.hpp>

#include "cyq/cyclotomic.hpp"
#include "cyq/fixed_locus.hpp"
#include "cyq/lefschetz.hpp"
#include "cyq/local_type.hpp"
#include "cyq/monomial.hpp"
#include "cyq/sections.hpp"

// JSON wire formats. Integers of unbounded size are serialized as strings;
// rationals as [num, den] string pairs. All objects serialize with sorted
// keys, so identical values produce byte-identical dumps.
namespace cyq {

using json = nlohmann::json;

json to_json(const Integer& z);
Integer integer_from_json(const json& j);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const json& j);

json to_json(const LocalType& t);
LocalType local_type_from_json(const json& j);

json to_json(const SingularityClassification& c);

json to_json(const FixedConfig& c);
FixedConfig fixed_config_from_json(const json& j);

json to_json(const ContiCheck& c);
json to_json(const ConfigReport& r);
json to_json(const AdmissiblePrime& a);
json to_json(const Order3Counts& c);
json to_json(const Order5Counts& c);
json to_json(const InvolutionClassification& c);

json to_json(const Ambient& amb);
Ambient ambient_from_json(const json& j);

// {dims, sigma, mats: [{size, root_order, entries: [[row, col, exponent]]}]}
json to_json(const MonomialAutomorphism& g);
MonomialAutomorphism automorphism_from_json(const json& j);

json to_json(const FixedComponent& c);
json to_json(const Section& s);

}  // namespace cyq
