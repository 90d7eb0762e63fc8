#pragma once

#include <json.hpp>

#include "fqgamma/bracket.hpp"
#include "fqgamma/cm.hpp"
#include "fqgamma/recog.hpp"
#include "fqgamma/special_values.hpp"

namespace fqgamma {

// Key order is part of the output contract (byte-identical reruns), hence
// the ordered flavor everywhere.
using json = nlohmann::ordered_json;

// {"var":"1/eta"|"1/theta","q":q,"terms":[[exp,"coeff"],...],"prec":n},
// terms ascending, coefficients in the field element grammar.
json series_json(const LaurentSeries& s);

// The series encoding plus {"cutoff":D,"stabilized_at":D0}.
json gamma_json(const GammaValue& g);

json classification_json(const Classification& c);

// {"is_relation":...,"sigma_plus":...} plus "witness" when one exists.
json bracket_json(const BracketCheck& b);

// {"recognized":...,"stable":...,"candidate":{"num","den","var"}|null,
//  "prec_used":[lo,hi]}; candidate var is "eta" or "theta".
json cert_json(const CertReport& r);

json equiv_json(bool equivalent);
json isogeny_json(const IsogenyResult& r);

// {"error":{"kind":kind,"message":message}}
json error_json(const std::string& kind, const std::string& message);

}  // namespace fqgamma
