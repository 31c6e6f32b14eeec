#pragma once

#include <json.hpp>

#include "unimod/exterior.hpp"
#include "unimod/orbit.hpp"
#include "unimod/topology.hpp"

namespace unimod {

using json = nlohmann::ordered_json;

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
json to_json(const Int& v);
json to_json(const Rat& v);
json to_json(const Vec& v);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const GramForm& form);
json to_json(const FormInvariants& inv);
json to_json(const StandardSpec& spec);
json to_json(const ComponentInvariant& c);
json to_json(const EscapeTrace& trace);
json to_json(const IsotropicPlane& plane);
json to_json(const PlaneOrbit& orbit);
json to_json(const CosetCertificate& cert);
json to_json(const Lambda2Report& report);
json to_json(const IndexCertificate& cert);
json to_json(const ReplayTrace& trace);
json to_json(const KTAlgebra& alg);
json to_json(const WedgeImage& image);
json to_json(const PhiT& phi);

Int int_from_json(const json& j);
Vec vec_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
/// Accepts {"gram": [[...]]}, a bare matrix, or a shorthand string such as "2U+E8".
GramForm form_from_json(const json& j);
/// Parses JSON text or, failing that, form shorthand.
GramForm form_from_text(const std::string& text);

}  // namespace unimod
