#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "srreal/complex.hpp"
#include "srreal/diagram.hpp"
#include "srreal/realizability.hpp"
#include "srreal/sr_ring.hpp"
#include "srreal/steenrod.hpp"
#include "srreal/verifier.hpp"

namespace srreal {

// {"vertices": [{"id": "x4", "degree": 4}, ...], "facets": [["x4", "x6"], ...]}
// Unknown keys and non-integer degrees are rejected with a Parse error. The result is
// not validated.
ComplexWithDegrees complex_from_json(const nlohmann::json& j);
ComplexWithDegrees parse_complex(const std::string& text);
nlohmann::json to_json(const ComplexWithDegrees& complex);

nlohmann::json to_json(const Simplex& s);
nlohmann::json to_json(const DegreeMultiset& ms);
// {"D": 40, "dims": {"0": 1, "2": ...}}; counts beyond 64 bits are decimal strings.
nlohmann::json to_json(const HilbertFunction& h);
nlohmann::json to_json(const ObstructionReason& reason);
nlohmann::json to_json(const AdmissibleClass& c);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ColimitDiagram& diagram);
nlohmann::json to_json(const VerificationReport& report);

ColimitDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace srreal
