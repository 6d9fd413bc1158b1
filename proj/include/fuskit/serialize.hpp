#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fuskit/classify.hpp"
#include "fuskit/fusion_ring.hpp"
#include "fuskit/group.hpp"
#include "fuskit/structure.hpp"

namespace fuskit {

// Exchange format: {"name","basis","unit","dual":{label:label},
// "constants":[{"i","j","k","m"}]}, constants sorted by basis position.
ojson ring_to_json(const FusionRing& ring);
// Throws ParseError on schema problems, plus whatever the FusionRing
// constructor throws for structural ones.
FusionRing ring_from_json(const nlohmann::json& j);
FusionRing ring_from_text(std::string_view text);
// Canonical text: two-space indent and a trailing newline.
std::string ring_to_text(const FusionRing& ring);

ojson group_to_json(const GroupTable& g);
ojson grading_to_json(const GradingData& grading, const FusionRing& ring);
ojson report_to_json(const CheckReport& report);
ojson validation_to_json(const ValidationReport& report, const FusionRing& ring);
// Exact values as "a+b*sqrt(n)" strings, approximations as
// {"value":"~x","eps":e}.
ojson real_to_json(const RealValue& v);
ojson labels_json(const FusionRing& ring, const std::vector<int>& members);

}  // namespace fuskit
