#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sphdyn/ergodic.hpp"
#include "sphdyn/knorm.hpp"
#include "sphdyn/lab.hpp"
#include "sphdyn/periodic.hpp"
#include "sphdyn/rational.hpp"

namespace sphdyn {

using json = nlohmann::ordered_json;

// Map schema: {"num": [[re,im],...], "den": [[re,im],...]}, ascending powers.
json map_to_json(const RationalMap& f);
RationalMap map_from_json(const json& j);
RationalMap map_from_file(const std::string& path);

json point_to_json(const SpherePoint& p);   // [chart, re, im]
json kreport_to_json(const KReport& r);
json chi_to_json(const ChiEstimate& e);
json cycles_to_json(const std::vector<CycleRecord>& cycles);
json bracket_to_json(const KInfinityBracket& b);
json exponent_report_to_json(const ExponentReport& r);
json area_identity_to_json(const AreaIdentityResult& r);

std::string growth_table_to_csv(const std::vector<GrowthRow>& rows);

}  // namespace sphdyn
