#pragma once

#include "json.hpp"
#include "tropbn/chain.hpp"
#include "tropbn/numerics.hpp"
#include "tropbn/tableau.hpp"
#include "tropbn/tropmap.hpp"

namespace tropbn {

using Json = nlohmann::ordered_json;

Json chain_to_json(const ChainOfCycles& chain);
ChainOfCycles chain_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);
Json chips_to_json(const ChipList& chips);
// Accepts {"normal": {...}} or {"chips": [...]}; always returns the chip view.
ChipList divisor_chips_from_json(const ChainOfCycles& chain, const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json skeleton_to_json(const Skeleton& skel);
Json assumption_report_to_json(const AssumptionReport& rep);
Json ws_report_to_json(const WellSpacednessReport& rep);

}  // namespace tropbn
