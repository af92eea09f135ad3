#ifndef BCKCODE_REPORT_HPP
#define BCKCODE_REPORT_HPP

// JSON renderings of library results. Field names are part of the CLI's
// machine-readable contract (see README).

#include <json.hpp>

#include "bckcode/axioms.hpp"
#include "bckcode/code.hpp"
#include "bckcode/construction.hpp"
#include "bckcode/ideals.hpp"
#include "bckcode/table.hpp"

namespace bck {

nlohmann::json to_json(const CayleyTable& table);
nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const std::vector<DominanceGap>& gaps);
nlohmann::json to_json(const BlockCode& code);
nlohmann::json to_json(const ConstructionParams& params);
nlohmann::json to_json(const ElementSubset& subset, const IdealReport& report);
nlohmann::json to_json(const OrderRelation& order);

}  // namespace bck

#endif  // BCKCODE_REPORT_HPP
