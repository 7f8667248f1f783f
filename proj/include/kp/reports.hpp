#ifndef KP_REPORTS_HPP
#define KP_REPORTS_HPP

#include <json.hpp>

#include "kp/kp_module.hpp"
#include "kp/pieri.hpp"
#include "kp/polynomial.hpp"
#include "kp/tensor.hpp"
#include "kp/verify.hpp"

namespace kp {

// Every permutation is rendered in the one-line "2,1,3" syntax and every
// coefficient as a decimal string, so emitted JSON re-parses exactly.

nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const PieriChain& chain);
nlohmann::json to_json(const KpModuleReport& report);
nlohmann::json to_json(const TriangularityReport& report);
nlohmann::json to_json(const FiltrationReport& report);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace kp

#endif
