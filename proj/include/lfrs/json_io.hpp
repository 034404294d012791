#pragma once

#include "lfrs/chevalley.hpp"
#include "lfrs/compare.hpp"
#include "lfrs/realize.hpp"
#include "lfrs/rootsys.hpp"
#include "lfrs/superalg.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace lfrs {

// Schemas: rootsys.v1, constants.v1, superalg.v1, model.v1.
// Rationals serialize as canonical "p/q"; keys are sorted; output is stable.

nlohmann::json rootsys_to_json(const RootSupersystem& r);
RootSupersystem rootsys_from_json(const nlohmann::json& j);

// constants.v1; carries the underlying root system under "rootsys" so that
// audits can run from the file alone
nlohmann::json constants_to_json(const ConstantsTable& t, const RootSupersystem& r);
std::pair<ConstantsTable, RootSupersystem> constants_from_json(const nlohmann::json& j);

nlohmann::json superalg_to_json(const LieSuperalgebra& l);
LieSuperalgebra superalg_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const MatrixModel& m, bool with_algebra = false);
MatrixModel model_from_json(const nlohmann::json& j);

// dense rational matrix with source/target schema references
nlohmann::json algebra_map_to_json(const AlgebraMap& map);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace lfrs
