#pragma once

#include <json.hpp>

#include "hirz/verifier.hpp"

namespace hirz::replay {

/**
 * Canonical JSON tree for a VerificationReport (schema 1). Object keys are
 * emitted in sorted order, so dump() output is byte-stable. See the README
 * for the field reference.
 */
nlohmann::json to_json(const VerificationReport& report);

}  // namespace hirz::replay
