#pragma once

#include "braidkit/core.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/pipeline.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace braidkit {

using Json = nlohmann::ordered_json;

/// Nested row arrays; a rows x 0 matrix keeps its row count as empty arrays.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const ConditionReport& r);
Json to_json(const Verdict& v);
Json to_json(const Move& m);
Move move_from_json(const Json& j);

/// One JSON object per line: a header with encoding, flat flag, start and end
/// matrices, then one line per move such as {"kind":"R3","pos":4}.
std::string to_json_lines(const MoveSequence& seq);
MoveSequence move_sequence_from_json_lines(std::string_view text);

}  // namespace braidkit
