#pragma once

#include "braidkit/core.hpp"
#include "braidkit/invariants.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace braidkit {

/// A move whose precondition does not hold at the requested position.
class MoveError : public BraidError {
 public:
  using BraidError::BraidError;
};

enum class MoveKind { R2Remove, R2Insert, R3 };

std::string_view to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view name);

struct Move {
  MoveKind kind = MoveKind::R2Remove;
  /// 1-based column of the leftmost affected column. For R2Insert the pair
  /// lands at this column; k+1 appends.
  int position = 1;
  /// Inserted column pair (R2Insert only), rows x 2.
  std::optional<IntMatrix> payload;

  friend bool operator==(const Move& a, const Move& b) {
    if (a.kind != b.kind || a.position != b.position || a.payload.has_value() != b.payload.has_value()) return false;
    return !a.payload || (a.payload->rows() == b.payload->rows() && a.payload->cols() == b.payload->cols() &&
                          *a.payload == *b.payload);
  }
};

struct MoveSequence {
  std::vector<Move> moves;
  EncodedBraid start;
  EncodedBraid end;
};

/// Apply one Reidemeister move to an EP1 or ES2 matrix (braid or flat).
///
/// R2 removes or inserts a cancelling pair of columns. R3 rewrites three
/// consecutive columns: on EP1, (x 0 z; 0 y 0) becomes (0 y 0; z 0 x); on ES2
/// the first and third columns swap. Braid R3 is refused when the three
/// crossings do not form a valid triangle move (on EP1: x = z = -y). Flat R3
/// carries no sign condition. Throws MoveError on any violated precondition.
EncodedBraid apply_move(const EncodedBraid& enc, const Move& move);

/// True when apply_move would accept the move.
bool is_applicable(const EncodedBraid& enc, const Move& move);

/// Every R2Remove and R3 that applies to enc, in position order.
std::vector<Move> applicable_moves(const EncodedBraid& enc);

struct NontrivialReport {
  InvariantVector invariant;
  FlatWord canonical;
  Permutation permutation;
};

using UntangleResult = std::variant<MoveSequence, NontrivialReport>;

/// Reduce a trivial 3-strand flat braid to the empty braid on its ES2 matrix.
/// Repeatedly picks the leftmost column with a nearest repeat, slides it right
/// with R3 two columns at a time and cancels the pair with R2.
UntangleResult untangle_flat(const FlatWord& word);

/// Replays seq from its start; every move must apply and the replay must end
/// at seq.end. ES2 matrices must additionally stay realizable throughout.
bool certify(const MoveSequence& seq);

}  // namespace braidkit
