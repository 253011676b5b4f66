#pragma once

#include "braidkit/core.hpp"

#include <array>
#include <optional>

namespace braidkit {

/// Alternating row sums of an ES matrix, one entry per row.
using InvariantVector = Eigen::VectorXi;

/// [±]_{m×n}: entry (i, j), 1-based, is +1 when i+j is even and -1 otherwise.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> alternating_signs(Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::NullaryExpr(
      rows, cols, [](Eigen::Index i, Eigen::Index j) { return (i + j) % 2 == 0 ? Scalar(1) : Scalar(-1); });
}

/// [x]_{m×n}: every entry equal to x.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> constant_block(Eigen::Index rows, Eigen::Index cols, Scalar x) {
  return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Constant(rows, cols, x);
}

/// [ES][±]_{k×1}. Rejects EP encodings.
InvariantVector alternating_row_sums(const EncodedBraid& enc);

/// Sum of all entries, [1][M][1].
int entry_sum(const EncodedBraid& enc);

struct CepResult {
  bool holds = false;
  int sum = 0;
};

/// Sum of all EP1 entries is zero. For 2 strands this decides triviality.
CepResult check_cep(const BraidWord& word);
CepResult check_cep(const EncodedBraid& ep1);

enum class Ces { Two, One };

/// All alternating row sums of ES2 (or ES1) vanish. 3 strands only.
bool check_ces(const BraidWord& word, Ces which);
bool check_ces(const EncodedBraid& es);

/// The six values a flat 3-strand braid can take, in the order of canonical_flat_words().
const std::array<Eigen::Vector3i, 6>& flat_invariant_values();
/// Flat words with pairwise distinct ES2 columns: (), (1), (2), (2,1), (1,2), (1,2,1).
const std::array<FlatWord, 6>& canonical_flat_words();

struct FlatInvariant {
  InvariantVector value;
  FlatWord canonical;
  Permutation permutation;
};

/// Complete invariant of 3-strand flat braids with its canonical representative.
FlatInvariant flat_invariant(const FlatWord& word);

bool flat_equal(const FlatWord& u, const FlatWord& v);

struct Realizability {
  bool realizable = true;
  /// Smallest prefix length m whose alternating sums leave the six allowed values.
  std::optional<int> failing_prefix;
};

/// Prefix test on a 3-row matrix with exactly two 1s per column.
/// Signed ES2 matrices are tested through their absolute values.
Realizability is_realizable_flat(const IntMatrix& matrix);

bool is_pure(const BraidWord& word);

struct ConditionReport {
  bool cep = false;
  bool ces2 = false;
  bool ces1 = false;
  int ep1_sum = 0;
  InvariantVector es2_sums;
  InvariantVector es1_sums;
};

/// CEP, CES2 and CES1 together. Throws std::logic_error if ces1 != (cep && ces2)
/// or if ep1_sum differs from the total of es1_sums.
ConditionReport condition_report(const BraidWord& word);

}  // namespace braidkit
