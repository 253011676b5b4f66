#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// Raised for invalid words, malformed matrices and unsupported encodings.
class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text could not be parsed as a word.
class ParseError : public BraidError {
 public:
  using BraidError::BraidError;
};

/// Row-major integer matrix; every encoding entry is in {-1, 0, 1}.
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// sigma_index^sign; index is 1-based.
struct Generator {
  int index = 1;
  int sign = 1;

  Generator inverse() const { return {index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A braid on `strands` strands given as a sequence of signed generators.
class BraidWord {
 public:
  explicit BraidWord(int strands = 3, std::vector<Generator> letters = {});

  int strands() const { return strands_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Generator> letters() const { return letters_; }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  /// Formal inverse: reversed word with every sign flipped.
  BraidWord inverse() const;
  BraidWord concat(const BraidWord& rhs) const;
  BraidWord slice(std::size_t begin, std::size_t end) const;
  /// Sum of signs, which is also the sum of all EP1 entries.
  int exponent_sum() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Generator> letters_;
};

/// A flat braid: unsigned crossings at positions 1..strands-1.
class FlatWord {
 public:
  explicit FlatWord(int strands = 3, std::vector<int> positions = {});

  int strands() const { return strands_; }
  std::size_t length() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  std::span<const int> positions() const { return positions_; }
  int operator[](std::size_t i) const { return positions_[i]; }

  friend bool operator==(const FlatWord&, const FlatWord&) = default;

 private:
  int strands_;
  std::vector<int> positions_;
};

enum class Encoding { EP1, EP2, ES2, ES1 };

std::string_view to_string(Encoding e);
Encoding parse_encoding(std::string_view name);

/// A word viewed as a matrix; column j describes crossing j.
struct EncodedBraid {
  Encoding encoding = Encoding::EP1;
  bool flat = false;
  IntMatrix matrix;

  int k() const { return static_cast<int>(matrix.cols()); }
  int rows() const { return static_cast<int>(matrix.rows()); }
  /// EP1 carries strands-1 rows, every other encoding one row per strand.
  int strands() const { return encoding == Encoding::EP1 ? rows() + 1 : rows(); }

  friend bool operator==(const EncodedBraid& a, const EncodedBraid& b) {
    return a.encoding == b.encoding && a.flat == b.flat && a.matrix.rows() == b.matrix.rows() &&
           a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix;
  }
};

/// images[p] is the (1-based) strand occupying position p+1 at the right end.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

EncodedBraid encode(const BraidWord& word, Encoding encoding);
EncodedBraid encode(const FlatWord& word, Encoding encoding);

/// Conversion by left multiplication. Only EP1->EP2, EP2->EP1 and ES1->ES2 exist.
EncodedBraid convert(const EncodedBraid& enc, Encoding target);

/// Left factor taking [EP2] to [EP1] for n strands.
IntMatrix ep2_to_ep1_matrix(int strands);
/// Left factor taking [EP1] to [EP2] for n strands.
IntMatrix ep1_to_ep2_matrix(int strands);
/// Left factor taking [ES1] to [ES2] (3 strands only).
IntMatrix es1_to_es2_matrix();

/// Inverse of encode(., EP1). A flat EP1 matrix decodes to positive letters.
BraidWord decode_ep1(const EncodedBraid& enc);
FlatWord decode_flat_ep1(const EncodedBraid& enc);

/// Recovers the word behind an ES2 matrix by simulating strand positions.
/// Throws if some column names two strands that are not adjacent.
BraidWord decode_es2(const EncodedBraid& enc);
FlatWord decode_flat_es2(const EncodedBraid& enc);

Permutation permutation_of(const BraidWord& word);
Permutation permutation_of(const FlatWord& word);

FlatWord flat_projection(const BraidWord& word);

// Text forms: "abAB" (a=sigma1, A=sigma1^-1, b=sigma2, ...) or "1,-2,1".
// Flat words: "1212" or "1,2,1,2".
BraidWord parse_braid(std::string_view text, int strands = 3);
FlatWord parse_flat(std::string_view text, int strands = 3);
std::string format(const BraidWord& word);
std::string format(const FlatWord& word);
/// Rows of space-separated integers, one row per line.
std::string format(const IntMatrix& m);

}  // namespace braidkit
