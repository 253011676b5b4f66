#pragma once

#include "braidkit/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace braidkit {

/// A free-group image grew past the configured letter ceiling.
class ImageTooLong : public BraidError {
 public:
  using BraidError::BraidError;
};

/// x_generator^power, generator 1-based, power nonzero.
struct Syllable {
  int generator = 1;
  std::int64_t power = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of a free group stored as run-length syllables. Words built through
/// FreeWord::append or reduce() never hold two adjacent syllables on the same
/// generator, which is the free-reduction normal form.
class FreeWord {
 public:
  FreeWord() = default;
  /// Letters as signed generator indices: 2 is x2, -2 is x2^-1.
  static FreeWord from_letters(std::initializer_list<int> letters);
  static FreeWord generator(int index, std::int64_t power = 1);

  std::span<const Syllable> syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters, sum of |power|.
  std::int64_t length() const { return length_; }

  /// Append with cancellation against the tail.
  void append(int generator, std::int64_t power);
  void append(const FreeWord& w, std::int64_t power = 1);

  void clear() {
    syllables_.clear();
    length_ = 0;
  }

  FreeWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
  std::int64_t length_ = 0;
};

/// Free reduction of an arbitrary syllable list, one stack pass.
FreeWord reduce(std::span<const Syllable> syllables);

struct AutOptions {
  std::int64_t max_image_length = 10'000'000;
};

/// Automorphism of the free group of rank n given by the images of x1..xn.
class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(int rank);
  explicit FreeAutomorphism(std::vector<FreeWord> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int generator) const { return images_[generator - 1]; }
  std::span<const FreeWord> images() const { return images_; }
  bool is_identity() const;
  std::int64_t total_length() const;

  /// Image of an arbitrary word: substitute each x_i by image(i).
  FreeWord apply(const FreeWord& w, const AutOptions& opts = {}) const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Artin's action on the free group of rank strands:
/// sigma_i:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
/// sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
FreeAutomorphism generator_automorphism(const Generator& g, int strands = 3);

/// compose(f, g) = f o g, i.e. x -> f(g(x)). With this orientation
/// word_automorphism(u v) == compose(word_automorphism(u), word_automorphism(v)).
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g, const AutOptions& opts = {});

/// Automorphism of a braid word by recursive bisection at floor(k/2).
FreeAutomorphism word_automorphism(const BraidWord& word, const AutOptions& opts = {});
/// Same value, folding the letters left to right.
FreeAutomorphism word_automorphism_sequential(const BraidWord& word, const AutOptions& opts = {});

/// Exact triviality: exponent sum for 2 strands, identity automorphism otherwise.
bool is_trivial(const BraidWord& word, const AutOptions& opts = {});

/// u == v in the braid group, decided as triviality of u v^-1.
bool are_equal(const BraidWord& u, const BraidWord& v, const AutOptions& opts = {});

/// Number of length-k words over sigma_1^{±1}, sigma_2^{±1} that are trivial in B3.
std::uint64_t count_trivial_words(int k);

}  // namespace braidkit
