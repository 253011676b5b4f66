#pragma once

#include "braidkit/core.hpp"
#include "braidkit/pipeline.hpp"
#include "braidkit/random.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace braidkit {

enum class ClassMix { Balanced, TrivialOnly, Any };
enum class Label { Trivial, Nontrivial };
/// Optional condition a braid must satisfy before it is labeled (CES-datasets).
enum class RecordFilter { None, CEP, CES2, CES1 };
enum class ExportFormat { CSV, ARFF };

std::string_view to_string(Label l);
Label parse_label(std::string_view s);
RecordFilter parse_filter(std::string_view s);
ExportFormat parse_format(std::string_view s);

struct DatasetSpec {
  int strands = 3;
  int length = 12;
  bool flat = false;
  Encoding encoding = Encoding::ES2;
  ClassMix mix = ClassMix::Balanced;
  int count = 2000;
  std::uint64_t seed = 0;
  RecordFilter filter = RecordFilter::None;
  /// Candidate generation is sharded; results do not depend on this.
  int threads = 1;
  /// Give up after this many candidates.
  std::uint64_t max_candidates = 200'000'000;
};

struct DatasetRecord {
  std::string word;
  std::vector<int> entries;  // row-major flattening of the encoding matrix
  Label label = Label::Nontrivial;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct Dataset {
  DatasetSpec spec;
  int rows = 0;
  int cols = 0;
  std::vector<DatasetRecord> records;

  std::size_t count(Label l) const;
};

/// Rejection-sampled dataset. Braid labels come from the CEP-CES2-AUT
/// pipeline, flat labels from the permutation. Throws when a requested
/// class cannot occur (for example trivial words of odd length).
Dataset build_dataset(const DatasetSpec& spec);

/// Record for one word under the given encoding.
DatasetRecord make_record(const BraidWord& word, Encoding encoding, Label label);
DatasetRecord make_record(const FlatWord& word, Encoding encoding, Label label);

struct ExplorationStats {
  std::uint64_t explored = 0;
  std::uint64_t cep_pass = 0;
  std::uint64_t ces_pass = 0;
  std::uint64_t aut_trivial = 0;
  std::uint64_t duplicates = 0;
  double seconds = 0;
};

struct DistinctTrivialResult {
  std::vector<BraidWord> words;
  ExplorationStats stats;
};

/// Draws random 3-strand braids of length k until target_count pairwise
/// distinct (as words) trivial braids are found.
DistinctTrivialResult distinct_trivial_dataset(int k, int target_count, const Strategy& strategy,
                                               std::uint64_t seed);

std::string to_csv(const Dataset& d);
std::string to_arff(const Dataset& d);
void export_dataset(const Dataset& d, ExportFormat format, const std::filesystem::path& path);

/// Reads a CSV written by to_csv. Rows and columns are taken from the header;
/// DatasetSpec fields the file does not carry are left at their defaults.
Dataset import_csv(std::string_view text);
Dataset import_csv_file(const std::filesystem::path& path);

}  // namespace braidkit
