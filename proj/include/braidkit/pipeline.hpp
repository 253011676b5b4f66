#pragma once

#include "braidkit/aut.hpp"
#include "braidkit/core.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

enum class Stage { CEP, CES2, CES1, AUT };
inline constexpr std::size_t kStageCount = 4;

std::string_view to_string(Stage s);

/// Ordered filters, AUT last when present.
class Strategy {
 public:
  explicit Strategy(std::vector<Stage> stages);

  /// "aut", "cep-aut", "ces1-aut", "ces2-cep-aut", "cep-ces2-aut" or any
  /// dash-separated stage list.
  static Strategy parse(std::string_view name);
  static Strategy aut_only() { return Strategy({Stage::AUT}); }
  static Strategy cep_aut() { return Strategy({Stage::CEP, Stage::AUT}); }
  static Strategy ces1_aut() { return Strategy({Stage::CES1, Stage::AUT}); }
  static Strategy ces2_cep_aut() { return Strategy({Stage::CES2, Stage::CEP, Stage::AUT}); }
  static Strategy cep_ces2_aut() { return Strategy({Stage::CEP, Stage::CES2, Stage::AUT}); }
  static std::vector<Strategy> presets();

  std::span<const Stage> stages() const { return stages_; }
  bool has(Stage s) const;
  bool needs_three_strands() const { return has(Stage::CES1) || has(Stage::CES2); }
  std::string name() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<Stage> stages_;
};

struct StageTime {
  Stage stage;
  double seconds;
};

struct Verdict {
  bool trivial = false;
  /// The stage that answered "nontrivial", AUT included.
  std::optional<Stage> rejected_by;
  std::vector<StageTime> stage_times;
  double total_time = 0;
};

/// Runs the stages in order; the first failing filter short-circuits and AUT
/// decides whatever passes every filter. Each stage times its own encoding
/// and check with a monotonic clock.
Verdict check(const BraidWord& word, const Strategy& strategy, const AutOptions& opts = {});

/// Counts of CEP, CES2, CES1 and CEP & CES2 over a batch, independent of the strategy.
struct ConditionTally {
  std::uint64_t cep = 0;
  std::uint64_t ces2 = 0;
  std::uint64_t ces1 = 0;
  std::uint64_t cep_and_ces2 = 0;
};

struct PipelineStats {
  std::uint64_t n_checked = 0;
  std::uint64_t trivial = 0;
  /// Indexed by Stage: how many words reached / passed the stage, and its total time.
  std::array<std::uint64_t, kStageCount> reached{};
  std::array<std::uint64_t, kStageCount> passed{};
  std::array<double, kStageCount> seconds{};
  std::optional<ConditionTally> tally;
  /// Per-word total time, kept when BatchOptions::keep_times is set.
  std::vector<double> per_word_seconds;

  std::uint64_t reached_of(Stage s) const { return reached[static_cast<std::size_t>(s)]; }
  std::uint64_t passed_of(Stage s) const { return passed[static_cast<std::size_t>(s)]; }
  double seconds_of(Stage s) const { return seconds[static_cast<std::size_t>(s)]; }

  /// Associative merge of shard results; per-word times are concatenated.
  void merge(const PipelineStats& other);
};

struct BatchOptions {
  int threads = 1;
  bool tally_conditions = false;
  bool keep_times = false;
  AutOptions aut;
};

PipelineStats run_batch(std::span<const BraidWord> words, const Strategy& strategy, const BatchOptions& opts = {});

struct BenchmarkRow {
  int length = 0;
  std::string strategy;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> pass_cep;
  std::optional<std::uint64_t> pass_ces2;
  std::uint64_t aut_checked = 0;
  std::uint64_t trivial = 0;
  double t_cep_s = 0;
  double t_ces2_s = 0;
  double t_aut_s = 0;
  double t_total_s = 0;
  std::vector<double> per_word_seconds;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;

  const BenchmarkRow* find(int length, std::string_view strategy) const;
  std::string to_csv() const;
};

struct BenchmarkOptions {
  std::uint64_t seed = 0;
  int warmup = 100;
  /// Repetitions per (length, strategy); each row keeps its fastest repetition.
  int repeats = 1;
};

/// Every strategy sees the same random words for a given length.
BenchmarkReport benchmark(std::span<const int> lengths, int count, std::span<const Strategy> strategies,
                          const BenchmarkOptions& opts = {});

struct Histogram {
  std::vector<double> edges;  // bins + 1 log-spaced edges
  std::vector<std::uint64_t> counts;
};

/// Log-spaced histogram; samples outside [low, high] land in the edge bins.
Histogram log_histogram(std::span<const double> samples, int bins = 60, double low = 1e-7, double high = 1e-1);

/// CSV "bin_low_s,bin_high_s,count_aut_only,count_pipeline".
std::string histogram_csv(std::span<const double> aut_only, std::span<const double> pipeline, int bins = 60,
                          double low = 1e-7, double high = 1e-1);

}  // namespace braidkit
