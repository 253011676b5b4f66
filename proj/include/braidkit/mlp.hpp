#pragma once

#include "braidkit/core.hpp"
#include "braidkit/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

/// Class 0 is "trivial", class 1 "nontrivial"; one output node per class.
inline constexpr int kClasses = 2;

struct MlpConfig {
  /// Hidden units; 0 connects inputs straight to the outputs. Unset means
  /// ceil((inputs + classes) / 2).
  std::optional<int> hidden;
  double learning_rate = 0.3;
  double momentum = 0.2;
  int epochs = 500;
  /// Percentage of the training data held out for early stopping; 0 disables it.
  double validation_pct = 0;
  std::uint64_t seed = 0;
  /// Consecutive validation-error increases tolerated before stopping.
  int error_patience = 20;
};

inline int default_hidden(int inputs) { return (inputs + kClasses + 1) / 2; }

inline int resolved_hidden(const MlpConfig& c, int inputs) {
  const int h = c.hidden.value_or(default_hidden(inputs));
  if (h < 0) throw std::invalid_argument("hidden layer size must be non-negative");
  return h;
}

template <typename Scalar>
Scalar sigmoid(Scalar x) {
  return Scalar(1) / (Scalar(1) + std::exp(-x));
}

/// Feature matrix with one example per row and binary labels.
template <typename Scalar>
struct LabeledData {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> x;
  std::vector<int> y;

  Eigen::Index size() const { return x.rows(); }
  Eigen::Index inputs() const { return x.cols(); }

  LabeledData subset(const std::vector<Eigen::Index>& idx) const {
    LabeledData out;
    out.x.resize(static_cast<Eigen::Index>(idx.size()), x.cols());
    out.y.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      out.x.row(static_cast<Eigen::Index>(i)) = x.row(idx[i]);
      out.y.push_back(y[static_cast<std::size_t>(idx[i])]);
    }
    return out;
  }
};

template <typename Scalar>
struct MlpModel {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// hidden x inputs; empty when there is no hidden layer.
  Matrix w1;
  Vector b1;
  /// classes x hidden, or classes x inputs without a hidden layer.
  Matrix w2;
  Vector b2;

  Eigen::Index hidden() const { return w1.rows(); }
  Eigen::Index inputs() const { return hidden() > 0 ? w1.cols() : w2.cols(); }

  static MlpModel zeros(Eigen::Index inputs, Eigen::Index hidden) {
    MlpModel m;
    m.w1 = Matrix::Zero(hidden, hidden > 0 ? inputs : 0);
    m.b1 = Vector::Zero(hidden);
    m.w2 = Matrix::Zero(kClasses, hidden > 0 ? hidden : inputs);
    m.b2 = Vector::Zero(kClasses);
    return m;
  }

  /// Weights uniform in [-0.05, 0.05].
  static MlpModel random(Eigen::Index inputs, Eigen::Index hidden, Rng& rng) {
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    MlpModel m = zeros(inputs, hidden);
    m.for_each([&](Scalar& w) { w = Scalar(u(rng)); });
    return m;
  }

  template <typename F>
  void for_each(F&& f) {
    for (auto* p : {&w1, &w2})
      for (Eigen::Index i = 0; i < p->size(); ++i) f(p->data()[i]);
    for (auto* p : {&b1, &b2})
      for (Eigen::Index i = 0; i < p->size(); ++i) f(p->data()[i]);
  }

  Eigen::Index parameter_count() const { return w1.size() + b1.size() + w2.size() + b2.size(); }

  /// Parameters in the order visited by for_each.
  Vector flatten() const {
    Vector out(parameter_count());
    Eigen::Index k = 0;
    auto copy = [&](const auto& m) {
      for (Eigen::Index i = 0; i < m.size(); ++i) out[k++] = m.data()[i];
    };
    copy(w1);
    copy(w2);
    copy(b1);
    copy(b2);
    return out;
  }

  template <typename Input>
  Vector hidden_activations(const Input& x) const {
    return (w1 * x + b1).unaryExpr([](Scalar v) { return sigmoid(v); });
  }

  template <typename Input>
  Vector forward(const Input& x) const {
    const Vector pre = hidden() > 0 ? Vector(w2 * hidden_activations(x) + b2) : Vector(w2 * x + b2);
    return pre.unaryExpr([](Scalar v) { return sigmoid(v); });
  }

  template <typename Input>
  int predict(const Input& x) const {
    const Vector o = forward(x);
    return o[0] >= o[1] ? 0 : 1;
  }

  bool all_finite() const {
    return w1.allFinite() && b1.allFinite() && w2.allFinite() && b2.allFinite();
  }

  friend bool operator==(const MlpModel& a, const MlpModel& b) {
    return a.w1 == b.w1 && a.b1 == b.b1 && a.w2 == b.w2 && a.b2 == b.b2;
  }
};

template <typename Scalar>
typename MlpModel<Scalar>::Vector one_hot(int label) {
  typename MlpModel<Scalar>::Vector t = MlpModel<Scalar>::Vector::Zero(kClasses);
  t[label] = Scalar(1);
  return t;
}

/// Half the squared distance between the outputs and the one-hot target.
template <typename Scalar, typename Input>
Scalar loss(const MlpModel<Scalar>& m, const Input& x, int label) {
  return Scalar(0.5) * (m.forward(x) - one_hot<Scalar>(label)).squaredNorm();
}

/// Backpropagated gradient of loss(); the result has the model's shape.
template <typename Scalar, typename Input>
MlpModel<Scalar> gradient(const MlpModel<Scalar>& m, const Input& x, int label) {
  using Vector = typename MlpModel<Scalar>::Vector;
  MlpModel<Scalar> g = MlpModel<Scalar>::zeros(m.inputs(), m.hidden());
  if (m.hidden() == 0) {
    const Vector o = m.forward(x);
    const Vector delta = ((o - one_hot<Scalar>(label)).array() * o.array() * (Scalar(1) - o.array())).matrix();
    g.w2.noalias() = delta * x.transpose();
    g.b2 = delta;
    return g;
  }
  const Vector h = m.hidden_activations(x);
  const Vector o = (m.w2 * h + m.b2).unaryExpr([](Scalar v) { return sigmoid(v); });
  const Vector delta_o = ((o - one_hot<Scalar>(label)).array() * o.array() * (Scalar(1) - o.array())).matrix();
  const Vector delta_h = ((m.w2.transpose() * delta_o).array() * h.array() * (Scalar(1) - h.array())).matrix();
  g.w2.noalias() = delta_o * h.transpose();
  g.b2 = delta_o;
  g.w1.noalias() = delta_h * x.transpose();
  g.b1 = delta_h;
  return g;
}

/// Per-example gradient descent with momentum: dw = -L*grad + M*dw_prev.
template <typename Scalar>
class Trainer {
 public:
  Trainer(MlpModel<Scalar> model, const MlpConfig& config)
      : model_(std::move(model)),
        delta_(MlpModel<Scalar>::zeros(model_.inputs(), model_.hidden())),
        rate_(Scalar(config.learning_rate)),
        momentum_(Scalar(config.momentum)) {}

  template <typename Input>
  void step(const Input& x, int label) {
    const MlpModel<Scalar> g = gradient(model_, x, label);
    delta_.w1 = -rate_ * g.w1 + momentum_ * delta_.w1;
    delta_.b1 = -rate_ * g.b1 + momentum_ * delta_.b1;
    delta_.w2 = -rate_ * g.w2 + momentum_ * delta_.w2;
    delta_.b2 = -rate_ * g.b2 + momentum_ * delta_.b2;
    model_.w1 += delta_.w1;
    model_.b1 += delta_.b1;
    model_.w2 += delta_.w2;
    model_.b2 += delta_.b2;
  }

  const MlpModel<Scalar>& model() const { return model_; }
  const MlpModel<Scalar>& last_delta() const { return delta_; }

 private:
  MlpModel<Scalar> model_;
  MlpModel<Scalar> delta_;
  Scalar rate_;
  Scalar momentum_;
};

template <typename Scalar>
Scalar mean_loss(const MlpModel<Scalar>& m, const LabeledData<Scalar>& data) {
  Scalar total = 0;
  for (Eigen::Index i = 0; i < data.size(); ++i)
    total += loss(m, data.x.row(i).transpose(), data.y[static_cast<std::size_t>(i)]);
  return data.size() > 0 ? total / Scalar(data.size()) : Scalar(0);
}

/// Trains for config.epochs passes, visiting the examples in a fresh seeded
/// order each epoch. With validation_pct > 0 the last part of a seeded
/// permutation is held out and training stops once its error has risen
/// error_patience epochs in a row; the best model seen is returned.
template <typename Scalar>
MlpModel<Scalar> train(const LabeledData<Scalar>& data, const MlpConfig& config) {
  if (data.size() == 0) throw std::invalid_argument("cannot train on an empty dataset");
  if (std::all_of(data.y.begin(), data.y.end(), [&](int v) { return v == data.y.front(); }))
    throw std::invalid_argument("training data contains a single class");
  for (int v : data.y)
    if (v < 0 || v >= kClasses) throw std::invalid_argument("labels must be 0 or 1");
  if (config.epochs < 0) throw std::invalid_argument("epoch count must be non-negative");

  Rng rng(config.seed);
  const auto hidden = resolved_hidden(config, static_cast<int>(data.inputs()));
  Trainer<Scalar> trainer(MlpModel<Scalar>::random(data.inputs(), hidden, rng), config);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(data.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::vector<Eigen::Index> validation;
  if (config.validation_pct > 0) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto held = static_cast<std::size_t>(std::ceil(config.validation_pct / 100.0 * double(order.size())));
    if (held >= order.size()) throw std::invalid_argument("validation set would leave no training data");
    validation.assign(order.end() - static_cast<std::ptrdiff_t>(held), order.end());
    order.resize(order.size() - held);
  }
  const LabeledData<Scalar> val = data.subset(validation);

  MlpModel<Scalar> best = trainer.model();
  Scalar best_error = validation.empty() ? Scalar(0) : mean_loss(best, val);
  Scalar last_error = best_error;
  int rises = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (Eigen::Index i : order) trainer.step(data.x.row(i).transpose(), data.y[static_cast<std::size_t>(i)]);
    if (validation.empty()) continue;
    const Scalar err = mean_loss(trainer.model(), val);
    if (err < best_error) {
      best_error = err;
      best = trainer.model();
    }
    rises = err > last_error ? rises + 1 : 0;
    last_error = err;
    if (rises >= config.error_patience) break;
  }
  return validation.empty() ? trainer.model() : best;
}

struct EvalReport {
  /// Indexed by class; unset when the class never gets predicted.
  std::array<std::optional<double>, kClasses> precision;
  /// Unset when a class with support has no defined precision.
  std::optional<double> weighted_precision;
  /// confusion[actual][predicted].
  std::array<std::array<std::uint64_t, kClasses>, kClasses> confusion{};

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& row : confusion)
      for (auto v : row) n += v;
    return n;
  }
  double accuracy() const {
    const auto n = total();
    return n ? double(confusion[0][0] + confusion[1][1]) / double(n) : 0.0;
  }
};

inline EvalReport report_from_confusion(const std::array<std::array<std::uint64_t, kClasses>, kClasses>& confusion) {
  EvalReport r;
  r.confusion = confusion;
  const double n = double(r.total());
  double weighted = 0;
  bool defined = n > 0;
  for (int c = 0; c < kClasses; ++c) {
    std::uint64_t predicted = 0, support = 0;
    for (int a = 0; a < kClasses; ++a) predicted += confusion[a][c];
    for (int p = 0; p < kClasses; ++p) support += confusion[c][p];
    if (predicted > 0) r.precision[c] = double(confusion[c][c]) / double(predicted);
    if (support == 0) continue;
    if (!r.precision[c]) {
      defined = false;
    } else {
      weighted += double(support) / n * *r.precision[c];
    }
  }
  if (defined) r.weighted_precision = weighted;
  return r;
}

template <typename Scalar>
EvalReport evaluate(const MlpModel<Scalar>& model, const LabeledData<Scalar>& data) {
  std::array<std::array<std::uint64_t, kClasses>, kClasses> confusion{};
  for (Eigen::Index i = 0; i < data.size(); ++i)
    ++confusion[data.y[static_cast<std::size_t>(i)]][model.predict(data.x.row(i).transpose())];
  return report_from_confusion(confusion);
}

struct EvalScheme {
  enum class Kind { Split, Folds };
  Kind kind = Kind::Split;
  double fraction = 0.67;
  int folds = 0;

  static EvalScheme split(double fraction) {
    if (!(fraction > 0 && fraction < 1)) throw std::invalid_argument("split fraction must lie in (0, 1)");
    return {Kind::Split, fraction, 0};
  }
  static EvalScheme stratified(int folds) {
    if (folds < 2) throw std::invalid_argument("need at least 2 folds");
    return {Kind::Folds, 0, folds};
  }
  std::string name() const {
    if (kind == Kind::Folds) return "fold" + std::to_string(folds);
    return "split" + std::to_string(static_cast<int>(std::lround(fraction * 100)));
  }
};

/// Seeded permutation of 0..n-1; shared by the split and fold schemes.
inline std::vector<Eigen::Index> shuffled_indices(Eigen::Index n, std::uint64_t seed) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  Rng rng(derive_seed(seed, 0x5b11u));
  std::shuffle(idx.begin(), idx.end(), rng);
  return idx;
}

/// Stratified folds: each class is shuffled and dealt round-robin.
inline std::vector<std::vector<Eigen::Index>> stratified_folds(const std::vector<int>& y, int k, std::uint64_t seed) {
  std::vector<std::vector<Eigen::Index>> folds(static_cast<std::size_t>(k));
  std::size_t next = 0;
  for (int c = 0; c < kClasses; ++c) {
    std::vector<Eigen::Index> members;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] == c) members.push_back(static_cast<Eigen::Index>(i));
    Rng rng(derive_seed(seed, 0xf01du + static_cast<std::uint64_t>(c)));
    std::shuffle(members.begin(), members.end(), rng);
    for (auto i : members) folds[next++ % folds.size()].push_back(i);
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

/// Trains and scores under the scheme. A split trains on the first
/// ceil(fraction * N) shuffled records and tests on the rest; folds retrain
/// per fold and report the mean of each precision (unset if any fold's is).
template <typename Scalar>
EvalReport evaluate(const LabeledData<Scalar>& data, const MlpConfig& config, const EvalScheme& scheme) {
  if (scheme.kind == EvalScheme::Kind::Split) {
    const auto idx = shuffled_indices(data.size(), config.seed);
    const auto n_train = static_cast<std::size_t>(std::ceil(scheme.fraction * double(idx.size())));
    if (n_train == 0 || n_train >= idx.size()) throw std::invalid_argument("split leaves an empty side");
    const std::vector<Eigen::Index> tr(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    const std::vector<Eigen::Index> te(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    return evaluate(train(data.subset(tr), config), data.subset(te));
  }

  const auto folds = stratified_folds(data.y, scheme.folds, config.seed);
  std::array<std::array<std::uint64_t, kClasses>, kClasses> confusion{};
  std::array<std::optional<double>, kClasses> precision_sum{0.0, 0.0};
  std::optional<double> weighted_sum = 0.0;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<Eigen::Index> tr;
    for (std::size_t g = 0; g < folds.size(); ++g)
      if (g != f) tr.insert(tr.end(), folds[g].begin(), folds[g].end());
    std::sort(tr.begin(), tr.end());
    const auto r = evaluate(train(data.subset(tr), config), data.subset(folds[f]));
    for (int a = 0; a < kClasses; ++a)
      for (int p = 0; p < kClasses; ++p) confusion[a][p] += r.confusion[a][p];
    for (int c = 0; c < kClasses; ++c)
      precision_sum[c] = precision_sum[c] && r.precision[c] ? std::optional(*precision_sum[c] + *r.precision[c])
                                                            : std::nullopt;
    weighted_sum = weighted_sum && r.weighted_precision ? std::optional(*weighted_sum + *r.weighted_precision)
                                                        : std::nullopt;
  }
  EvalReport out;
  out.confusion = confusion;
  const double k = double(folds.size());
  for (int c = 0; c < kClasses; ++c)
    if (precision_sum[c]) out.precision[c] = *precision_sum[c] / k;
  if (weighted_sum) out.weighted_precision = *weighted_sum / k;
  return out;
}

/// Sign structure of the first-layer weights laid out on the encoding matrix.
struct WeightPattern {
  int rows = 0;
  int cols = 0;
  /// One rows x cols sign map per hidden unit (per output node without a hidden layer).
  std::vector<IntMatrix> signs;
  /// [unit][row]: fraction of adjacent columns whose weights have opposite signs.
  std::vector<std::vector<double>> row_alternation;
  /// Row alternation averaged over units and rows, weighted by the row's total |weight|.
  double alternation = 0;
  /// Same weighting, fraction of entries sharing the row's majority sign.
  double uniformity = 0;
};

/// Reads the input-side weights of each hidden unit as a rows x cols matrix
/// (row-major input order). Without a hidden layer the difference of the two
/// output nodes' weights is used.
template <typename Scalar>
WeightPattern extract_pattern(const MlpModel<Scalar>& model, int rows, int cols) {
  if (static_cast<Eigen::Index>(rows) * cols != model.inputs())
    throw std::invalid_argument("pattern geometry does not match the model's input count");
  using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::vector<RowMajor> units;
  if (model.hidden() > 0) {
    for (Eigen::Index h = 0; h < model.hidden(); ++h)
      units.push_back(model.w1.row(h).template reshaped<Eigen::RowMajor>(rows, cols));
  } else {
    units.push_back((model.w2.row(1) - model.w2.row(0)).template reshaped<Eigen::RowMajor>(rows, cols));
  }

  WeightPattern p;
  p.rows = rows;
  p.cols = cols;
  double mass = 0, alt = 0, uni = 0;
  for (const auto& w : units) {
    IntMatrix s = w.unaryExpr([](Scalar v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }).template cast<int>();
    std::vector<double> per_row;
    for (int r = 0; r < rows; ++r) {
      int flips = 0;
      for (int c = 0; c + 1 < cols; ++c) flips += s(r, c) * s(r, c + 1) < 0;
      const double a = cols > 1 ? double(flips) / (cols - 1) : 0.0;
      const int balance = std::abs(s.row(r).sum());
      const double u = cols > 0 ? (double(cols) + balance) / (2.0 * cols) : 0.0;
      const double weight = double(w.row(r).cwiseAbs().sum());
      per_row.push_back(a);
      alt += weight * a;
      uni += weight * u;
      mass += weight;
    }
    p.row_alternation.push_back(std::move(per_row));
    p.signs.push_back(std::move(s));
  }
  if (mass > 0) {
    p.alternation = alt / mass;
    p.uniformity = uni / mass;
  }
  return p;
}

}  // namespace braidkit
