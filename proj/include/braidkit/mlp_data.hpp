#pragma once

#include "braidkit/datagen.hpp"
#include "braidkit/mlp.hpp"
#include "braidkit/serialize.hpp"

#include <span>
#include <string>

namespace braidkit {

/// Raw matrix entries as features; label 0 is trivial.
LabeledData<double> to_features(const Dataset& d);

enum class Condition { CES2, CES1, CEP };
Condition parse_condition(std::string_view s);

/// Whether the record's word satisfies the condition. Flat words use their flat encodings.
bool condition_holds(const Dataset& d, const DatasetRecord& record, Condition condition);

/// Fraction of records where "model says trivial" coincides with "condition holds".
double agreement_with_condition(const MlpModel<double>& model, const Dataset& d, Condition condition);

Json to_json(const MlpConfig& c);
Json to_json(const MlpModel<double>& m);
MlpModel<double> model_from_json(const Json& j);
Json to_json(const EvalReport& r);
Json to_json(const WeightPattern& p);

/// "0.993" or "?" when undefined.
std::string format_precision(const std::optional<double>& p);

/// The six schemes of a sweep row: splits 0.50/0.67/0.75 and 2/3/4 folds.
std::vector<EvalScheme> sweep_schemes();

/// Weighted precision for each hidden size under every sweep scheme, as CSV
/// with header H,split50,split67,split75,fold2,fold3,fold4.
std::string sweep_csv(const LabeledData<double>& data, std::span<const int> hidden_sizes, const MlpConfig& base);

}  // namespace braidkit
