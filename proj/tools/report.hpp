#pragma once

#include "crnkit/analysis.hpp"
#include "crnkit/decomposition.hpp"
#include "crnkit/network.hpp"
#include "crnkit/reduction.hpp"
#include "crnkit/simulation.hpp"
#include "crnkit/steady_state.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace crnkit::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "crnkit 1.0.0";

/// 12 significant digits; non-finite values become null.
Json number(double value);
/// Exact rationals as "p/q" strings.
Json exact(const Rational& value);
Json exact(const std::vector<Rational>& values);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Everything a report needs to know about where its input came from.
struct Inputs {
  std::string source;  ///< "builtin:doc" or a file path
  std::string network_text;
  Bindings bindings;
};

/// Top-level document: tool version, command echo, input digests, result.
Json document(const std::string& command, const Inputs& inputs, Json result);

Json network_numbers(const NetworkNumbers& n);
Json structural_flags(const StructuralFlags& f);
Json analyze(const Network& net);

/// Finest decomposition with rank checks; T̂ ranks need bound orders.
Json decompose(const Network& net);

Json parametrization(const MonomialParametrization& p);
Json parametrize(const Network& bound, const ParametrizeOptions& options);

Json classify(const RegimeOrders& orders);
Json multistationarity(const Network& bound, const RegimeOrders& orders);
Json acr(const Network& bound, const ParametrizeOptions& options);
Json roots(const RootReport& r);
Json count_roots(const Network& bound, const Bindings& bindings, const ParametrizeOptions& options, double total);

Json trajectory(const Trajectory& t);
Json acr_experiment(const AcrExperiment& e);
Json multi_experiment(const MultiExperiment& e);

Json doc_reduction(const DocReduction& r);
Json dac_reduction(const DacReduction& r);

/// decompose -> parametrize -> classify -> multistationarity -> acr ->
/// count-roots, collapsed into one summary row. Stage failures are kept under
/// "errors" with the stage name.
Json pipeline(const Network& bound, const Bindings& bindings, const ParametrizeOptions& options, double total);

struct CompareEntry {
  std::string id;
  Network net;
  ParametrizeOptions options;
};
/// Network numbers, flags and ACR sets per order preset for each model. With
/// doc, dac and doc-dac present the union property is checked as well.
Json compare(const std::vector<CompareEntry>& models, const std::vector<std::string>& presets);

/// Pretty JSON with two-space indent and a trailing newline.
std::string dump(const Json& doc);

/// Indented "key: value" rendering of the same document.
std::string render_text(const Json& doc);

}  // namespace crnkit::report
