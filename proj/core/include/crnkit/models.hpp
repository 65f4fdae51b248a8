#pragma once

#include "crnkit/network.hpp"
#include "crnkit/orders.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace crnkit {

struct OrderPreset {
  std::string name;
  std::string description;
  RegimeOrders orders;
};

struct BuiltinModel {
  std::string id;
  std::string description;
  std::string text;
  /// Reaction label -> offset added to both sides before translation, e.g. "-A1-A2".
  std::map<std::string, std::string> shifts;
  /// Species whose value is the free parameter of the rate-constant-only part.
  std::string linear_part_free_species;
  /// Reference rates plus any model-specific extras.
  Bindings default_rates;
};

const std::vector<BuiltinModel>& builtin_models();
/// Throws InputError for an unknown id.
const BuiltinModel& builtin_model(std::string_view id);
Network load_builtin(std::string_view id);

const std::vector<OrderPreset>& order_presets();
/// Throws InputError for an unknown preset.
const OrderPreset& order_preset(std::string_view name);

/// Reference rate constants k1..k7 used by the simulations.
Bindings reference_rates();

/// Initial-condition sets used for the ACR simulations, keyed by preset name
/// ("sim-pnull", "sim-qnull", "sim-generic").
const std::vector<std::vector<double>>& acr_initial_sets(std::string_view preset);

}  // namespace crnkit
