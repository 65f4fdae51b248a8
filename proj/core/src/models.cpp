#include "crnkit/models.hpp"

#include "crnkit/errors.hpp"

namespace crnkit {
namespace {

constexpr const char* kDocText = R"(network DOC
# land A1, atmosphere A2, ocean A3, fossil stock A4, ocean capture A17
species A1 A2 A3 A4 A17
reaction R1: A1 + 2 A2 -> 2 A1 + A2 rate k1 orders A1=p1 A2=q1
reaction R2: 2 A1 + A2 -> A1 + 2 A2 rate k2 orders A1=p2 A2=q2
reaction R3: A2 -> A3 rate k3
reaction R4: A3 -> A2 rate k4
reaction R5: A4 -> A2 rate k5
reaction R6: A17 -> A4 rate k6
reaction R7: A3 -> A17 rate k7
)";

constexpr const char* kDacText = R"(network DAC
# land A1, atmosphere A2, ocean A3, fossil stock A4, air capture A5
species A1 A2 A3 A4 A5
reaction R1: A1 + 2 A2 -> 2 A1 + A2 rate k1 orders A1=p1 A2=q1
reaction R2: 2 A1 + A2 -> A1 + 2 A2 rate k2 orders A1=p2 A2=q2
reaction R3: A2 -> A3 rate k3
reaction R4: A3 -> A2 rate k4
reaction R5: A4 -> A2 rate k5
reaction R6: A2 -> A5 rate k6
reaction R7: A5 -> A4 rate k7
)";

constexpr const char* kDocDacText = R"(network DOC-DAC
species A1 A2 A3 A4 A5 A17
reaction R1: A1 + 2 A2 -> 2 A1 + A2 rate k1 orders A1=p1 A2=q1
reaction R2: 2 A1 + A2 -> A1 + 2 A2 rate k2 orders A1=p2 A2=q2
reaction R3: A2 -> A3 rate k3
reaction R4: A3 -> A2 rate k4
reaction R5: A4 -> A2 rate k5
reaction R6: A17 -> A4 rate k6
reaction R7: A3 -> A17 rate k7
reaction R8: A2 -> A5 rate k8
reaction R9: A5 -> A4 rate k9
)";

Bindings rates_with(std::initializer_list<std::pair<const char*, const char*>> extra) {
  Bindings b = reference_rates();
  for (const auto& [k, v] : extra) b[k] = parse_rational(v);
  return b;
}

RegimeOrders ro(const char* p1, const char* q1, const char* p2, const char* q2) {
  return {parse_rational(p1), parse_rational(q1), parse_rational(p2), parse_rational(q2)};
}

}  // namespace

Bindings reference_rates() {
  return {{"k1", parse_rational("0.5")}, {"k2", parse_rational("0.8")}, {"k3", parse_rational("0.5")},
          {"k4", parse_rational("0.7")}, {"k5", parse_rational("0.4")}, {"k6", parse_rational("0.6")},
          {"k7", parse_rational("0.2")}};
}

const std::vector<BuiltinModel>& builtin_models() {
  static const std::vector<BuiltinModel> models = {
      {"doc", "carbon cycle with direct ocean capture", kDocText,
       {{"R1", "-A1-A2"}, {"R2", "-A1-A2"}}, "A4", reference_rates()},
      {"dac", "carbon cycle with direct air capture", kDacText,
       {{"R1", "-A1-A2"}, {"R2", "-A1-A2"}}, "A4", reference_rates()},
      // k8, k9 have no published values; chosen so the capture branch is slower than R3.
      {"doc-dac", "carbon cycle with both ocean and air capture", kDocDacText,
       {{"R1", "-A1-A2"}, {"R2", "-A1-A2"}}, "A4", rates_with({{"k8", "0.3"}, {"k9", "0.5"}})},
  };
  return models;
}

const BuiltinModel& builtin_model(std::string_view id) {
  for (const auto& m : builtin_models())
    if (m.id == id) return m;
  throw InputError("unknown builtin model '" + std::string(id) + "' (expected doc, dac or doc-dac)");
}

Network load_builtin(std::string_view id) { return parse_network(builtin_model(id).text); }

const std::vector<OrderPreset>& order_presets() {
  static const std::vector<OrderPreset> presets = {
      {"positive", "positive regime, R > 0", ro("1.5", "1.0", "2.5", "3.0")},
      {"negative", "negative regime, R < 0", ro("-1.0", "1.5", "1.0", "-1.5")},
      {"pnull", "P-null regime, p1 = p2", ro("1.0", "0.5", "1.0", "2.5")},
      {"qnull", "Q-null regime, q1 = q2", ro("3.0", "1.5", "1.0", "1.5")},
      {"sim-pnull", "P-null orders of the ACR simulation", ro("1.0", "1.5", "1.0", "0.5")},
      {"sim-qnull", "Q-null orders of the ACR simulation", ro("0.5", "1.5", "1.4", "1.5")},
      {"sim-generic", "generic orders of the ACR simulation", ro("0.7", "1.5", "1.2", "0.5")},
      {"degenerate", "p1 = p2 and q1 = q2", ro("1", "1", "1", "1")},
      {"injective-plus", "p1 < 0, p2 > 0, q1 > 0, q2 < 0", ro("-1", "1", "1", "-1")},
      {"injective-minus", "p1 > 0, p2 < 0, q1 < 0, q2 > 0", ro("1", "-1", "-1", "1")},
  };
  return presets;
}

const OrderPreset& order_preset(std::string_view name) {
  for (const auto& p : order_presets())
    if (p.name == name) return p;
  throw InputError("unknown order preset '" + std::string(name) + "'");
}

const std::vector<std::vector<double>>& acr_initial_sets(std::string_view preset) {
  static const std::vector<std::vector<double>> pnull = {
      {1.0, 0.8, 0.3, 0.9, 0.6}, {0.5, 1.0, 0.5, 1.0, 1.0}, {0.9, 0.9, 0.9, 0.9, 0.9}};
  static const std::vector<std::vector<double>> other = {
      {1.0, 0.9, 0.7, 0.4, 0.2}, {0.5, 0.4, 0.6, 0.1, 0.7}, {0.4, 0.4, 0.4, 0.4, 0.4}};
  if (preset == "sim-pnull") return pnull;
  if (preset == "sim-qnull" || preset == "sim-generic") return other;
  throw InputError("no initial-condition sets for preset '" + std::string(preset) + "'");
}

}  // namespace crnkit
