#include "report.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/models.hpp"
#include "crnkit/orders.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

namespace crnkit::report {

Json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round12(value);
}

Json exact(const Rational& value) { return to_string(value); }

Json exact(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(exact(v));
  return out;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json bindings_json(const Bindings& b) {
  Json out = Json::object();
  for (const auto& [k, v] : b) out[k] = exact(v);
  return out;
}

std::string bindings_text(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += k + "=" + to_string(v) + ",";
  return s;
}

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json numbers_list(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json rank_report(const RankReport& r) {
  Json out;
  out["whole_rank"] = r.whole_rank;
  out["part_ranks"] = r.part_ranks;
  out["independent"] = r.independent;
  return out;
}

Json partition_labels(const Network& net, const Partition& parts) {
  Json out = Json::array();
  for (const auto& part : parts) {
    Json labels = Json::array();
    for (std::size_t i : part) labels.push_back(net.reactions()[i].label);
    out.push_back(labels);
  }
  return out;
}

}  // namespace

Json document(const std::string& command, const Inputs& inputs, Json result) {
  Json doc;
  doc["tool"] = kToolVersion;
  doc["command"] = command;
  Json in;
  in["source"] = inputs.source;
  in["network_digest"] = fnv1a_hex(inputs.network_text);
  in["bindings_digest"] = fnv1a_hex(bindings_text(inputs.bindings));
  in["bindings"] = bindings_json(inputs.bindings);
  doc["inputs"] = std::move(in);
  doc["result"] = std::move(result);
  return doc;
}

Json network_numbers(const NetworkNumbers& n) {
  Json out;
  out["species"] = n.m;
  out["complexes"] = n.n;
  out["reactant_complexes"] = n.n_r;
  out["reversible_reactions"] = n.r_rev;
  out["irreversible_reactions"] = n.r_irrev;
  out["reactions"] = n.r;
  out["linkage_classes"] = n.linkage_classes;
  out["strong_linkage_classes"] = n.strong_linkage_classes;
  out["terminal_strong_linkage_classes"] = n.terminal_classes;
  out["rank"] = n.s;
  out["deficiency"] = n.deficiency;
  return out;
}

Json structural_flags(const StructuralFlags& f) {
  Json out;
  out["weakly_reversible"] = f.weakly_reversible;
  out["conservative"] = f.conservative;
  out["conservation_certificate"] = exact(f.conservation_certificate);
  out["positive_dependent"] = f.positive_dependent;
  out["dependence_certificate"] = exact(f.dependence_certificate);
  out["independent_linkage_classes"] = f.independent_linkage_classes;
  out["maximally_closed"] = f.maximally_closed;
  out["high_reactant_diversity"] = f.high_reactant_diversity;
  out["concordance"] = f.concordance;
  return out;
}

Json analyze(const Network& net) {
  Json out;
  out["network"] = net.name();
  out["species_names"] = string_list(net.species());
  const auto n = crnkit::network_numbers(net);
  out["numbers"] = network_numbers(n);
  out["numbers_tuple"] = {n.m,       n.n, n.n_r, n.r_rev, n.r_irrev, n.r, n.linkage_classes, n.strong_linkage_classes,
                          n.terminal_classes, n.s, n.deficiency};
  out["flags"] = structural_flags(crnkit::structural_flags(net));
  return out;
}

Json decompose(const Network& net) {
  const auto d = finest_independent_decomposition(net);
  Json out;
  out["parts"] = partition_labels(net, d.parts);
  out["stoichiometric"] = rank_report(verify_independence(net, d.parts));
  if (net.unbound_order_symbols().empty()) {
    const auto t_hat = verify_t_hat_independence(net, d.parts);
    out["t_hat"] = rank_report(t_hat);
    if (!t_hat.independent) {
      const Partition merged = merge_shared_reactants(net, d.parts);
      Json m;
      m["parts"] = partition_labels(net, merged);
      m["stoichiometric"] = rank_report(verify_independence(net, merged));
      m["t_hat"] = rank_report(verify_t_hat_independence(net, merged));
      out["t_hat_merged"] = std::move(m);
    }
  } else {
    out["t_hat"] = "needs bound kinetic orders";
  }
  return out;
}

Json parametrization(const MonomialParametrization& p) {
  Json out;
  out["parameters"] = string_list(p.parameter_names);
  Json species = Json::object();
  for (std::size_t j = 0; j < p.species.size(); ++j) species[p.species[j]] = p.expression(j);
  out["species"] = std::move(species);
  Json conds = Json::array();
  for (const auto& c : p.conditions) conds.push_back(c.condition_string());
  out["conditions"] = std::move(conds);
  return out;
}

Json parametrize(const Network& bound, const ParametrizeOptions& options) {
  const auto np = parametrize_network(bound, finest_independent_decomposition(bound), options);
  Json out;
  out["parts"] = partition_labels(bound, np.decomposition.parts);
  Json parts = Json::array();
  for (std::size_t i = 0; i < np.parts.size(); ++i) {
    Json p = parametrization(np.parts[i]);
    p["weakly_reversible"] = np.translated[i].weakly_reversible;
    p["deficiency"] = np.translated[i].deficiency;
    parts.push_back(std::move(p));
  }
  out["part_parametrizations"] = std::move(parts);
  out["merged"] = parametrization(np.merged);
  const auto ex = existence_report(bound, np);
  Json e;
  e["independent"] = ex.independent;
  e["t_hat_independent"] = ex.t_hat_independent;
  e["t_hat_partition"] = partition_labels(bound, ex.t_hat_partition);
  e["exists_for_all_rates"] = ex.exists_for_all_rates;
  e["conditions"] = string_list(ex.conditions);
  e["verdict"] = ex.verdict;
  out["existence"] = std::move(e);
  return out;
}

Json classify(const RegimeOrders& orders) {
  const auto c = crnkit::classify(orders);
  Json out;
  out["orders"] = orders.to_string();
  out["R"] = c.R ? exact(*c.R) : Json(nullptr);
  out["Q"] = c.Q ? exact(*c.Q) : Json(nullptr);
  out["regime"] = to_string(c.regime);
  return out;
}

Json multistationarity(const Network& bound, const RegimeOrders& orders) {
  const auto regime = crnkit::classify(orders);
  const auto sub = kinetic_subspaces(bound);
  Json out;
  out["regime"] = to_string(regime.regime);

  Json sign;
  std::optional<SignTestResult> st;
  try {
    st = multistationarity_sign_test(sub.S, sub.S_tilde_perp);
    sign["witness"] = st->witness ? Json(to_string(*st->witness)) : Json(nullptr);
    sign["perp_sign_vectors"] = st->perp_signs.size();
    sign["feasibility_checks"] = st->feasibility_checks;
  } catch (const UnsupportedError& e) {
    sign["error"] = e.what();
  }
  out["sign_test"] = std::move(sign);

  const auto inj = injectivity_determinant(bound);
  Json ij;
  ij["terms"] = inj.positive_terms + inj.negative_terms;
  ij["positive_terms"] = inj.positive_terms;
  ij["negative_terms"] = inj.negative_terms;
  ij["homogeneous"] = inj.homogeneous;
  ij["verdict"] = to_string(inj.verdict);
  ij["determinant"] = inj.determinant.to_string();
  out["injectivity"] = std::move(ij);

  const auto v = monostationarity_verdict(regime, &inj, st ? &*st : nullptr);
  out["verdict"] = to_string(v.verdict);
  out["reason"] = v.reason;
  return out;
}

Json acr(const Network& bound, const ParametrizeOptions& options) {
  Json out;
  const auto hyper = acr_hyperplane(bound);
  out["hyperplane"] = string_list(hyper);
  const auto np = parametrize_network(bound, finest_independent_decomposition(bound), options);
  const auto param = acr_from_parametrization(np.merged);
  out["parametrization"] = string_list(param);
  out["agree"] = hyper == param;
  return out;
}

Json roots(const RootReport& r) {
  Json out;
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"exponent", exact(t.exponent)}, {"coefficient", number(t.coefficient)}});
  out["terms"] = std::move(terms);
  out["structural_sign_changes"] = r.structural_sign_changes;
  out["exact_sign_changes"] = r.exact_sign_changes;
  out["roots"] = numbers_list(r.roots);
  out["residuals"] = numbers_list(r.residuals);
  out["stationary_point"] = r.stationary_point ? number(*r.stationary_point) : Json(nullptr);
  Json states = Json::array();
  for (const auto& s : r.steady_states) states.push_back(numbers_list(s));
  out["steady_states"] = std::move(states);
  return out;
}

Json count_roots(const Network& bound, const Bindings& bindings, const ParametrizeOptions& options, double total) {
  const auto np = parametrize_network(bound, finest_independent_decomposition(bound), options);
  Json out;
  out["total"] = number(total);
  out["species"] = string_list(np.merged.species);
  out["report"] = roots(crnkit::count_roots(np.merged, rate_values(bindings), total));
  return out;
}

Json trajectory(const Trajectory& t) {
  Json out;
  out["species"] = string_list(t.species);
  out["t_final"] = number(t.times.back());
  out["final_state"] = numbers_list(t.final_state());
  out["reached_steady"] = t.reached_steady;
  out["final_rhs_norm"] = number(t.final_rhs_norm);
  out["conservation_drift"] = number(t.conservation_drift);
  out["accepted_steps"] = t.accepted;
  out["rejected_steps"] = t.rejected;
  return out;
}

Json acr_experiment(const AcrExperiment& e) {
  Json out;
  out["species"] = string_list(e.species);
  Json runs = Json::array();
  for (const auto& r : e.runs) {
    Json run;
    run["initial"] = numbers_list(r.initial);
    if (r.trajectory) run["trajectory"] = trajectory(*r.trajectory);
    run["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    runs.push_back(std::move(run));
  }
  out["runs"] = std::move(runs);
  out["spread"] = numbers_list(e.spread);
  out["threshold"] = number(e.threshold);
  out["robust"] = string_list(e.robust);
  out["predicted"] = string_list(e.predicted);
  out["agrees"] = e.agrees;
  return out;
}

Json multi_experiment(const MultiExperiment& e) {
  Json out;
  out["function"] = e.function_name;
  out["roots"] = roots(e.roots);
  out["curve_points"] = e.curve.size();
  Json checks = Json::array();
  for (const auto& c : e.checks) {
    Json j;
    j["tau"] = number(c.tau);
    j["state"] = numbers_list(c.state);
    j["rhs_norm"] = number(c.rhs_norm);
    j["return_distance"] = number(c.return_distance);
    j["returns"] = c.returns;
    j["error"] = c.error.empty() ? Json(nullptr) : Json(c.error);
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json doc_reduction(const DocReduction& r) {
  Json out;
  out["m_prime"] = exact(r.m_prime);
  out["M_prime"] = exact(r.M_prime);
  out["lhs"] = exact(r.lhs);
  out["rhs"] = exact(r.rhs);
  out["margin"] = exact(r.margin);
  out["holds"] = r.holds;
  return out;
}

Json dac_reduction(const DacReduction& r) {
  Json out;
  out["m_prime"] = exact(r.m_prime);
  out["M_second"] = exact(r.M_second);
  out["k_star"] = exact(r.k_star);
  out["null_system"] = r.null_system;
  Json conds = Json::array();
  for (const auto& c : r.conditions)
    conds.push_back({{"branch", c.branch},
                     {"lhs", number(c.lhs)},
                     {"rhs", number(c.rhs)},
                     {"margin", number(c.margin)},
                     {"holds", c.holds}});
  out["conditions"] = std::move(conds);
  out["holds"] = r.holds;
  return out;
}

Json pipeline(const Network& bound, const Bindings& bindings, const ParametrizeOptions& options, double total) {
  Json stages;
  Json errors = Json::object();
  Json row;
  auto stage = [&](const char* name, auto&& fn) {
    try {
      stages[name] = fn();
      return true;
    } catch (const Error& e) {
      errors[name] = e.what();
      return false;
    }
  };
  stage("decompose", [&] { return report::decompose(bound); });
  if (stage("parametrize", [&] { return parametrize(bound, options); }))
    row["existence"] = stages["parametrize"]["existence"]["verdict"];
  const auto orders = RegimeOrders::from_bindings(bindings);
  stage("classify", [&] { return report::classify(orders); });
  row["orders"] = orders.to_string();
  row["regime"] = to_string(crnkit::classify(orders).regime);
  if (stage("multistationarity", [&] { return multistationarity(bound, orders); }))
    row["stationarity"] = stages["multistationarity"]["verdict"];
  if (stage("acr", [&] { return acr(bound, options); })) row["acr"] = stages["acr"]["hyperplane"];
  if (stage("count_roots", [&] { return count_roots(bound, bindings, options, total); }))
    row["roots_at_total"] = stages["count_roots"]["report"]["roots"].size();
  Json out;
  out["summary"] = std::move(row);
  out["stages"] = std::move(stages);
  out["errors"] = std::move(errors);
  return out;
}

Json compare(const std::vector<CompareEntry>& models, const std::vector<std::string>& presets) {
  Json out;
  Json cols = Json::object();
  std::map<std::string, std::map<std::string, std::set<std::string>>> acr_sets;
  for (const auto& m : models) {
    Json col;
    col["numbers"] = network_numbers(crnkit::network_numbers(m.net));
    const auto f = crnkit::structural_flags(m.net);
    col["weakly_reversible"] = f.weakly_reversible;
    col["conservative"] = f.conservative;
    Json acr_by = Json::object();
    for (const auto& p : presets) {
      const auto list = acr_hyperplane(bind_orders(m.net, order_preset(p).orders.to_bindings()));
      acr_by[p] = string_list(list);
      acr_sets[m.id][p] = {list.begin(), list.end()};
    }
    col["acr"] = std::move(acr_by);
    cols[m.id] = std::move(col);
  }
  out["models"] = std::move(cols);

  // Groups of models whose network-number columns coincide.
  Json groups = Json::array();
  std::vector<bool> used(models.size(), false);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (used[i]) continue;
    Json g = Json::array({models[i].id});
    const auto ni = crnkit::network_numbers(models[i].net);
    for (std::size_t j = i + 1; j < models.size(); ++j)
      if (!used[j] && crnkit::network_numbers(models[j].net) == ni) {
        used[j] = true;
        g.push_back(models[j].id);
      }
    groups.push_back(std::move(g));
  }
  out["identical_numbers"] = std::move(groups);

  if (acr_sets.count("doc") && acr_sets.count("dac") && acr_sets.count("doc-dac")) {
    Json u = Json::object();
    bool all = true;
    for (const auto& p : presets) {
      std::set<std::string> un = acr_sets["doc"][p];
      un.insert(acr_sets["dac"][p].begin(), acr_sets["dac"][p].end());
      const bool eq = un == acr_sets["doc-dac"][p];
      u[p] = eq;
      all = all && eq;
    }
    out["integrated_acr_is_union"] = std::move(u);
    out["union_holds"] = all;
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  return format_number(v.get<double>());
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& x) { return x.is_primitive(); });
}

void render(const Json& v, int depth, std::ostringstream& os);

void render_entry(const std::string& key, const Json& v, int depth, std::ostringstream& os) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  if (v.is_primitive()) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (v.is_object() && v.empty()) {
    os << pad << key << ": {}\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else {
    os << pad << key << ":\n";
    render(v, depth + 1, os);
  }
}

void render(const Json& v, int depth, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_entry(k, x, depth, os);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) render_entry("[" + std::to_string(i) + "]", v[i], depth, os);
  } else {
    os << std::string(2 * static_cast<std::size_t>(depth), ' ') << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

}  // namespace crnkit::report
