// Acceptance checks, one line per criterion:
//   criterion N: PASS|FAIL <title> [<seconds>s / <budget>s] <details>
// Run all of them, or one with --criterion N. Exit status is nonzero when any
// selected criterion fails.

#include "crnkit/analysis.hpp"
#include "crnkit/decomposition.hpp"
#include "crnkit/errors.hpp"
#include "crnkit/models.hpp"
#include "crnkit/reduction.hpp"
#include "crnkit/simulation.hpp"
#include "crnkit/steady_state.hpp"
#include "displays.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace crnkit;

namespace {

// Collects failed sub-checks and free-form notes for the summary line.
class Ledger {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  [[nodiscard]] bool passed() const { return failures_.empty(); }
  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    os << checks_ - failures_.size() << "/" << checks_ << " checks";
    if (!failures_.empty()) {
      os << "; failed:";
      for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) os << (i ? "," : "") << " " << failures_[i];
      if (failures_.size() > 6) os << ", ... (" << failures_.size() - 6 << " more)";
    }
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

const RegimeOrders& preset(const char* name) { return order_preset(name).orders; }

Network bound(const char* model, const char* name) {
  return bind_orders(load_builtin(model), preset(name).to_bindings());
}

ParametrizeOptions options_for(const char* model, std::vector<std::string> free = {"A2", "A4"}) {
  ParametrizeOptions o;
  o.shifts = builtin_model(model).shifts;
  o.preferred_free = std::move(free);
  return o;
}

NetworkParametrization parametrized(const char* model, const char* name, std::vector<std::string> free = {"A2", "A4"}) {
  const Network net = bound(model, name);
  return parametrize_network(net, finest_independent_decomposition(net), options_for(model, std::move(free)));
}

Bindings rates_with(const char* model, const char* name) {
  return merge_bindings(builtin_model(model).default_rates, preset(name).to_bindings());
}

// ---------------------------------------------------------------------------

void criterion_1(Ledger& L) {
  const auto tuple = [](const char* model) {
    const auto n = network_numbers(load_builtin(model));
    return std::vector<long>{static_cast<long>(n.m),
                             static_cast<long>(n.n),
                             static_cast<long>(n.n_r),
                             static_cast<long>(n.r_rev),
                             static_cast<long>(n.r_irrev),
                             static_cast<long>(n.r),
                             static_cast<long>(n.linkage_classes),
                             static_cast<long>(n.strong_linkage_classes),
                             static_cast<long>(n.terminal_classes),
                             static_cast<long>(n.s),
                             n.deficiency};
  };
  const std::vector<long> small{5, 6, 6, 2, 3, 7, 2, 2, 2, 4, 0};
  const std::vector<long> integrated{6, 7, 7, 2, 5, 9, 2, 2, 2, 5, 0};
  L.check(tuple("doc") == small, "doc numbers");
  L.check(tuple("dac") == small, "dac numbers");
  L.check(tuple("doc-dac") == integrated, "doc-dac numbers");
}

void criterion_2(Ledger& L) {
  const Network doc = load_builtin("doc");
  const auto d = finest_independent_decomposition(doc);
  L.check(d.labels(doc) == std::vector<std::vector<std::string>>{{"R1", "R2"}, {"R3", "R4", "R5", "R6", "R7"}},
          "finest partition");
  L.check(d.part_ranks == std::vector<std::size_t>{1, 3} && d.whole_rank == 4, "ranks 1+3=4");
  for (const auto* name : {"positive", "negative", "pnull", "qnull", "sim-pnull", "sim-qnull", "sim-generic"}) {
    const auto t = verify_t_hat_independence(bound("doc", name), d.parts);
    L.check(t.whole_rank == 6 && t.part_ranks == std::vector<std::size_t>{2, 4}, std::string("T-hat ranks ") + name);
  }
  const auto t = verify_t_hat_independence(bound("doc", "degenerate"), d.parts);
  L.check(t.whole_rank == 5 && t.part_ranks == std::vector<std::size_t>{1, 4}, "T-hat ranks degenerate");
}

void criterion_3(Ledger& L) {
  using namespace displays;
  for (const auto* name : {"positive", "negative", "sim-generic"}) {
    const auto& o = preset(name);
    L.check(parametrized("doc", name, {"A2", "A4"}).merged.equivalent(doc_display(o, 'p')),
            std::string("doc p-branch ") + name);
    L.check(parametrized("doc", name, {"A1", "A4"}).merged.equivalent(doc_display(o, 'q')),
            std::string("doc q-branch ") + name);
    L.check(parametrized("dac", name, {"A2", "A4"}).merged.equivalent(dac_display(o, 'p')),
            std::string("dac p-branch ") + name);
    L.check(parametrized("dac", name, {"A1", "A4"}).merged.equivalent(dac_display(o, 'q')),
            std::string("dac q-branch ") + name);
    L.check(parametrized("doc-dac", name, {"A2", "A4"}).merged.equivalent(integrated_display(o, 'p')),
            std::string("doc-dac p-branch ") + name);
    L.check(parametrized("doc-dac", name, {"A1", "A4"}).merged.equivalent(integrated_display(o, 'q')),
            std::string("doc-dac q-branch ") + name);
  }
  double worst = 0;
  for (const auto* model : {"doc", "dac", "doc-dac"})
    for (const auto* name : {"positive", "negative", "pnull", "qnull"}) {
      const Network net = bound(model, name);
      const auto np = parametrize_network(net, finest_independent_decomposition(net), options_for(model));
      const auto rep = verify_parametrization(net, np.merged, 100, 20240);
      worst = std::max(worst, rep.max_abs_residual);
      L.check(rep.trials == 100 && rep.max_abs_residual <= 1e-10, std::string("residual ") + model + " " + name);
    }
  L.note("max residual " + fmt(worst));
}

void criterion_4(Ledger& L) {
  const Network net = bind_orders(load_builtin("doc"), preset("positive").to_bindings());
  const std::vector<std::size_t> land{0, 1};
  const Network sub = subnetwork(net, land);
  const auto cycle = translate(sub, uniform_shifts(sub, builtin_model("doc").shifts));
  const auto K = tree_constants(cycle);
  L.check(K.size() == 2 && K[0] == Polynomial::variable("k2") && K[1] == Polynomial::variable("k1"),
          "K1 = k2, K2 = k1");

  const auto d = finest_independent_decomposition(net);
  const auto tn = translate(subnetwork(net, d.parts[1]), {});
  L.check(tn.nodes.size() == 4, "4-node graph");
  const auto KT = tree_constants(tn);
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(1, 60);
  bool all = true;
  for (int trial = 0; trial < 50; ++trial) {
    Bindings w;
    for (const auto& e : tn.edges) w[e.rate.to_string()] = ratio(num(rng), num(rng));
    const std::size_t n = tn.nodes.size();
    oracle::Mat Lap(n, std::vector<Rational>(n));
    for (const auto& e : tn.edges) {
      const Rational k = w[e.rate.to_string()];
      Lap[e.from][e.from] += k;
      Lap[e.from][e.to] -= k;
    }
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Mat minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        std::vector<Rational> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i) row.push_back(Lap[a][b]);
        minor.push_back(row);
      }
      all = all && KT[i].substitute(w).constant_value() == oracle::det(minor);
    }
  }
  L.check(all, "matrix-tree cofactors on 50 weightings");
}

void criterion_5(Ledger& L) {
  const SignVector doc_witness{1, -1, -1, -1, -1};
  auto witness = [](const Network& net) {
    const auto ks = kinetic_subspaces(net);
    return multistationarity_sign_test(ks.S, ks.S_tilde_perp).witness;
  };
  L.check(witness(bound("doc", "positive")) == doc_witness, "doc positive witness");
  // Any positive-regime orders, not only the preset.
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> d(-6, 6);
  int positives = 0;
  bool all = true;
  while (positives < 20) {
    const RegimeOrders o{ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2)};
    if (classify(o).regime != Regime::Positive) continue;
    ++positives;
    all = all && witness(bind_orders(load_builtin("doc"), o.to_bindings())) == doc_witness;
  }
  L.check(all, "doc witness for 20 random positive orders");
  L.check(witness(bound("doc-dac", "positive")) == SignVector{1, -1, -1, -1, -1, -1}, "integrated positive witness");

  const auto inj = injectivity_determinant(load_builtin("doc"));
  L.check(inj.determinant.term_count() == 14, "14 terms");
  const auto signs = sign_by_symbol(inj.determinant, {"p1", "p2", "q1", "q2"});
  const int p1 = signs.at("p1"), p2 = signs.at("p2"), q1 = signs.at("q1"), q2 = signs.at("q2");
  L.check(p1 != 0 && p2 == -p1 && q1 == p2 && q2 == p1, "sign-by-symbol pattern");
  L.check(injectivity_determinant(bound("doc", "injective-plus")).verdict != InjectivityVerdict::Inconclusive,
          "injective (-1,1,1,-1)");
  L.check(injectivity_determinant(bound("doc", "injective-minus")).verdict != InjectivityVerdict::Inconclusive,
          "injective (1,-1,-1,1)");
}

// Dense log-grid sign-change count, independent of the root finder.
int grid_roots(const ConservationFunction& y) {
  int count = 0;
  double prev = y(1e-8);
  for (int i = 1; i <= 200000; ++i) {
    const double v = y(std::pow(10.0, -8 + 16.0 * i / 200000));
    count += (v > 0) != (prev > 0);
    prev = v;
  }
  return count;
}

void criterion_6(Ledger& L) {
  const RateValues rates = rate_values(reference_rates());
  const std::vector<std::pair<const char*, int>> bounds{{"positive", 2}, {"negative", 1}, {"pnull", 1}, {"qnull", 1}};
  for (const auto& [name, expected] : bounds) {
    const auto param = parametrized("doc", name).merged;
    L.check(count_roots(param, rates, 2).structural_sign_changes == expected, std::string("bound ") + name);
  }
  for (const auto* name : {"negative", "pnull", "qnull"}) {
    const auto param = parametrized("doc", name).merged;
    for (double T : {1.0, 2.0, 5.0}) {
      const auto rep = count_roots(param, rates, T);
      const ConservationFunction y(param, rates, T);
      const std::string tag = std::string(name) + " T=" + fmt(T);
      L.check(static_cast<int>(rep.roots.size()) == grid_roots(y), "grid oracle " + tag);
      bool residual_ok = true;
      for (double r : rep.residuals) residual_ok = residual_ok && r <= 1e-10;
      L.check(residual_ok, "residual " + tag);
      double constant = 0;
      for (const auto& t : rep.terms)
        if (t.exponent == 0) constant += t.coefficient;
      L.check(rep.roots.size() == 1, "one root " + tag + " (got " + std::to_string(rep.roots.size()) +
                                         ", tau-free part " + fmt(constant) + ")");
    }
  }
  // Positive regime: the minimum of y over tau, scanned on a dense grid, splits
  // totals with two roots from totals with none.
  const auto param = parametrized("doc", "positive").merged;
  const ConservationFunction y0(param, rates, 0.0);
  double ymin = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 200000; ++i) ymin = std::min(ymin, y0(std::pow(10.0, -8 + 16.0 * i / 200000)));
  bool two = false, none = false, residual_ok = true;
  for (double f : {0.25, 0.5, 0.9, 1.1, 2.0, 4.0}) {
    const double T = f * ymin;
    const auto rep = count_roots(param, rates, T);
    const int grid = grid_roots(ConservationFunction(param, rates, T));
    L.check(static_cast<int>(rep.roots.size()) == grid, "positive grid oracle T=" + fmt(T));
    for (double r : rep.residuals) residual_ok = residual_ok && r <= 1e-10;
    two = two || rep.roots.size() == 2;
    none = none || rep.roots.empty();
  }
  L.check(two && none, "positive: totals with 2 and with 0 roots");
  L.check(residual_ok, "positive residuals");
  L.note("positive y_min " + fmt(ymin));
}

void criterion_7(Ledger& L) {
  const std::vector<std::pair<const char*, std::vector<std::string>>> table{
      {"positive", {}}, {"negative", {}}, {"pnull", {"A2", "A3", "A4", "A17"}}, {"qnull", {"A1"}}};
  for (const auto& [name, expected] : table) {
    L.check(acr_hyperplane(bound("doc", name)) == expected, std::string("hyperplane ") + name);
    L.check(acr_from_parametrization(parametrized("doc", name).merged) == expected,
            std::string("parametrization ") + name);
  }
  const std::vector<std::pair<const char*, std::vector<std::string>>> sims{
      {"sim-pnull", {"A2", "A3", "A4", "A17"}}, {"sim-qnull", {"A1"}}, {"sim-generic", {}}};
  for (const auto& [name, expected] : sims) {
    const auto e = acr_experiment(load_builtin("doc"), rates_with("doc", name), acr_initial_sets(name));
    bool converged = true;
    for (const auto& r : e.runs) converged = converged && r.error.empty();
    L.check(converged, std::string("all runs steady ") + name);
    L.check(e.robust == expected, std::string("robust set ") + name);
    L.check(e.agrees, std::string("agrees with hyperplane ") + name);
    double widest = 0, tightest = 0;
    for (std::size_t i = 0; i < e.species.size(); ++i) {
      const bool acr = std::find(expected.begin(), expected.end(), e.species[i]) != expected.end();
      if (acr) tightest = std::max(tightest, e.spread[i]);
      else widest = std::max(widest, e.spread[i]);
    }
    L.check(widest > 1e-2, std::string("non-ACR spread > 1e-2 ") + name);
    L.note(std::string(name) + " max ACR spread " + fmt(tightest) + ", max other " + fmt(widest));
  }
}

void criterion_8(Ledger& L) {
  double worst = 0;
  int runs = 0;
  for (const auto* model : {"doc", "dac", "doc-dac"}) {
    const Network net = load_builtin(model);
    for (const auto* name : {"sim-pnull", "sim-qnull", "sim-generic"}) {
      const Bindings b = rates_with(model, name);
      for (auto x0 : acr_initial_sets(name)) {
        x0.resize(net.species_count(), 0.5);
        // Without a positive steady state at this total (DAC under P-null
        // orders) A1 decays towards the floor, so the horizon is capped.
        SimSettings s;
        s.t_end = 50;
        try {
          const auto tr = integrate(bind_orders(net, b), b, x0, s);
          worst = std::max(worst, tr.conservation_drift);
          ++runs;
        } catch (const Error& e) {
          L.check(false, std::string(model) + " " + name + ": " + e.what());
        }
      }
    }
  }
  L.check(worst <= 1e-9, "adaptive drift <= 1e-9");
  L.note(std::to_string(runs) + " adaptive runs, max drift " + fmt(worst));

  // Fixed-step RK4 with the step halved.
  const Network net = load_builtin("doc");
  const Bindings b = rates_with("doc", "sim-generic");
  const Network bnet = bind_orders(net, b);
  const std::vector<double> x0{1.0, 0.9, 0.7, 0.4, 0.2};
  SimSettings ref;
  ref.t_end = 10;
  ref.stop_at_steady = false;
  ref.abs_tol = 1e-14;
  ref.rel_tol = 1e-13;
  const auto exact = integrate(bnet, b, x0, ref).final_state();
  struct Rk4 {
    double drift, error;
  };
  auto rk4 = [&](double h) {
    SimSettings s = ref;
    s.method = Integrator::RungeKutta4;
    s.step = h;
    const auto tr = integrate(bnet, b, x0, s);
    double e = 0;
    for (std::size_t i = 0; i < x0.size(); ++i) e = std::max(e, std::abs(tr.final_state()[i] - exact[i]));
    return Rk4{tr.conservation_drift, e};
  };
  const Rk4 coarse = rk4(0.2), fine = rk4(0.1);
  const double drift_ratio = fine.drift > 0 ? coarse.drift / fine.drift : std::numeric_limits<double>::infinity();
  const double error_ratio = coarse.error / fine.error;
  L.check(drift_ratio >= 12 && drift_ratio <= 20, "RK4 drift ratio in [12, 20] (got " + fmt(drift_ratio) + ")");
  L.note("RK4 drift " + fmt(coarse.drift) + " -> " + fmt(fine.drift) + "; global error ratio " + fmt(error_ratio));
}

std::optional<Rational> vertex_optimum(const Region& r, const std::vector<Rational>& w, bool minimize) {
  const std::size_t n = r.lower.size();
  std::optional<Rational> best;
  for (std::size_t free = 0; free < n; ++free)
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (mask >> free & 1) continue;
      std::vector<Rational> x(n);
      Rational rest = r.total;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == free) continue;
        x[i] = (mask >> i & 1) ? r.upper[i] : r.lower[i];
        rest -= x[i];
      }
      if (rest < r.lower[free] || rest > r.upper[free]) continue;
      Rational v = w[free] * rest;
      for (std::size_t i = 0; i < n; ++i)
        if (i != free) v += w[i] * x[i];
      if (!best || (minimize ? v < *best : v > *best)) best = v;
    }
  return best;
}

void criterion_9(Ledger& L) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(1, 30), lo(1, 10), width(0, 30), frac(0, 1000);
  const std::vector<std::string> doc{"A1", "A2", "A3", "A4", "A17"};
  const std::vector<std::string> dac{"A1", "A2", "A3", "A4", "A5"};
  const std::vector<Rational> w_a2{0, 1, 0, 0, 0}, w_doc{1, 1, 0, 1, 1}, w_dac{1, 0, 1, 1, 1};
  bool formulas = true, optimizer = true;
  for (int trial = 0; trial < 100; ++trial) {
    Bindings k;
    for (int i = 1; i <= 7; ++i) k["k" + std::to_string(i)] = ratio(num(rng), num(rng));
    Region r;
    Rational sl = 0, sh = 0;
    for (int i = 0; i < 5; ++i) {
      const long a = lo(rng), b = a + width(rng);
      r.lower.push_back(ratio(a, 10));
      r.upper.push_back(ratio(b, 10));
      sl += r.lower.back();
      sh += r.upper.back();
    }
    r.total = sl + (sh - sl) * ratio(frac(rng), 1000);
    r.total.canonicalize();

    const Rational m = *vertex_optimum(r, w_a2, true);
    const Rational Md = *vertex_optimum(r, w_doc, false), Mc = *vertex_optimum(r, w_dac, false);
    optimizer = optimizer && minimize_linear(r, w_a2).value == m && maximize_linear(r, w_doc).value == Md &&
                maximize_linear(r, w_dac).value == Mc;

    const auto d = reduction_check_doc(doc, k, r);
    formulas = formulas && d.lhs == k["k3"] / (k["k4"] + k["k7"]) && d.rhs == (r.total - Md) / m &&
               d.holds == (d.lhs < d.rhs);

    const Rational ks = (k["k3"] * k["k5"] * k["k7"] + k["k6"] * k["k4"] * (k["k5"] + k["k7"])) /
                        (k["k4"] * k["k5"] * k["k7"]);
    formulas = formulas && dac_k_star(k) == ks;

    const RegimeOrders o = preset(trial % 2 ? "positive" : "negative");
    const auto c = reduction_check_dac(dac, merge_bindings(k, o.to_bindings()), r);
    const double ratio_k = to_double(k["k1"] / k["k2"]), mp = to_double(m);
    const double Q = to_double((o.q2 - o.q1) / (o.p2 - o.p1)), R = 1 / Q;
    const double rp = std::pow(ratio_k, 1 / to_double(o.p2 - o.p1)) * std::pow(mp, -Q) + to_double(ks);
    const double rq = std::pow(ratio_k, 1 / to_double(o.q2 - o.q1)) * std::pow(mp, -R) + to_double(ks);
    const double lhs = 1 + to_double(Mc / m);
    formulas = formulas && c.conditions.size() == 2 && std::abs(c.conditions[0].rhs - rp) <= 1e-12 * rp &&
               std::abs(c.conditions[1].rhs - rq) <= 1e-12 * rq && std::abs(c.conditions[0].lhs - lhs) <= 1e-12 * lhs;

    const auto n = reduction_check_dac(dac, merge_bindings(k, preset("qnull").to_bindings()), r);
    formulas = formulas && n.null_system && n.conditions.size() == 1 && n.conditions[0].rhs == to_double(ks);
  }
  L.check(dac_k_star(parse_bindings("k1=1,k2=1,k3=1,k4=1,k5=1,k6=1,k7=1")) == 3, "k* = 3 at unit rates");
  L.check(formulas, "reduction formulas on 100 configurations");
  L.check(optimizer, "greedy optimizer equals vertex enumeration on 100 configurations");
}

void criterion_10(Ledger& L) {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_int_distribution<int> d(-6, 6);
  const char* models[] = {"doc", "dac", "doc-dac"};
  const char* regimes[] = {"positive", "negative", "pnull", "qnull", "sim-pnull", "sim-qnull", "sim-generic"};

  bool positive = true, mhm = true, acr = true;
  for (const auto* model : models)
    for (const auto* name : regimes) {
      const auto np = parametrized(model, name);
      for (int t = 0; t < 50; ++t) {
        std::map<std::string, double> rates;
        for (int k = 1; k <= 9; ++k) rates["k" + std::to_string(k)] = std::pow(10.0, u(rng));
        const std::vector<double> tau{std::pow(10.0, u(rng))};
        const auto x = np.merged.evaluate<double>([&](const std::string& s) { return rates.at(s); },
                                                  std::span<const double>(tau));
        positive = positive && std::all_of(x.begin(), x.end(), [](double v) { return v > 0 && std::isfinite(v); });
      }
      for (const auto& tn : np.translated) {
        const auto pm = parametrization_matrices(tn, {"A2", "A4"});
        mhm = mhm && pm.M * pm.H * pm.M == pm.M && (pm.M * pm.B).is_zero();
      }
      acr = acr && acr_hyperplane(bound(model, name)) == acr_from_parametrization(np.merged);
    }
  L.check(positive, "parametrization positivity");
  L.check(mhm, "M H M = M and M B = 0");

  for (int t = 0; t < 30; ++t) {
    const RegimeOrders o{ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2)};
    if (classify(o).regime == Regime::Degenerate) continue;
    const Network net = bind_orders(load_builtin("doc"), o.to_bindings());
    const auto np = parametrize_network(net, finest_independent_decomposition(net), options_for("doc"));
    acr = acr && acr_hyperplane(net) == acr_from_parametrization(np.merged);
  }
  L.check(acr, "ACR criteria agree");

  bool reorder = true;
  for (const auto* model : models) {
    const Network net = load_builtin(model);
    auto canonical = [](std::vector<std::vector<std::string>> parts) {
      for (auto& p : parts) std::sort(p.begin(), p.end());
      std::sort(parts.begin(), parts.end());
      return parts;
    };
    const auto base = canonical(finest_independent_decomposition(net).labels(net));
    std::vector<Reaction> reactions = net.reactions();
    for (int t = 0; t < 20; ++t) {
      std::shuffle(reactions.begin(), reactions.end(), rng);
      const Network perm(net.name(), net.species(), reactions);
      reorder = reorder && canonical(finest_independent_decomposition(perm).labels(perm)) == base;
    }
  }
  L.check(reorder, "decomposition reorder invariance");

  bool rq = true;
  for (int t = 0; t < 500; ++t) {
    const RegimeOrders o{ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2), ratio(d(rng), 2)};
    const auto c = classify(o);
    if (c.R && c.Q) rq = rq && *c.R * *c.Q == 1;
  }
  L.check(rq, "R Q = 1");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Ledger&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "network numbers", 1, criterion_1},
      {2, "decomposition and T-hat ranks", 1, criterion_2},
      {3, "parametrization displays and residuals", 5, criterion_3},
      {4, "tree constants", 5, criterion_4},
      {5, "sign test and injectivity", 2, criterion_5},
      {6, "root counting", 5, criterion_6},
      {7, "ACR tables and simulation", 60, criterion_7},
      {8, "conservation and RK4 order", 60, criterion_8},
      {9, "reduction conditions and optimizer", 5, criterion_9},
      {10, "property suite", 300, criterion_10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_passed = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Ledger ledger;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ledger);
    } catch (const std::exception& e) {
      ledger.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ledger.check(seconds < c.budget_seconds, "time budget");
    const bool ok = ledger.passed();
    all_passed = all_passed && ok;
    std::printf("criterion %d: %s %s [%.3fs / %gs] %s\n", c.id, ok ? "PASS" : "FAIL", c.title, seconds,
                c.budget_seconds, ledger.summary().c_str());
    std::fflush(stdout);
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_passed ? 0 : 1;
}
