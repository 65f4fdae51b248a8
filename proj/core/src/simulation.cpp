#include "crnkit/simulation.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

namespace crnkit {

void validate(const SimSettings& s) {
  if (!(s.t_end > 0)) throw InputError("integration horizon must be positive");
  if (!(s.step > 0)) throw InputError("step must be positive");
  if (!(s.abs_tol > 0) || !(s.rel_tol > 0)) throw InputError("tolerances must be positive");
  if (!(s.steady_tol > 0)) throw InputError("steady-state tolerance must be positive");
  if (s.steady_window < 1) throw InputError("steady-state window must be at least 1");
  if (s.record_every < 1) throw InputError("record stride must be at least 1");
}

double max_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string Trajectory::to_csv() const {
  std::ostringstream out;
  out << "t";
  for (const auto& s : species) out << ',' << s;
  out << '\n';
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << format_number(times[i]);
    for (double x : states[i]) out << ',' << format_number(x);
    out << '\n';
  }
  return out.str();
}

namespace {

using State = std::vector<double>;

// y + h * sum_j a_j k_j
State combine(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [a, k] : terms) {
    if (a == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * a * (*k)[i];
  }
  return out;
}

class Stepper {
 public:
  Stepper(const Network& net, const Bindings& bindings) : system_(net, bindings) {}

  State rhs(const State& x) const { return system_.rhs(x); }

  // One RK4 step. Throws DomainError if a stage leaves the positive orthant.
  State rk4(const State& y, const State& k1, double h) const {
    const State k2 = rhs(combine(y, h, {{0.5, &k1}}));
    const State k3 = rhs(combine(y, h, {{0.5, &k2}}));
    const State k4 = rhs(combine(y, h, {{1.0, &k3}}));
    return combine(y, h, {{1.0 / 6, &k1}, {1.0 / 3, &k2}, {1.0 / 3, &k3}, {1.0 / 6, &k4}});
  }

  // Dormand-Prince 5(4). Returns the fifth-order solution, its rhs (FSAL) and
  // the embedded error estimate.
  // `lambda` estimates the local Lipschitz constant from the last two stages,
  // which both sit at t + h.
  void dp5(const State& y, const State& k1, double h, State& y5, State& k7, State& err, double& lambda) const {
    const State k2 = rhs(combine(y, h, {{1.0 / 5, &k1}}));
    const State k3 = rhs(combine(y, h, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}));
    const State k4 = rhs(combine(y, h, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}));
    const State k5 = rhs(combine(
        y, h, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2}, {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}));
    const State y6 = combine(y, h,
                             {{9017.0 / 3168, &k1},
                              {-355.0 / 33, &k2},
                              {46732.0 / 5247, &k3},
                              {49.0 / 176, &k4},
                              {-5103.0 / 18656, &k5}});
    const State k6 = rhs(y6);
    y5 = combine(y, h,
                 {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4}, {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
    k7 = rhs(y5);
    double dk = 0, dy = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      dk += (k7[i] - k6[i]) * (k7[i] - k6[i]);
      dy += (y5[i] - y6[i]) * (y5[i] - y6[i]);
    }
    lambda = dy > 0 ? std::sqrt(dk / dy) : 0.0;
    err.assign(y.size(), 0);
    const double e[7] = {71.0 / 57600,  0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200, 22.0 / 525,
                         -1.0 / 40};
    const State* ks[7] = {&k1, &k2, &k3, &k4, &k5, &k6, &k7};
    for (int s = 0; s < 7; ++s)
      for (std::size_t i = 0; i < y.size(); ++i) err[i] += h * e[s] * (*ks[s])[i];
  }

  const PowerLawSystem& system() const { return system_; }

 private:
  PowerLawSystem system_;
};

double weighted_sum(const std::vector<double>& w, const State& x) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s;
}

}  // namespace

Trajectory integrate(const Network& net, const Bindings& bindings, const std::vector<double>& x0,
                     const SimSettings& settings, std::vector<double> conservation) {
  validate(settings);
  const std::size_t m = net.species_count();
  if (x0.size() != m) throw InputError("initial state has " + std::to_string(x0.size()) + " entries, expected " +
                                       std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    if (!(x0[i] > 0)) throw InputError("initial concentration of " + net.species()[i] + " must be positive");
  if (conservation.empty()) conservation.assign(m, 1.0);
  if (conservation.size() != m) throw InputError("conservation vector does not match species count");

  const Stepper stepper(net, bindings);
  Trajectory tr;
  tr.species = net.species();
  State y = x0;
  double t = 0;
  State k1 = stepper.rhs(y);
  const double total0 = weighted_sum(conservation, y);
  tr.times.push_back(t);
  tr.states.push_back(y);

  double h = std::min(settings.step, settings.t_end);
  int steady_run = 0;
  bool last_recorded = true;
  // Near a stable steady state the accuracy controller alone parks the step
  // at the edge of the stability region, where the solution jitters at
  // tolerance level. PI control plus a cap inside the region (DP5 reaches
  // about 3.3 on the negative real axis) lets perturbations decay instead.
  constexpr double kBeta = 0.08;
  constexpr double kStableReach = 2.0;
  double err_old = 1e-4;
  while (t < settings.t_end) {
    if (tr.accepted + tr.rejected >= settings.max_steps) throw StiffnessError("step budget exhausted");
    const double remaining = settings.t_end - t;
    const bool final_step = h >= remaining;
    const double step = final_step ? remaining : h;
    State next, k_next;
    if (settings.method == Integrator::RungeKutta4) {
      try {
        next = stepper.rk4(y, k1, step);
      } catch (const DomainError&) {
        throw BoundaryError("a stage state", t);
      }
      k_next = stepper.rhs(next);
    } else {
      State err;
      bool ok = true;
      double lambda = 0;
      try {
        stepper.dp5(y, k1, step, next, k_next, err, lambda);
      } catch (const DomainError&) {
        ok = false;
      }
      double norm = std::numeric_limits<double>::infinity();
      if (ok) {
        double acc = 0;
        for (std::size_t i = 0; i < m; ++i) {
          const double sc = settings.abs_tol + settings.rel_tol * std::max(std::abs(y[i]), std::abs(next[i]));
          acc += (err[i] / sc) * (err[i] / sc);
        }
        norm = std::sqrt(acc / static_cast<double>(m));
      }
      if (!(norm <= 1)) {
        ++tr.rejected;
        const double factor = ok ? std::max(0.2, 0.9 * std::pow(norm, -0.2)) : 0.25;
        h = step * factor;
        if (h < 1e-14 * std::max(1.0, t)) throw StiffnessError("step size underflow at t = " + std::to_string(t));
        continue;
      }
      const double e = std::max(norm, 1e-10);
      const double factor = std::min(5.0, std::max(0.2, 0.9 * std::pow(e, -(0.2 - 0.75 * kBeta)) *
                                                            std::pow(err_old, kBeta)));
      err_old = std::max(norm, 1e-4);
      h = step * factor;
      if (lambda > 0) h = std::min(h, kStableReach / lambda);
    }
    t = final_step ? settings.t_end : t + step;
    y = std::move(next);
    k1 = std::move(k_next);
    ++tr.accepted;
    for (std::size_t i = 0; i < m; ++i)
      if (y[i] < settings.floor) throw BoundaryError(net.species()[i], t);
    tr.conservation_drift = std::max(tr.conservation_drift, std::abs(weighted_sum(conservation, y) - total0));
    last_recorded = tr.accepted % settings.record_every == 0;
    if (last_recorded) {
      tr.times.push_back(t);
      tr.states.push_back(y);
    }
    steady_run = max_norm(k1) < settings.steady_tol ? steady_run + 1 : 0;
    if (steady_run >= settings.steady_window) {
      tr.reached_steady = true;
      if (settings.stop_at_steady) break;
    }
  }
  if (!last_recorded) {
    tr.times.push_back(t);
    tr.states.push_back(y);
  }
  tr.final_rhs_norm = max_norm(k1);
  return tr;
}

AcrExperiment acr_experiment(const Network& net, const Bindings& bindings,
                             const std::vector<std::vector<double>>& initial_sets, const SimSettings& settings,
                             double threshold) {
  if (initial_sets.size() < 2) throw InputError("an ACR experiment needs at least two initial conditions");
  const Network bound = bind_orders(net, bindings);
  AcrExperiment out;
  out.species = net.species();
  out.threshold = threshold;
  out.predicted = acr_hyperplane(bound);

  std::vector<std::future<AcrRun>> futures;
  for (const auto& x0 : initial_sets)
    futures.push_back(std::async(std::launch::async, [&bound, &bindings, &settings, x0] {
      AcrRun run;
      run.initial = x0;
      try {
        run.trajectory = integrate(bound, bindings, x0, settings);
        if (!run.trajectory->reached_steady) run.error = "no steady state within the horizon";
      } catch (const Error& e) {
        run.error = e.what();
      }
      return run;
    }));
  for (auto& f : futures) out.runs.push_back(f.get());

  const std::size_t m = out.species.size();
  out.spread.assign(m, std::numeric_limits<double>::infinity());
  std::vector<const State*> finals;
  for (const auto& r : out.runs)
    if (r.error.empty()) finals.push_back(&r.trajectory->final_state());
  if (finals.size() >= 2) {
    for (std::size_t i = 0; i < m; ++i) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0;
      for (const auto* f : finals) {
        lo = std::min(lo, (*f)[i]);
        hi = std::max(hi, (*f)[i]);
        sum += (*f)[i];
      }
      out.spread[i] = (hi - lo) / (sum / static_cast<double>(finals.size()));
      if (out.spread[i] < threshold) out.robust.push_back(out.species[i]);
    }
  }
  out.agrees = finals.size() == out.runs.size() && out.robust == out.predicted;
  return out;
}

std::string MultiExperiment::curve_csv() const {
  std::ostringstream out;
  out << "tau," << function_name << '\n';
  for (const auto& s : curve) out << format_number(s.tau) << ',' << format_number(s.y) << '\n';
  return out.str();
}

MultiExperiment multistationarity_experiment(const Network& net, const Bindings& bindings,
                                             const MonomialParametrization& param, double total,
                                             const SimSettings& settings, double perturbation,
                                             std::size_t curve_points) {
  const Network bound = bind_orders(net, bindings);
  const RateValues rates = rate_values(bindings);
  MultiExperiment out;
  out.function_name = !param.parameter_species.empty() && param.parameter_species[0] == "A1" ? "z" : "y";
  out.roots = count_roots(param, rates, total);

  const ConservationFunction y(param, rates, total);
  double lo = 1e-2, hi = 1e2;
  if (!out.roots.roots.empty()) {
    lo = out.roots.roots.front() / 10;
    hi = out.roots.roots.back() * 10;
  } else if (out.roots.stationary_point) {
    lo = *out.roots.stationary_point / 10;
    hi = *out.roots.stationary_point * 10;
  }
  for (std::size_t i = 0; i < curve_points; ++i) {
    const double f = curve_points > 1 ? static_cast<double>(i) / static_cast<double>(curve_points - 1) : 0.0;
    const double tau = std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
    out.curve.push_back({tau, y(tau)});
  }

  // Class-preserving direction: the first stoichiometric basis vector.
  const ExactMatrix S = kinetic_subspaces(bound).S;
  std::vector<double> dir(net.species_count(), 0.0);
  if (S.cols() > 0)
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = to_double(S(i, 0));
  const double dir_norm = max_norm(dir);

  const PowerLawSystem system(bound, bindings);
  for (std::size_t r = 0; r < out.roots.roots.size(); ++r) {
    SteadyStateCheck c;
    c.tau = out.roots.roots[r];
    c.state = out.roots.steady_states[r];
    c.rhs_norm = max_norm(system.rhs(c.state));
    if (dir_norm > 0) {
      const double scale = perturbation * *std::min_element(c.state.begin(), c.state.end()) / dir_norm;
      std::vector<double> x0 = c.state;
      for (std::size_t i = 0; i < x0.size(); ++i) x0[i] += scale * dir[i];
      try {
        const auto tr = integrate(bound, bindings, x0, settings);
        std::vector<double> diff(x0.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = tr.final_state()[i] - c.state[i];
        c.return_distance = max_norm(diff);
        c.returns = tr.reached_steady && c.return_distance < 1e-6 * std::max(1.0, max_norm(c.state));
      } catch (const Error& e) {
        c.error = e.what();
      }
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace crnkit
