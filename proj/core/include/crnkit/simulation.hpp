#pragma once

#include "crnkit/analysis.hpp"
#include "crnkit/network.hpp"
#include "crnkit/steady_state.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crnkit {

enum class Integrator { DormandPrince, RungeKutta4 };

struct SimSettings {
  Integrator method = Integrator::DormandPrince;
  double t_end = 1e5;
  /// Fixed step for RK4, initial step for the adaptive method.
  double step = 1e-2;
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double steady_tol = 1e-9;
  /// Consecutive accepted steps with ||rhs||_inf < steady_tol.
  int steady_window = 10;
  bool stop_at_steady = true;
  double floor = 1e-12;
  std::size_t max_steps = 20'000'000;
  /// Keep every n-th accepted state in the trajectory (last state always kept).
  std::size_t record_every = 1;
};

/// Throws InputError for nonpositive horizons or tolerances.
void validate(const SimSettings& s);

struct Trajectory {
  std::vector<std::string> species;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  /// max over accepted steps of |w.x(t) - w.x(0)|.
  double conservation_drift = 0;
  bool reached_steady = false;
  double final_rhs_norm = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;

  [[nodiscard]] const std::vector<double>& final_state() const { return states.back(); }
  /// CSV with header t,<species...>.
  [[nodiscard]] std::string to_csv() const;
};

/// Integrates from a strictly positive x0. Drift is measured along
/// `conservation`, or the all-ones vector when empty. Throws BoundaryError
/// when a component drops below the floor, StiffnessError on step underflow.
Trajectory integrate(const Network& net, const Bindings& bindings, const std::vector<double>& x0,
                     const SimSettings& settings = {}, std::vector<double> conservation = {});

double max_norm(const std::vector<double>& v);

// ---------------------------------------------------------------------------
// ACR experiment

struct AcrRun {
  std::vector<double> initial;
  std::optional<Trajectory> trajectory;
  std::string error;  ///< non-empty when the run failed
};

struct AcrExperiment {
  std::vector<std::string> species;
  std::vector<AcrRun> runs;
  /// (max - min) / mean of the final values over converged runs.
  std::vector<double> spread;
  std::vector<std::string> robust;
  std::vector<std::string> predicted;  ///< acr_hyperplane
  bool agrees = false;
  double threshold = 1e-4;
};

/// Runs are integrated in parallel and merged by index.
AcrExperiment acr_experiment(const Network& net, const Bindings& bindings,
                             const std::vector<std::vector<double>>& initial_sets, const SimSettings& settings = {},
                             double threshold = 1e-4);

// ---------------------------------------------------------------------------
// Multistationarity experiment

struct CurveSample {
  double tau = 0;
  double y = 0;
};

struct SteadyStateCheck {
  double tau = 0;
  std::vector<double> state;
  double rhs_norm = 0;
  /// Distance (inf-norm) between the steady state and the end of a run
  /// started from a perturbation inside the same class.
  double return_distance = 0;
  bool returns = false;
  std::string error;
};

struct MultiExperiment {
  /// "z" for P-null orders, where the parameter is attached to A1; "y" otherwise.
  std::string function_name;
  RootReport roots;
  std::vector<CurveSample> curve;
  std::vector<SteadyStateCheck> checks;

  [[nodiscard]] std::string curve_csv() const;
};

/// Roots of the class equation for total T, each converted to a steady state
/// and checked by integration from a class-preserving perturbation.
MultiExperiment multistationarity_experiment(const Network& net, const Bindings& bindings,
                                             const MonomialParametrization& param, double total,
                                             const SimSettings& settings = {}, double perturbation = 1e-3,
                                             std::size_t curve_points = 400);

}  // namespace crnkit
