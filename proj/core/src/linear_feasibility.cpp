#include "crnkit/linear_feasibility.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/matrix.hpp"

#include <algorithm>
#include <set>

namespace crnkit {
namespace {

// a . y >= b over the reduced variable set.
struct Ineq {
  std::vector<Rational> a;
  Rational b;
  bool operator<(const Ineq& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

// Scales so the first nonzero coefficient has magnitude 1; keeps direction.
Ineq normalize(Ineq q) {
  for (const auto& v : q.a) {
    if (v != 0) {
      const Rational s = abs(v);
      for (auto& c : q.a) c /= s;
      q.b /= s;
      return q;
    }
  }
  return q;
}

bool is_trivial(const Ineq& q) {
  return std::all_of(q.a.begin(), q.a.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(std::size_t nvars,
                                                         const std::vector<LinearConstraint>& constraints) {
  std::vector<const LinearConstraint*> equalities;
  std::vector<const LinearConstraint*> inequalities;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != nvars) throw InputError("constraint length does not match variable count");
    (c.kind == LinearConstraint::Kind::Equal ? equalities : inequalities).push_back(&c);
  }

  // x = x0 + P y, where y ranges over the free variables of the equality system.
  std::vector<Rational> x0(nvars);
  std::vector<std::size_t> free_vars;
  ExactMatrix param(nvars, 0);
  {
    ExactMatrix aug(equalities.size(), nvars + 1);
    for (std::size_t r = 0; r < equalities.size(); ++r) {
      for (std::size_t c = 0; c < nvars; ++c) aug(r, c) = equalities[r]->coeffs[c];
      aug(r, nvars) = equalities[r]->rhs;
    }
    const auto e = aug.rref();
    std::vector<bool> pivot(nvars, false);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] == nvars) return std::nullopt;
      pivot[e.pivots[r]] = true;
    }
    for (std::size_t c = 0; c < nvars; ++c)
      if (!pivot[c]) free_vars.push_back(c);
    param = ExactMatrix(nvars, free_vars.size());
    for (std::size_t k = 0; k < free_vars.size(); ++k) param(free_vars[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      x0[e.pivots[r]] = e.reduced(r, nvars);
      for (std::size_t k = 0; k < free_vars.size(); ++k) param(e.pivots[r], k) = -e.reduced(r, free_vars[k]);
    }
  }

  const std::size_t d = free_vars.size();
  std::set<Ineq> current;
  for (const auto* c : inequalities) {
    Ineq q{std::vector<Rational>(d), c->rhs};
    for (std::size_t j = 0; j < nvars; ++j) {
      if (c->coeffs[j] == 0) continue;
      q.b -= c->coeffs[j] * x0[j];
      for (std::size_t k = 0; k < d; ++k) q.a[k] += c->coeffs[j] * param(j, k);
    }
    if (is_trivial(q)) {
      if (q.b > 0) return std::nullopt;
      continue;
    }
    current.insert(normalize(std::move(q)));
  }

  // Eliminate the last variable first; keep each stage for back-substitution.
  std::vector<std::vector<Ineq>> stages(d);
  for (std::size_t v = d; v-- > 0;) {
    stages[v].assign(current.begin(), current.end());
    std::vector<const Ineq*> lower, upper;
    std::set<Ineq> next;
    for (const auto& q : stages[v]) {
      const int s = sgn(q.a[v]);
      if (s > 0) lower.push_back(&q);
      else if (s < 0) upper.push_back(&q);
      else next.insert(q);
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        // lo.a[v] > 0, up.a[v] < 0: combine to cancel v.
        const Rational wl = -up->a[v];
        const Rational wu = lo->a[v];
        Ineq q{std::vector<Rational>(d), wl * lo->b + wu * up->b};
        for (std::size_t k = 0; k < d; ++k) q.a[k] = wl * lo->a[k] + wu * up->a[k];
        q.a[v] = 0;
        if (is_trivial(q)) {
          if (q.b > 0) return std::nullopt;
          continue;
        }
        next.insert(normalize(std::move(q)));
      }
    }
    current = std::move(next);
  }
  for (const auto& q : current)
    if (is_trivial(q) && q.b > 0) return std::nullopt;

  std::vector<Rational> y(d);
  for (std::size_t v = 0; v < d; ++v) {
    std::optional<Rational> lo, up;
    for (const auto& q : stages[v]) {
      if (q.a[v] == 0) continue;
      Rational rest = q.b;
      for (std::size_t k = 0; k < v; ++k) rest -= q.a[k] * y[k];
      const Rational bound = rest / q.a[v];
      if (q.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!up || bound < *up) up = bound;
      }
    }
    if (lo && up && *lo > *up) throw NumericalError("Fourier-Motzkin back-substitution failed");
    y[v] = lo ? *lo : (up ? *up : Rational(0));
  }

  std::vector<Rational> x = x0;
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::size_t k = 0; k < d; ++k) x[j] += param(j, k) * y[k];
  return x;
}

}  // namespace crnkit
