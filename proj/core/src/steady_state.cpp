#include "crnkit/steady_state.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/graph.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <random>
#include <sstream>

namespace crnkit {

using Real50 = boost::multiprecision::cpp_bin_float_50;

std::vector<Rational> parse_species_vector(const Network& net, std::string_view text) {
  std::vector<Rational> out(net.species_count());
  std::string s;
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c)) == 0) s += c;
  if (s.empty() || s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) != 0 || s[i] == '.' || s[i] == '/')) ++i;
    const Rational coeff = i > start ? parse_rational(s.substr(start, i - start)) : Rational(1);
    start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) != 0 || s[i] == '_')) ++i;
    const std::string name = s.substr(start, i - start);
    auto idx = net.species_index(name);
    if (!idx) throw InputError("unknown species '" + name + "' in offset '" + std::string(text) + "'");
    out[*idx] += sign * coeff;
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw InputError("malformed offset '" + std::string(text) + "'");
  }
  return out;
}

std::vector<ReactionShift> uniform_shifts(const Network& net, const std::map<std::string, std::string>& by_label) {
  std::vector<ReactionShift> out(net.reaction_count(),
                                 {std::vector<Rational>(net.species_count()), std::vector<Rational>(net.species_count())});
  for (const auto& [label, text] : by_label) {
    auto j = net.reaction_index(label);
    if (!j) continue;
    const auto v = parse_species_vector(net, text);
    out[*j] = {v, v};
  }
  return out;
}

std::string TranslatedNetwork::node_name(std::size_t i) const {
  Complex c;
  for (std::size_t s = 0; s < species.size(); ++s)
    if (nodes[i].complex[s] != 0) c[species[s]] = nodes[i].complex[s];
  return complex_to_string(c);
}

TranslatedNetwork translate(const Network& subnet, const std::vector<ReactionShift>& shifts) {
  const std::size_t m = subnet.species_count(), r = subnet.reaction_count();
  if (!shifts.empty() && shifts.size() != r) throw InputError("one shift per reaction is required");
  const ExactMatrix F = kinetic_order_matrix(subnet);
  TranslatedNetwork tn;
  tn.species = subnet.species();
  auto node_of = [&](const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < tn.nodes.size(); ++i)
      if (tn.nodes[i].complex == v) return i;
    tn.nodes.push_back({v, std::vector<Rational>(m), false});
    return tn.nodes.size() - 1;
  };
  for (std::size_t j = 0; j < r; ++j) {
    const auto& rx = subnet.reactions()[j];
    auto from = subnet.complex_vector(rx.reactant);
    auto to = subnet.complex_vector(rx.product);
    if (!shifts.empty()) {
      const auto& sh = shifts[j];
      if (sh.reactant_offset.size() != m || sh.product_offset.size() != m)
        throw InputError("shift length does not match species count");
      const bool preserved = sh.reactant_offset == sh.product_offset;
      tn.stoichiometry_preserved.push_back(preserved);
      if (!preserved) throw InputError("translation of " + rx.label + " does not preserve stoichiometry");
      for (std::size_t s = 0; s < m; ++s) {
        from[s] += sh.reactant_offset[s];
        to[s] += sh.product_offset[s];
      }
    } else {
      tn.stoichiometry_preserved.push_back(true);
    }
    for (std::size_t s = 0; s < m; ++s)
      if (from[s] < 0 || to[s] < 0) throw InputError("translation of " + rx.label + " gives a negative coefficient");
    const std::size_t a = node_of(from);
    const std::size_t b = node_of(to);
    auto& node = tn.nodes[a];
    const auto kin = F.row(j);
    if (node.has_kinetic && node.kinetic != kin)
      throw UnsupportedError("translated node " + tn.node_name(a) + " carries two kinetic-order vectors");
    node.kinetic = kin;
    node.has_kinetic = true;
    Polynomial rate = std::holds_alternative<std::string>(rx.rate)
                          ? Polynomial::variable(std::get<std::string>(rx.rate))
                          : Polynomial(std::get<Rational>(rx.rate));
    tn.edges.push_back({a, b, std::move(rate), rx.label});
  }
  std::vector<Edge> edges;
  for (const auto& e : tn.edges) edges.emplace_back(e.from, e.to);
  const auto strong = strong_components(tn.nodes.size(), edges);
  tn.weakly_reversible =
      std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return strong[e.first] == strong[e.second]; });
  const std::size_t linkage = component_count(weak_components(tn.nodes.size(), edges));
  const std::size_t s = build_matrices(subnet).N.rank();
  tn.deficiency = static_cast<long>(tn.nodes.size()) - static_cast<long>(linkage) - static_cast<long>(s);
  if (!tn.weakly_reversible) throw InputError("translated network is not weakly reversible");
  if (tn.deficiency != 0)
    throw InputError("translated network has deficiency " + std::to_string(tn.deficiency) + ", not zero");
  return tn;
}

std::vector<Polynomial> tree_constants(std::size_t nodes, const std::vector<TranslatedEdge>& edges) {
  std::vector<Edge> plain;
  for (const auto& e : edges) plain.emplace_back(e.from, e.to);
  const auto comp = weak_components(nodes, plain);
  std::vector<std::vector<std::size_t>> out_edges(nodes);
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (edges[k].from != edges[k].to) out_edges[edges[k].from].push_back(k);

  std::vector<Polynomial> K(nodes);
  for (std::size_t root = 0; root < nodes; ++root) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < nodes; ++v)
      if (comp[v] == comp[root] && v != root) members.push_back(v);
    std::vector<std::size_t> parent(nodes, nodes);
    Polynomial sum;
    // Each non-root member picks one outgoing edge; keep choices whose
    // pointer chains all reach the root.
    std::function<void(std::size_t, const Polynomial&)> choose = [&](std::size_t at, const Polynomial& weight) {
      if (at == members.size()) {
        for (auto v : members) {
          std::size_t cur = v;
          std::size_t steps = 0;
          while (cur != root && steps <= members.size()) {
            cur = parent[cur];
            ++steps;
          }
          if (cur != root) return;
        }
        sum += weight;
        return;
      }
      const std::size_t v = members[at];
      for (auto k : out_edges[v]) {
        parent[v] = edges[k].to;
        choose(at + 1, weight * edges[k].rate);
      }
      parent[v] = nodes;
    };
    choose(0, Polynomial(1));
    K[root] = sum;
  }
  return K;
}

std::vector<Polynomial> tree_constants(const TranslatedNetwork& tn) { return tree_constants(tn.nodes.size(), tn.edges); }

ParametrizationMatrices parametrization_matrices(const TranslatedNetwork& tn,
                                                 const std::vector<std::string>& preferred_free) {
  const std::size_t m = tn.species.size();
  const std::size_t n = tn.nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!tn.nodes[i].has_kinetic) throw InputError("translated node " + tn.node_name(i) + " has no outgoing reaction");

  ParametrizationMatrices pm;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& e : tn.edges) {
        std::size_t w = n;
        if (e.from == u) w = e.to;
        else if (e.to == u) w = e.from;
        if (w == n || seen[w]) continue;
        seen[w] = true;
        pm.tree_edges.emplace_back(u, w);
        queue.push_back(w);
      }
    }
  }

  const std::size_t t = pm.tree_edges.size();
  pm.M = ExactMatrix(t, m);
  const auto K = tree_constants(tn);
  for (std::size_t e = 0; e < t; ++e) {
    const auto [parent, child] = pm.tree_edges[e];
    for (std::size_t s = 0; s < m; ++s) pm.M(e, s) = tn.nodes[child].kinetic[s] - tn.nodes[parent].kinetic[s];
    pm.kappa.push_back(LogMonomial::from_polynomial(K[child]) / LogMonomial::from_polynomial(K[parent]));
  }

  // Pivot (dependent) species are drawn from the non-preferred ones first.
  std::vector<std::size_t> order;
  auto preferred = [&](std::size_t s) {
    return std::find(preferred_free.begin(), preferred_free.end(), tn.species[s]) != preferred_free.end();
  };
  for (std::size_t s = 0; s < m; ++s)
    if (!preferred(s)) order.push_back(s);
  for (std::size_t s = 0; s < m; ++s)
    if (preferred(s)) order.push_back(s);
  std::vector<std::size_t> J;
  for (auto p : pm.M.select_columns(order).rref().pivots) J.push_back(order[p]);
  std::sort(J.begin(), J.end());
  for (std::size_t s = 0; s < m; ++s)
    if (std::find(J.begin(), J.end(), s) == J.end()) pm.free_species.push_back(s);

  const ExactMatrix MJ = pm.M.select_columns(J);
  const std::vector<std::size_t> I = MJ.transpose().rref().pivots;
  const ExactMatrix inv = J.empty() ? ExactMatrix() : MJ.select_rows(I).inverse();

  pm.H = ExactMatrix(m, t);
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < I.size(); ++b) pm.H(J[a], I[b]) = inv(a, b);
  pm.B = ExactMatrix(m, pm.free_species.size());
  for (std::size_t l = 0; l < pm.free_species.size(); ++l) {
    const std::size_t f = pm.free_species[l];
    pm.B(f, l) = 1;
    for (std::size_t a = 0; a < J.size(); ++a) {
      Rational v = 0;
      for (std::size_t b = 0; b < I.size(); ++b) v += inv(a, b) * pm.M(I[b], f);
      pm.B(J[a], l) = -v;
    }
  }
  if (!(pm.M * pm.H * pm.M == pm.M)) throw NumericalError("generalized inverse check M H M = M failed");
  if (!(pm.M * pm.B).is_zero()) throw NumericalError("kernel check M B = 0 failed");
  return pm;
}

namespace {

std::vector<std::string> default_parameter_names(std::size_t d) {
  if (d == 1) return {"tau"};
  std::vector<std::string> out;
  for (std::size_t l = 0; l < d; ++l) out.push_back("tau" + std::to_string(l + 1));
  return out;
}

void add_condition(std::vector<LogMonomial>& conditions, const LogMonomial& c) {
  if (c.is_one()) return;
  if (c.is_numeric()) throw EmptyIntersectionError("steady-state sets do not intersect: " + c.condition_string());
  const LogMonomial inv = LogMonomial().operator/(c);
  for (const auto& existing : conditions)
    if (existing == c || existing == inv) return;
  conditions.push_back(c);
}

}  // namespace

MonomialParametrization parametrize(const TranslatedNetwork& tn, const std::vector<std::string>& preferred_free) {
  const auto pm = parametrization_matrices(tn, preferred_free);
  MonomialParametrization out;
  out.species = tn.species;
  for (std::size_t j = 0; j < tn.species.size(); ++j) {
    LogMonomial c;
    for (std::size_t e = 0; e < pm.kappa.size(); ++e)
      if (pm.H(j, e) != 0) c *= pm.kappa[e].pow(pm.H(j, e));
    out.coefficients.push_back(std::move(c));
  }
  out.exponents = pm.B;
  out.parameter_names = default_parameter_names(pm.free_species.size());
  for (auto f : pm.free_species) out.parameter_species.push_back(tn.species[f]);
  const ExactMatrix W = pm.M.left_kernel();
  for (std::size_t w = 0; w < W.rows(); ++w) {
    LogMonomial c;
    for (std::size_t e = 0; e < pm.kappa.size(); ++e)
      if (W(w, e) != 0) c *= pm.kappa[e].pow(W(w, e));
    add_condition(out.conditions, c);
  }
  return out;
}

std::optional<std::size_t> MonomialParametrization::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < species.size(); ++j)
    if (species[j] == name) return j;
  return std::nullopt;
}

MonomialParametrization merge(const std::vector<MonomialParametrization>& parts,
                              const std::vector<std::string>& all_species) {
  if (parts.empty()) throw InputError("nothing to merge");
  std::vector<std::size_t> base;
  std::size_t D = 0;
  for (const auto& p : parts) {
    base.push_back(D);
    D += p.parameter_count();
  }

  struct Row {
    std::vector<Rational> a;
    LogMonomial c;
  };
  std::vector<Row> rows;
  std::vector<std::pair<std::size_t, std::size_t>> first(all_species.size());
  for (std::size_t j = 0; j < all_species.size(); ++j) {
    std::vector<std::pair<std::size_t, std::size_t>> occ;
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (auto idx = parts[p].index_of(all_species[j])) occ.emplace_back(p, *idx);
    if (occ.empty()) throw InputError("species " + all_species[j] + " is not covered by any part");
    first[j] = occ.front();
    const auto [p0, i0] = occ.front();
    for (std::size_t k = 1; k < occ.size(); ++k) {
      const auto [q, iq] = occ[k];
      Row row{std::vector<Rational>(D), parts[q].coefficients[iq] / parts[p0].coefficients[i0]};
      for (std::size_t l = 0; l < parts[p0].parameter_count(); ++l) row.a[base[p0] + l] += parts[p0].exponents(i0, l);
      for (std::size_t l = 0; l < parts[q].parameter_count(); ++l) row.a[base[q] + l] -= parts[q].exponents(iq, l);
      rows.push_back(std::move(row));
    }
  }

  // Gauss-Jordan with pivots taken from the last parameter backwards.
  std::vector<std::size_t> pivot_row_of(D, rows.size());
  std::size_t r = 0;
  for (std::size_t col = D; col-- > 0;) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].a[col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r].a[col];
    for (auto& v : rows[r].a) v /= lead;
    rows[r].c = rows[r].c.pow(Rational(1) / lead);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k].a[col] == 0) continue;
      const Rational f = rows[k].a[col];
      for (std::size_t c = 0; c < D; ++c) rows[k].a[c] -= f * rows[r].a[c];
      rows[k].c /= rows[r].c.pow(f);
    }
    pivot_row_of[col] = r;
    ++r;
  }

  MonomialParametrization out;
  out.species = all_species;
  for (const auto& p : parts)
    for (const auto& c : p.conditions) add_condition(out.conditions, c);
  for (std::size_t k = r; k < rows.size(); ++k) add_condition(out.conditions, rows[k].c);

  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < D; ++v)
    if (pivot_row_of[v] == rows.size()) free_vars.push_back(v);
  const std::size_t d = free_vars.size();

  // u_v = offset + coeffs . t
  struct Affine {
    LogMonomial offset;
    std::vector<Rational> coeffs;
  };
  std::vector<Affine> u(D, Affine{LogMonomial(), std::vector<Rational>(d)});
  for (std::size_t f = 0; f < d; ++f) u[free_vars[f]].coeffs[f] = 1;
  for (std::size_t v = 0; v < D; ++v) {
    if (pivot_row_of[v] == rows.size()) continue;
    const Row& row = rows[pivot_row_of[v]];
    u[v].offset = row.c;
    for (std::size_t f = 0; f < d; ++f) u[v].coeffs[f] = -row.a[free_vars[f]];
  }

  out.exponents = ExactMatrix(all_species.size(), d);
  for (std::size_t j = 0; j < all_species.size(); ++j) {
    const auto [p, i] = first[j];
    LogMonomial c = parts[p].coefficients[i];
    for (std::size_t l = 0; l < parts[p].parameter_count(); ++l) {
      const Rational& e = parts[p].exponents(i, l);
      if (e == 0) continue;
      const Affine& a = u[base[p] + l];
      c *= a.offset.pow(e);
      for (std::size_t f = 0; f < d; ++f) out.exponents(j, f) += e * a.coeffs[f];
    }
    out.coefficients.push_back(std::move(c));
  }
  out.parameter_names = default_parameter_names(d);
  for (std::size_t f = 0; f < d; ++f) {
    std::size_t p = 0;
    while (p + 1 < parts.size() && base[p + 1] <= free_vars[f]) ++p;
    std::string s = parts[p].parameter_species[free_vars[f] - base[p]];
    if (!s.empty()) {
      const auto j = std::find(all_species.begin(), all_species.end(), s) - all_species.begin();
      bool unit = out.coefficients[j].is_one();
      for (std::size_t g = 0; g < d && unit; ++g) unit = out.exponents(j, g) == (g == f ? 1 : 0);
      if (!unit) s.clear();
    }
    out.parameter_species.push_back(s);
  }
  return out;
}

bool MonomialParametrization::equivalent(const MonomialParametrization& other) const {
  if (species != other.species || exponents.cols() != other.exponents.cols()) return false;
  if (conditions.size() != other.conditions.size()) return false;
  for (const auto& c : conditions) {
    const LogMonomial inv = LogMonomial() / c;
    if (std::none_of(other.conditions.begin(), other.conditions.end(),
                     [&](const LogMonomial& o) { return o == c || o == inv; }))
      return false;
  }
  if (!same_column_space(exponents, other.exponents)) return false;
  std::set<Atom, AtomLess> atoms;
  for (const auto* p : {this, &other})
    for (const auto& c : p->coefficients)
      for (const auto& [a, e] : c.atoms()) atoms.insert(a);
  const std::size_t rank = exponents.rank();
  for (const auto& a : atoms) {
    ExactMatrix diff(species.size(), 1);
    for (std::size_t j = 0; j < species.size(); ++j)
      diff(j, 0) = coefficients[j].exponent_of(a) - other.coefficients[j].exponent_of(a);
    if (diff.is_zero()) continue;
    if (exponents.append_columns(diff).rank() != rank) return false;
  }
  return true;
}

std::string MonomialParametrization::expression(std::size_t j) const {
  std::string out = coefficients[j].to_string();
  bool any = false;
  std::string taus;
  for (std::size_t l = 0; l < exponents.cols(); ++l) {
    const Rational& e = exponents(j, l);
    if (e == 0) continue;
    if (any) taus += "*";
    taus += parameter_names[l];
    if (e != 1) taus += "^(" + crnkit::to_string(e) + ")";
    any = true;
  }
  if (!any) return out;
  if (coefficients[j].is_one()) return taus;
  const bool wrap = out.find('/') != std::string::npos && out.front() != '(';
  return (wrap ? "(" + out + ")" : out) + " * " + taus;
}

std::string MonomialParametrization::to_text() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < species.size(); ++j) os << species[j] << " = " << expression(j) << '\n';
  for (const auto& c : conditions) os << "condition: " << c.condition_string() << '\n';
  return os.str();
}

NetworkParametrization parametrize_network(const Network& net, const Decomposition& decomposition,
                                           const ParametrizeOptions& options) {
  if (!decomposition.independent())
    throw UnsupportedError("decomposition is not independent; subnetwork steady states need not intersect");
  NetworkParametrization out;
  out.decomposition = decomposition;
  for (const auto& part : decomposition.parts) {
    const Network sub = subnetwork(net, part);
    out.translated.push_back(translate(sub, uniform_shifts(sub, options.shifts)));
    out.parts.push_back(parametrize(out.translated.back(), options.preferred_free));
  }
  out.merged = merge(out.parts, net.species());
  return out;
}

namespace {

Rational rational_from_real(const Real50& v) { return parse_rational(v.str(45, std::ios_base::scientific)); }

}  // namespace

ResidualReport verify_parametrization(const Network& net, const MonomialParametrization& param, std::size_t trials,
                                      std::uint64_t seed, const Bindings& fixed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(-2.0, 2.0);
  const auto symbols = net.rate_symbols();
  std::vector<std::size_t> to_net(param.species.size());
  for (std::size_t j = 0; j < param.species.size(); ++j) {
    auto idx = net.species_index(param.species[j]);
    if (!idx) throw InputError("parametrized species " + param.species[j] + " is not in the network");
    to_net[j] = *idx;
  }
  ResidualReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    Bindings rates = fixed;
    std::map<std::string, Real50, SymbolLess> values;
    for (const auto& s : symbols) {
      if (rates.find(s) == rates.end()) rates[s] = rational_from_double(std::pow(10.0, exponent(rng)));
      values[s] = to_real<Real50>(rates[s]);
    }
    // Satisfy each condition by solving for its last free symbol.
    for (const auto& c : param.conditions) {
      const Atom* target = nullptr;
      Rational target_e;
      for (const auto& [a, e] : c.atoms())
        if (a.kind == Atom::Kind::Symbol && fixed.find(a.symbol) == fixed.end()) {
          target = &a;
          target_e = e;
        }
      if (target == nullptr) throw UnsupportedError("cannot sample rates satisfying " + c.condition_string());
      LogMonomial rest = c / LogMonomial::symbol(target->symbol).pow(target_e);
      const Real50 other = rest.evaluate<Real50>([&](const std::string& s) { return values.at(s); });
      using boost::multiprecision::pow;
      const Real50 v = pow(other, Real50(-1) / to_real<Real50>(target_e));
      rates[target->symbol] = rational_from_real(v);
      values[target->symbol] = to_real<Real50>(rates[target->symbol]);
    }
    std::vector<Real50> tau(param.parameter_count());
    for (auto& x : tau) x = Real50(std::pow(10.0, exponent(rng)));
    const auto local = param.evaluate<Real50>([&](const std::string& s) { return values.at(s); },
                                              std::span<const Real50>(tau));
    std::vector<Real50> x(net.species_count(), Real50(1));
    for (std::size_t j = 0; j < local.size(); ++j) x[to_net[j]] = local[j];
    const PowerLawSystem sys(net, rates);
    const auto f = sys.rhs<Real50>(std::span<const Real50>(x));
    const auto k = sys.fluxes<Real50>(std::span<const Real50>(x));
    Real50 fmax = 0, kmax = 0;
    for (const auto& v : f) fmax = std::max(fmax, Real50(abs(v)));
    for (const auto& v : k) kmax = std::max(kmax, Real50(abs(v)));
    report.max_abs_residual = std::max(report.max_abs_residual, static_cast<double>(fmax));
    if (kmax > 0) report.max_rel_residual = std::max(report.max_rel_residual, static_cast<double>(fmax / kmax));
    ++report.trials;
  }
  return report;
}

ExistenceReport existence_report(const Network& net, const NetworkParametrization& param) {
  ExistenceReport out;
  out.independent = param.decomposition.independent();
  if (!out.independent) throw UnsupportedError("decomposition is not independent");
  out.t_hat_partition = param.decomposition.parts;
  out.t_hat_independent = verify_t_hat_independence(net, out.t_hat_partition).independent;
  if (!out.t_hat_independent) {
    out.t_hat_partition = merge_shared_reactants(net, out.t_hat_partition);
    out.t_hat_independent = verify_independence(net, out.t_hat_partition).independent &&
                            verify_t_hat_independence(net, out.t_hat_partition).independent;
  }
  out.exists_for_all_rates = param.merged.conditions.empty();
  for (const auto& c : param.merged.conditions) out.conditions.push_back(c.condition_string());
  if (out.exists_for_all_rates) {
    out.verdict = "exists for all rate constants";
  } else {
    out.verdict = "exists iff ";
    for (std::size_t i = 0; i < out.conditions.size(); ++i) out.verdict += (i ? " and " : "") + out.conditions[i];
  }
  return out;
}

}  // namespace crnkit
