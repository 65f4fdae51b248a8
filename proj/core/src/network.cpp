#include "crnkit/network.hpp"

#include "crnkit/graph.hpp"
#include "crnkit/linear_feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace crnkit {
namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (std::isalpha(static_cast<unsigned char>(s.front())) == 0 && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
  });
}

bool looks_numeric(std::string_view s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) != 0 || s.front() == '.' ||
                        s.front() == '-' || s.front() == '+');
}

// Parses "A1 + 2 A2", "2A1+A2", "3/2 B", "0".
Complex parse_complex(std::string_view text, const std::set<std::string, SymbolLess>& declared, int line) {
  std::string spaced;
  for (char c : text) {
    if (c == '+') spaced += " + ";
    else spaced += c;
  }
  const auto tokens = split_ws(spaced);
  Complex out;
  if (tokens.size() == 1 && (tokens[0] == "0" || tokens[0] == "\xE2\x88\x85")) return out;
  if (tokens.empty()) throw ParseError(line, "empty complex");
  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational coeff = 1;
    std::string name;
    const std::string& t = tokens[i];
    if (t == "+") throw ParseError(line, "misplaced '+' in complex");
    if (looks_numeric(t)) {
      std::size_t split = 0;
      while (split < t.size() && (std::isdigit(static_cast<unsigned char>(t[split])) != 0 || t[split] == '.' ||
                                  t[split] == '/'))
        ++split;
      try {
        coeff = parse_rational(t.substr(0, split));
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
      if (split < t.size()) {
        name = t.substr(split);
      } else {
        if (++i >= tokens.size()) throw ParseError(line, "coefficient without species");
        name = tokens[i];
      }
    } else {
      name = t;
    }
    if (!is_identifier(name)) throw ParseError(line, "bad species name '" + name + "'");
    if (declared.find(name) == declared.end()) throw ParseError(line, "unknown species '" + name + "'");
    if (coeff <= 0) throw ParseError(line, "stoichiometric coefficient must be positive");
    out[name] += coeff;
    ++i;
    if (i < tokens.size()) {
      if (tokens[i] != "+") throw ParseError(line, "expected '+' between complex terms, got '" + tokens[i] + "'");
      ++i;
      if (i == tokens.size()) throw ParseError(line, "trailing '+' in complex");
    }
  }
  return out;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void fail(int line, const std::string& message) {
  if (line > 0) throw ParseError(line, message);
  throw InputError(message);
}

}  // namespace

std::string complex_to_string(const Complex& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [s, v] : c) {
    if (!out.empty()) out += " + ";
    if (v != 1) out += to_string(v) + " ";
    out += s;
  }
  return out;
}

std::string rate_to_string(const RateValue& rate) {
  if (const auto* s = std::get_if<std::string>(&rate)) return *s;
  return to_string(std::get<Rational>(rate));
}

std::string order_to_string(const OrderValue& order) {
  if (const auto* s = std::get_if<std::string>(&order)) return *s;
  return to_string(std::get<Rational>(order));
}

Network::Network(std::string name, std::vector<std::string> species, std::vector<Reaction> reactions)
    : name_(std::move(name)), species_(std::move(species)), reactions_(std::move(reactions)) {
  std::set<std::string, SymbolLess> seen;
  for (const auto& s : species_) {
    if (!is_identifier(s)) throw InputError("bad species name '" + s + "'");
    if (!seen.insert(s).second) throw InputError("duplicate species '" + s + "'");
  }
  std::set<std::string> labels;
  for (const auto& rx : reactions_) {
    if (!labels.insert(rx.label).second) fail(rx.line, "duplicate reaction label '" + rx.label + "'");
    for (const Complex* c : {&rx.reactant, &rx.product})
      for (const auto& [s, v] : *c) {
        if (seen.find(s) == seen.end()) fail(rx.line, "unknown species '" + s + "'");
        if (v <= 0) fail(rx.line, "stoichiometric coefficient must be positive");
      }
    if (rx.reactant == rx.product) fail(rx.line, "reaction " + rx.label + " has identical reactant and product");
    if (const auto* rv = std::get_if<Rational>(&rx.rate); rv != nullptr && *rv <= 0)
      fail(rx.line, "rate constant of " + rx.label + " must be positive");
    if (rx.orders)
      for (const auto& [s, v] : *rx.orders)
        if (seen.find(s) == seen.end()) fail(rx.line, "kinetic order for unknown species '" + s + "'");
  }
  for (const auto& rx : reactions_) {
    for (const Complex* c : {&rx.reactant, &rx.product}) {
      auto it = std::find(complexes_.begin(), complexes_.end(), *c);
      const auto idx = static_cast<std::size_t>(it - complexes_.begin());
      if (it == complexes_.end()) complexes_.push_back(*c);
      (c == &rx.reactant ? reactant_idx_ : product_idx_).push_back(idx);
    }
  }
}

std::optional<std::size_t> Network::species_index(std::string_view name) const {
  for (std::size_t i = 0; i < species_.size(); ++i)
    if (species_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Network::reaction_index(std::string_view label) const {
  for (std::size_t i = 0; i < reactions_.size(); ++i)
    if (reactions_[i].label == label) return i;
  return std::nullopt;
}

std::vector<Rational> Network::complex_vector(const Complex& c) const {
  std::vector<Rational> out(species_.size());
  for (const auto& [s, v] : c) out[*species_index(s)] = v;
  return out;
}

std::vector<Rational> Network::reaction_vector(std::size_t reaction) const {
  auto out = complex_vector(reactions_[reaction].product);
  const auto from = complex_vector(reactions_[reaction].reactant);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= from[i];
  return out;
}

std::set<std::string, SymbolLess> Network::unbound_order_symbols() const {
  std::set<std::string, SymbolLess> out;
  for (const auto& rx : reactions_)
    if (rx.orders)
      for (const auto& [s, v] : *rx.orders)
        if (const auto* sym = std::get_if<std::string>(&v)) out.insert(*sym);
  return out;
}

std::set<std::string, SymbolLess> Network::rate_symbols() const {
  std::set<std::string, SymbolLess> out;
  for (const auto& rx : reactions_)
    if (const auto* sym = std::get_if<std::string>(&rx.rate)) out.insert(*sym);
  return out;
}

Network parse_network(std::string_view text) {
  std::string name = "unnamed";
  std::vector<std::string> species;
  std::set<std::string, SymbolLess> declared;
  std::vector<Reaction> reactions;
  std::set<std::string> labels;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line = trim(strip_comment(text.substr(pos, end - pos)));
    pos = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto words = split_ws(line);
    const std::string& directive = words.front();
    if (directive == "network") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'network <name>'");
      name = words[1];
    } else if (directive == "species") {
      if (words.size() < 2) throw ParseError(line_no, "species list is empty");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!is_identifier(words[i])) throw ParseError(line_no, "bad species name '" + words[i] + "'");
        if (!declared.insert(words[i]).second) throw ParseError(line_no, "duplicate species '" + words[i] + "'");
        species.push_back(words[i]);
      }
    } else if (directive == "reaction") {
      std::string body = trim(std::string_view(line).substr(directive.size()));
      const auto arrow = body.find("->");
      if (arrow == std::string::npos) throw ParseError(line_no, "reaction without '->'");
      Reaction rx;
      rx.line = line_no;
      const auto colon = body.find(':');
      if (colon != std::string::npos && colon < arrow) {
        rx.label = trim(std::string_view(body).substr(0, colon));
        if (!is_identifier(rx.label)) throw ParseError(line_no, "bad reaction label '" + rx.label + "'");
      } else {
        rx.label = "R" + std::to_string(reactions.size() + 1);
      }
      if (!labels.insert(rx.label).second) throw ParseError(line_no, "duplicate reaction label '" + rx.label + "'");
      const std::size_t lhs_begin = (colon != std::string::npos && colon < arrow) ? colon + 1 : 0;
      rx.reactant = parse_complex(std::string_view(body).substr(lhs_begin, arrow - lhs_begin), declared, line_no);

      const auto tail = split_ws(std::string_view(body).substr(arrow + 2));
      std::size_t i = 0;
      std::string product_text;
      while (i < tail.size() && tail[i] != "rate" && tail[i] != "orders") product_text += tail[i++] + " ";
      rx.product = parse_complex(product_text, declared, line_no);
      bool have_rate = false;
      while (i < tail.size()) {
        if (tail[i] == "rate") {
          if (have_rate) throw ParseError(line_no, "rate given twice");
          if (++i >= tail.size()) throw ParseError(line_no, "missing rate value");
          if (looks_numeric(tail[i])) {
            Rational v;
            try {
              v = parse_rational(tail[i]);
            } catch (const InputError& e) {
              throw ParseError(line_no, e.what());
            }
            if (v <= 0) throw ParseError(line_no, "rate constant must be positive");
            rx.rate = v;
          } else {
            if (!is_identifier(tail[i])) throw ParseError(line_no, "bad rate symbol '" + tail[i] + "'");
            rx.rate = tail[i];
          }
          have_rate = true;
          ++i;
        } else if (tail[i] == "orders") {
          if (rx.orders) throw ParseError(line_no, "orders given twice");
          rx.orders.emplace();
          ++i;
          while (i < tail.size() && tail[i] != "rate") {
            const auto eq = tail[i].find('=');
            if (eq == std::string::npos) throw ParseError(line_no, "expected Species=order, got '" + tail[i] + "'");
            const std::string sp = tail[i].substr(0, eq);
            const std::string val = tail[i].substr(eq + 1);
            if (declared.find(sp) == declared.end()) throw ParseError(line_no, "kinetic order for unknown species '" + sp + "'");
            if (val.empty()) throw ParseError(line_no, "missing kinetic order for " + sp);
            if (looks_numeric(val)) {
              try {
                (*rx.orders)[sp] = parse_rational(val);
              } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
              }
            } else {
              if (!is_identifier(val)) throw ParseError(line_no, "bad order symbol '" + val + "'");
              (*rx.orders)[sp] = val;
            }
            ++i;
          }
        } else {
          throw ParseError(line_no, "unexpected token '" + tail[i] + "'");
        }
      }
      if (!have_rate) rx.rate = "k" + std::to_string(reactions.size() + 1);
      if (rx.reactant == rx.product) throw ParseError(line_no, "reactant and product are identical");
      reactions.push_back(std::move(rx));
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
    if (end == text.size()) break;
  }
  if (species.empty()) throw ParseError(line_no, "no species declared");
  if (reactions.empty()) throw ParseError(line_no, "no reactions");
  return Network(std::move(name), std::move(species), std::move(reactions));
}

std::string format_network(const Network& net) {
  std::ostringstream os;
  os << "network " << net.name() << "\nspecies";
  for (const auto& s : net.species()) os << ' ' << s;
  os << '\n';
  for (const auto& rx : net.reactions()) {
    os << "reaction " << rx.label << ": " << complex_to_string(rx.reactant) << " -> "
       << complex_to_string(rx.product) << " rate " << rate_to_string(rx.rate);
    if (rx.orders) {
      os << " orders";
      for (const auto& [s, v] : *rx.orders) os << ' ' << s << '=' << order_to_string(v);
    }
    os << '\n';
  }
  return os.str();
}

Bindings parse_bindings(std::string_view text) {
  Bindings out;
  std::string cleaned;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    cleaned += strip_comment(text.substr(pos, end - pos)) + ' ';
    if (end == text.size()) break;
    pos = end + 1;
  }
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  for (const auto& tok : split_ws(cleaned)) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw InputError("bad binding '" + tok + "', expected name=value");
    const std::string name = tok.substr(0, eq);
    if (!is_identifier(name)) throw InputError("bad binding name '" + name + "'");
    out[name] = parse_rational(tok.substr(eq + 1));
  }
  return out;
}

Bindings merge_bindings(const Bindings& base, const Bindings& overrides) {
  Bindings out = base;
  for (const auto& [k, v] : overrides) out[k] = v;
  return out;
}

Network bind_orders(const Network& net, const Bindings& bindings) {
  std::vector<Reaction> reactions = net.reactions();
  for (auto& rx : reactions) {
    if (!rx.orders) continue;
    for (auto& [s, v] : *rx.orders)
      if (const auto* sym = std::get_if<std::string>(&v)) {
        auto it = bindings.find(*sym);
        if (it != bindings.end()) v = it->second;
      }
  }
  return Network(net.name(), net.species(), std::move(reactions));
}

Network subnetwork(const Network& net, std::span<const std::size_t> reactions, std::string name) {
  std::vector<bool> used(net.species_count(), false);
  std::vector<Reaction> picked;
  for (auto i : reactions) {
    if (i >= net.reaction_count()) throw InputError("reaction index out of range");
    const auto& rx = net.reactions()[i];
    for (const Complex* c : {&rx.reactant, &rx.product})
      for (const auto& [s, v] : *c) used[*net.species_index(s)] = true;
    if (rx.orders)
      for (const auto& [s, v] : *rx.orders) {
        const auto* num = std::get_if<Rational>(&v);
        if (num == nullptr || *num != 0) used[*net.species_index(s)] = true;
      }
    picked.push_back(rx);
  }
  std::vector<std::string> species;
  for (std::size_t j = 0; j < used.size(); ++j)
    if (used[j]) species.push_back(net.species()[j]);
  for (auto& rx : picked)
    if (rx.orders)
      for (auto it = rx.orders->begin(); it != rx.orders->end();) {
        if (std::find(species.begin(), species.end(), it->first) == species.end()) it = rx.orders->erase(it);
        else ++it;
      }
  return Network(name.empty() ? net.name() : std::move(name), std::move(species), std::move(picked));
}

NetworkMatrices build_matrices(const Network& net) {
  const std::size_t m = net.species_count(), n = net.complex_count(), r = net.reaction_count();
  NetworkMatrices out{ExactMatrix(m, n), ExactMatrix(n, r), ExactMatrix()};
  for (std::size_t c = 0; c < n; ++c) {
    const auto v = net.complex_vector(net.complexes()[c]);
    for (std::size_t s = 0; s < m; ++s) out.Y(s, c) = v[s];
  }
  for (std::size_t j = 0; j < r; ++j) {
    out.Ia(net.reactant_of(j), j) = -1;
    out.Ia(net.product_of(j), j) = 1;
  }
  out.N = out.Y * out.Ia;
  return out;
}

ExactMatrix kinetic_order_matrix(const Network& net) {
  const std::size_t m = net.species_count(), r = net.reaction_count();
  ExactMatrix F(r, m);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& rx = net.reactions()[i];
    if (!rx.orders) {
      const auto v = net.complex_vector(rx.reactant);
      for (std::size_t j = 0; j < m; ++j) F(i, j) = v[j];
      continue;
    }
    for (const auto& [s, v] : *rx.orders) {
      const auto* num = std::get_if<Rational>(&v);
      if (num == nullptr)
        throw InputError("kinetic order symbol '" + std::get<std::string>(v) + "' of " + rx.label + " is unbound");
      F(i, *net.species_index(s)) = *num;
    }
  }
  return F;
}

std::vector<std::vector<Polynomial>> kinetic_order_polynomials(const Network& net) {
  const std::size_t m = net.species_count(), r = net.reaction_count();
  std::vector<std::vector<Polynomial>> F(r, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < r; ++i) {
    const auto& rx = net.reactions()[i];
    if (!rx.orders) {
      const auto v = net.complex_vector(rx.reactant);
      for (std::size_t j = 0; j < m; ++j) F[i][j] = Polynomial(v[j]);
      continue;
    }
    for (const auto& [s, v] : *rx.orders) {
      const std::size_t j = *net.species_index(s);
      if (const auto* num = std::get_if<Rational>(&v)) F[i][j] = Polynomial(*num);
      else F[i][j] = Polynomial::variable(std::get<std::string>(v));
    }
  }
  return F;
}

std::vector<std::size_t> reactant_complexes(const Network& net) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    if (std::find(out.begin(), out.end(), net.reactant_of(j)) == out.end()) out.push_back(net.reactant_of(j));
  return out;
}

namespace {

std::vector<Edge> complex_edges(const Network& net) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < net.reaction_count(); ++j) edges.emplace_back(net.reactant_of(j), net.product_of(j));
  return edges;
}

}  // namespace

NetworkNumbers network_numbers(const Network& net) {
  NetworkNumbers out;
  out.m = net.species_count();
  out.n = net.complex_count();
  out.r = net.reaction_count();
  out.n_r = reactant_complexes(net).size();
  for (std::size_t i = 0; i < out.r; ++i)
    for (std::size_t j = i + 1; j < out.r; ++j)
      if (net.reactant_of(i) == net.product_of(j) && net.product_of(i) == net.reactant_of(j)) ++out.r_rev;
  out.r_irrev = out.r - 2 * out.r_rev;
  const auto edges = complex_edges(net);
  out.linkage_classes = component_count(weak_components(out.n, edges));
  const auto strong = strong_components(out.n, edges);
  out.strong_linkage_classes = component_count(strong);
  const auto terminal = terminal_components(out.n, edges, strong);
  out.terminal_classes = static_cast<std::size_t>(std::count(terminal.begin(), terminal.end(), true));
  out.s = build_matrices(net).N.rank();
  out.deficiency = static_cast<long>(out.n) - static_cast<long>(out.linkage_classes) - static_cast<long>(out.s);
  return out;
}

StructuralFlags structural_flags(const Network& net) {
  StructuralFlags out;
  const auto mats = build_matrices(net);
  const auto numbers = network_numbers(net);
  const auto edges = complex_edges(net);
  const auto strong = strong_components(net.complex_count(), edges);
  out.weakly_reversible = std::all_of(edges.begin(), edges.end(),
                                      [&](const Edge& e) { return strong[e.first] == strong[e.second]; });

  const std::size_t m = net.species_count(), r = net.reaction_count();
  {
    std::vector<LinearConstraint> cs;
    for (std::size_t j = 0; j < r; ++j) cs.push_back({mats.N.column(j), 0, LinearConstraint::Kind::Equal});
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> e(m);
      e[i] = 1;
      cs.push_back({e, 1, LinearConstraint::Kind::GreaterEq});
    }
    if (auto w = find_feasible_point(m, cs)) {
      out.conservative = true;
      out.conservation_certificate = *w;
    }
  }
  {
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < m; ++i) cs.push_back({mats.N.row(i), 0, LinearConstraint::Kind::Equal});
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rational> e(r);
      e[j] = 1;
      cs.push_back({e, 1, LinearConstraint::Kind::GreaterEq});
    }
    if (auto v = find_feasible_point(r, cs)) {
      out.positive_dependent = true;
      out.dependence_certificate = *v;
    }
  }
  {
    const auto linkage = weak_components(net.complex_count(), edges);
    std::vector<std::vector<std::size_t>> parts(component_count(linkage));
    for (std::size_t j = 0; j < r; ++j) parts[linkage[net.reactant_of(j)]].push_back(j);
    std::size_t sum = 0;
    for (const auto& part : parts) sum += mats.N.select_columns(part).rank();
    out.independent_linkage_classes = sum == numbers.s;
  }
  out.maximally_closed = numbers.s + 1 == m;
  out.high_reactant_diversity = numbers.n_r > numbers.s;
  return out;
}

PowerLawSystem::PowerLawSystem(const Network& net, const Bindings& bindings)
    : m_(net.species_count()), r_(net.reaction_count()), species_(net.species()) {
  for (const auto& rx : net.reactions()) {
    if (const auto* v = std::get_if<Rational>(&rx.rate)) {
      rates_.push_back(*v);
    } else {
      const auto& sym = std::get<std::string>(rx.rate);
      auto it = bindings.find(sym);
      if (it == bindings.end()) throw InputError("rate symbol '" + sym + "' is unbound");
      if (it->second <= 0) throw InputError("rate '" + sym + "' must be positive");
      rates_.push_back(it->second);
    }
    rates_d_.push_back(rates_.back().get_d());
  }
  orders_ = kinetic_order_matrix(bind_orders(net, bindings));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < m_; ++j) {
      const Rational& f = orders_(i, j);
      orders_d_.push_back(f.get_d());
      if (f == 0) {
        order_kind_.push_back(OrderKind::Zero);
        int_order_.push_back(0);
      } else if (is_integer(f) && f.get_num().fits_slong_p()) {
        order_kind_.push_back(f > 0 ? OrderKind::NonNegInt : OrderKind::NegInt);
        int_order_.push_back(f.get_num().get_si());
      } else {
        order_kind_.push_back(OrderKind::Fractional);
        int_order_.push_back(0);
      }
    }
  N_ = build_matrices(net).N;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < r_; ++j)
      if (N_(i, j) != 0) n_entries_.push_back({i, j, N_(i, j), N_(i, j).get_d()});
}

std::vector<Rational> PowerLawSystem::rhs_exact(std::span<const Rational> x) const {
  if (x.size() != m_) throw InputError("state length does not match species count");
  std::vector<Rational> k(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Rational v = rates_[i];
    for (std::size_t j = 0; j < m_; ++j) {
      const std::size_t at = i * m_ + j;
      switch (order_kind_[at]) {
        case OrderKind::Zero:
          break;
        case OrderKind::NonNegInt:
          for (long e = 0; e < int_order_[at]; ++e) v *= x[j];
          break;
        case OrderKind::NegInt:
          if (x[j] == 0) throw DomainError("negative power of zero concentration of " + species_[j]);
          for (long e = 0; e < -int_order_[at]; ++e) v /= x[j];
          break;
        case OrderKind::Fractional:
          throw UnsupportedError("exact evaluation needs integer kinetic orders");
      }
    }
    k[i] = v;
  }
  std::vector<Rational> out(m_);
  for (const auto& e : n_entries_) out[e.row] += e.exact * k[e.col];
  return out;
}

std::vector<double> ode_rhs(const Network& net, const Bindings& bindings, std::span<const double> x) {
  return PowerLawSystem(net, bindings).rhs<double>(x);
}

}  // namespace crnkit
