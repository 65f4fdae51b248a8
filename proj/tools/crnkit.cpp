// crnkit command-line front end. Every subcommand builds one JSON report and
// prints it either as JSON (--json) or as indented text rendered from it.

#include "report.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/models.hpp"
#include "crnkit/orders.hpp"
#include "crnkit/reduction.hpp"
#include "crnkit/simulation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace crnkit;
using report::Json;

namespace {

enum ExitCode { kOk = 0, kOther = 1, kInput = 2, kUnsupported = 3, kNumerical = 4 };

struct CommonOptions {
  std::string builtin;
  std::string file;
  std::string bind;
  std::string orders;
  std::string preset;
  std::vector<std::string> shifts;
  std::string free = "A2,A4";
  bool json = false;
  std::string out;
};

struct Loaded {
  Network net;
  Network bound;
  Bindings bindings;
  ParametrizeOptions options;
  report::Inputs inputs;
  std::string model_id;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(to_double(parse_rational(s)));
  return out;
}

Loaded load(const CommonOptions& o) {
  if (o.builtin.empty() == o.file.empty()) throw InputError("give exactly one of --builtin or --file");
  Loaded l;
  if (!o.builtin.empty()) {
    const auto& m = builtin_model(o.builtin);
    l.model_id = m.id;
    l.inputs.source = "builtin:" + m.id;
    l.inputs.network_text = m.text;
    l.bindings = m.default_rates;
    l.options.shifts = m.shifts;
  } else {
    l.inputs.source = o.file;
    l.inputs.network_text = read_file(o.file);
  }
  l.net = parse_network(l.inputs.network_text);
  if (!o.preset.empty()) l.bindings = merge_bindings(l.bindings, order_preset(o.preset).orders.to_bindings());
  if (!o.orders.empty()) l.bindings = merge_bindings(l.bindings, parse_bindings(o.orders));
  if (!o.bind.empty())
    l.bindings = merge_bindings(l.bindings, parse_bindings(o.bind[0] == '@' ? read_file(o.bind.substr(1)) : o.bind));
  for (const auto& s : o.shifts) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw InputError("--shift expects LABEL=OFFSET, got '" + s + "'");
    l.options.shifts[s.substr(0, eq)] = s.substr(eq + 1);
  }
  l.options.preferred_free = split(o.free, ',');
  l.bound = bind_orders(l.net, l.bindings);
  l.inputs.bindings = l.bindings;
  return l;
}

void write_out(const CommonOptions& o, const std::string& name, const std::string& content) {
  if (o.out.empty()) return;
  fs::create_directories(o.out);
  std::ofstream f(fs::path(o.out) / name, std::ios::binary);
  if (!f) throw InputError("cannot write " + (fs::path(o.out) / name).string());
  f << content;
}

void emit(const CommonOptions& o, const Json& doc) {
  const std::string json = report::dump(doc);
  write_out(o, "report.json", json);
  std::cout << (o.json ? json : report::render_text(doc));
}

Rational required_total(const std::string& total) {
  if (total.empty()) throw InputError("--total is required");
  const Rational t = parse_rational(total);
  if (t <= 0) throw InputError("--total must be positive");
  return t;
}

void add_common(CLI::App* sub, CommonOptions& o, bool network = true) {
  if (network) {
    sub->add_option("--builtin", o.builtin, "Builtin model id (doc, dac, doc-dac)");
    sub->add_option("--file", o.file, "Network description file");
    sub->add_option("--bind", o.bind, "Bindings, e.g. k1=0.5,k2=0.8 or @file");
    sub->add_option("--orders", o.orders, "Kinetic orders, e.g. p1=3/2,q1=1");
    sub->add_option("--preset", o.preset, "Order preset name");
    sub->add_option("--shift", o.shifts, "Translation offset LABEL=OFFSET (repeatable)");
    sub->add_option("--free", o.free, "Preferred free species for the parametrization")->capture_default_str();
  }
  sub->add_flag("--json", o.json, "Print JSON instead of text");
  sub->add_option("--out", o.out, "Directory for report.json and CSV files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural and numerical analysis of power-law reaction networks"};
  app.set_version_flag("--version", report::kToolVersion);
  app.require_subcommand(1);

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  CommonOptions o;
  int status = kOk;
  std::string total, region, x0, method = "dp", check;
  std::vector<std::string> x0_sets;
  std::string models = "doc,dac,doc-dac";
  std::string presets = "positive,negative,pnull,qnull";
  double t_end = SimSettings{}.t_end, step = SimSettings{}.step, perturbation = 1e-3;
  std::size_t curve_points = 400;
  std::string builtin_action = "list", builtin_id;

  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<void()> fn, bool network = true) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o, network);
    handlers.emplace_back(s, std::move(fn));
    return s;
  };

  sub("analyze", "Network numbers and structural flags", [&] {
    const auto l = load(o);
    emit(o, report::document(command, l.inputs, report::analyze(l.net)));
  });
  sub("decompose", "Finest independent decomposition with rank checks", [&] {
    const auto l = load(o);
    emit(o, report::document(command, l.inputs, report::decompose(l.bound)));
  });
  sub("parametrize", "Monomial steady-state parametrization and existence", [&] {
    const auto l = load(o);
    emit(o, report::document(command, l.inputs, report::parametrize(l.bound, l.options)));
  });
  sub("classify", "Regime of the land-atmosphere orders", [&] {
    const auto l = load(o);
    emit(o, report::document(command, l.inputs, report::classify(RegimeOrders::from_bindings(l.bindings))));
  });
  sub("multistationarity", "Sign test, injectivity determinant and verdict", [&] {
    const auto l = load(o);
    Json result = report::multistationarity(l.bound, RegimeOrders::from_bindings(l.bindings));
    if (result["verdict"] == to_string(Stationarity::Unsupported)) status = kUnsupported;
    emit(o, report::document(command, l.inputs, std::move(result)));
  });
  sub("acr", "Absolute concentration robustness by both criteria", [&] {
    const auto l = load(o);
    emit(o, report::document(command, l.inputs, report::acr(l.bound, l.options)));
  });
  sub("count-roots", "Positive roots of the class equation for total T", [&] {
    const auto l = load(o);
    const double t = to_double(required_total(total));
    emit(o, report::document(command, l.inputs, report::count_roots(l.bound, l.bindings, l.options, t)));
  })->add_option("--total", total, "Total carbon T");

  auto* simulate = sub("simulate", "Integrate the ODE system from --x0", [&] {
    const auto l = load(o);
    if (x0.empty()) throw InputError("--x0 is required");
    SimSettings s;
    s.t_end = t_end;
    s.step = step;
    if (method == "rk4") s.method = Integrator::RungeKutta4;
    else if (method != "dp") throw InputError("--method must be dp or rk4");
    const auto tr = integrate(l.bound, l.bindings, parse_doubles(x0), s);
    write_out(o, "trajectory.csv", tr.to_csv());
    emit(o, report::document(command, l.inputs, report::trajectory(tr)));
  });
  simulate->add_option("--x0", x0, "Initial state, comma separated");
  simulate->add_option("--t-end", t_end, "Time horizon")->capture_default_str();
  simulate->add_option("--step", step, "RK4 step or initial adaptive step")->capture_default_str();
  simulate->add_option("--method", method, "dp (adaptive) or rk4 (fixed step)")->capture_default_str();

  sub("acr-experiment", "Integrate several initial conditions and compare steady values", [&] {
    const auto l = load(o);
    std::vector<std::vector<double>> sets;
    for (const auto& s : x0_sets) sets.push_back(parse_doubles(s));
    if (sets.empty()) {
      if (o.preset.empty()) throw InputError("give --x0 sets or a preset with builtin initial conditions");
      sets = acr_initial_sets(o.preset);
    }
    const auto e = acr_experiment(l.bound, l.bindings, sets);
    for (std::size_t i = 0; i < e.runs.size(); ++i)
      if (e.runs[i].trajectory) write_out(o, "run_" + std::to_string(i) + ".csv", e.runs[i].trajectory->to_csv());
    emit(o, report::document(command, l.inputs, report::acr_experiment(e)));
  })->add_option("--x0", x0_sets, "Initial state (repeatable)");

  auto* multi = sub("multi-experiment", "Class-equation curve, roots and perturbation checks", [&] {
    const auto l = load(o);
    const auto np = parametrize_network(l.bound, finest_independent_decomposition(l.bound), l.options);
    const auto e = multistationarity_experiment(l.bound, l.bindings, np.merged, to_double(required_total(total)), {},
                                                perturbation, curve_points);
    write_out(o, "curve.csv", e.curve_csv());
    emit(o, report::document(command, l.inputs, report::multi_experiment(e)));
  });
  multi->add_option("--total", total, "Total carbon T");
  multi->add_option("--perturbation", perturbation, "Relative perturbation size")->capture_default_str();
  multi->add_option("--curve-points", curve_points, "Samples of the curve")->capture_default_str();

  auto* reduce = sub("reduce-check", "Sufficient conditions for carbon reduction over a region", [&] {
    const auto l = load(o);
    if (region.empty()) throw InputError("--region is required");
    const Region r = parse_region(region, l.net.species_count(), required_total(total));
    std::string which = check;
    if (which.empty()) which = l.net.species_index("A17") ? "doc" : "dac";
    Json result;
    result["check"] = which;
    if (which == "doc") result["doc"] = report::doc_reduction(reduction_check_doc(l.net.species(), l.bindings, r));
    else if (which == "dac") result["dac"] = report::dac_reduction(reduction_check_dac(l.net.species(), l.bindings, r));
    else throw InputError("--check must be doc or dac");
    emit(o, report::document(command, l.inputs, result));
  });
  reduce->add_option("--total", total, "Total carbon T");
  reduce->add_option("--region", region, "lb=...:ub=...");
  reduce->add_option("--check", check, "doc or dac (default from the species)");

  sub("pipeline", "All analyses and a one-row summary", [&] {
    const auto l = load(o);
    const double t = total.empty() ? 2.0 : to_double(required_total(total));
    emit(o, report::document(command, l.inputs, report::pipeline(l.bound, l.bindings, l.options, t)));
  })->add_option("--total", total, "Total carbon T for the root count (default 2)");

  auto* compare = sub(
      "compare", "Side-by-side numbers, flags and ACR sets",
      [&] {
        std::vector<report::CompareEntry> entries;
        report::Inputs inputs;
        inputs.source = "builtin:" + models;
        for (const auto& id : split(models, ',')) {
          const auto& m = builtin_model(id);
          inputs.network_text += m.text;
          ParametrizeOptions opt;
          opt.shifts = m.shifts;
          entries.push_back({m.id, load_builtin(m.id), opt});
        }
        emit(o, report::document(command, inputs, report::compare(entries, split(presets, ','))));
      },
      false);
  compare->add_option("--models", models, "Comma-separated builtin ids")->capture_default_str();
  compare->add_option("--presets", presets, "Order presets for the ACR columns")->capture_default_str();

  auto* builtin = sub(
      "builtin", "List builtin models and presets, or dump one model",
      [&] {
        Json result;
        if (builtin_action == "list") {
          Json ms = Json::array();
          for (const auto& m : builtin_models()) ms.push_back({{"id", m.id}, {"description", m.description}});
          Json ps = Json::array();
          for (const auto& p : order_presets())
            ps.push_back({{"name", p.name}, {"orders", p.orders.to_string()}, {"description", p.description}});
          result["models"] = std::move(ms);
          result["presets"] = std::move(ps);
          emit(o, report::document(command, {}, result));
        } else if (builtin_action == "dump") {
          const auto& m = builtin_model(builtin_id);
          if (o.json) {
            result["id"] = m.id;
            result["text"] = m.text;
            Json rates = Json::object();
            for (const auto& [k, v] : m.default_rates) rates[k] = to_string(v);
            result["default_rates"] = std::move(rates);
            Json shifts = Json::object();
            for (const auto& [k, v] : m.shifts) shifts[k] = v;
            result["shifts"] = std::move(shifts);
            emit(o, report::document(command, {"builtin:" + m.id, m.text, m.default_rates}, result));
          } else {
            std::cout << m.text;
          }
        } else {
          throw InputError("builtin action must be list or dump");
        }
      },
      false);
  builtin->add_option("action", builtin_action, "list or dump")->capture_default_str();
  builtin->add_option("id", builtin_id, "Model id for dump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    for (auto& [s, fn] : handlers)
      if (s->parsed()) fn();
  } catch (const InputError& e) {
    std::cerr << "crnkit: input error: " << e.what() << '\n';
    return kInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "crnkit: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const NumericalError& e) {
    std::cerr << "crnkit: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "crnkit: " << e.what() << '\n';
    return kOther;
  }
  return status;
}
