#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "okdh/builtin.hpp"
#include "okdh/io.hpp"
#include "okdh/okounkov.hpp"
#include "okdh/plot.hpp"

namespace okdh::cli {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kCommands = {
    "vanishing-numbers", "measure",      "limit-measure",     "converge",
    "okounkov-body",     "filtered-body", "restricted-volume", "verify-theorem5"};

struct RunConfig {
  std::string command;
  std::string model_path;
  std::string filtration_path;
  std::string example;
  std::optional<long> m;
  std::string m_list;
  std::string t_list;
  long t_steps = 10;
  std::string out_dir;
  std::string format;
};

// Artifacts of one run, keyed by extension, written in a fixed order.
struct Artifacts {
  std::map<std::string, std::string> files;
  std::string text;  // printed to stdout when no output directory is given
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::int64_t> parse_m_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(s)) {
    const Rational q = [&] {
      try {
        return parse_rational(item);
      } catch (const ValidationError&) {
        throw ValidationError("--m-list: '" + item + "' is not an integer");
      }
    }();
    if (q.get_den() != 1 || q < 1 || !q.get_num().fits_slong_p()) {
      throw ValidationError("--m-list: entries must be positive integers, got '" + item + "'");
    }
    out.push_back(q.get_num().get_si());
  }
  if (out.empty()) throw ValidationError("--m-list: empty list");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw ValidationError("--m-list: values must be strictly increasing");
  }
  return out;
}

struct Inputs {
  std::optional<ToricModel> model;
  std::optional<WeightFiltration> filtration;
};

Inputs load_inputs(const RunConfig& cfg, bool need_filtration) {
  Inputs in;
  if (!cfg.example.empty()) {
    if (!cfg.model_path.empty() || !cfg.filtration_path.empty()) {
      throw ValidationError("--example cannot be combined with --model or --filtration");
    }
    const auto& ex = builtin_example(cfg.example);
    in.model = ex.filtration.model();
    in.filtration = ex.filtration;
    return in;
  }
  if (cfg.model_path.empty()) throw ValidationError("--model: required (or use --example)");
  in.model = model_from_json(read_json_file(cfg.model_path));
  if (!cfg.filtration_path.empty()) {
    in.filtration = filtration_from_json(read_json_file(cfg.filtration_path), *in.model);
  } else if (need_filtration) {
    throw ValidationError("--filtration: required for '" + cfg.command + "'");
  }
  return in;
}

long require_m(const RunConfig& cfg) {
  if (!cfg.m) throw ValidationError("--m: required for '" + cfg.command + "'");
  if (*cfg.m < 1) throw ValidationError("--m: must be >= 1, got " + std::to_string(*cfg.m));
  return *cfg.m;
}

Json header(const RunConfig& cfg, const Inputs& in) {
  Json j;
  j["command"] = cfg.command;
  j["model"] = model_to_json(*in.model);
  if (in.filtration) j["filtration"] = filtration_to_json(*in.filtration);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Artifacts vanishing_numbers(const RunConfig& cfg, const Inputs& in) {
  const long m = require_m(cfg);
  const auto vn = in.filtration->vanishing_numbers(m);
  CsvTable csv({"j", "a_j", "a_j_over_m", "a_j_over_m_decimal"});
  for (std::size_t j = 0; j < vn.values.size(); ++j) {
    const Rational r = vn.values[j] / m;
    csv.add_row({std::to_string(j), to_string(vn.values[j]), to_string(r), to_decimal(r)});
  }
  Json j = header(cfg, in);
  j["m"] = m;
  j["h0"] = vn.values.size();
  j["values"] = vector_json(vn.values);
  j["a_min"] = rational_json(vn.a_min());
  j["a_max"] = rational_json(vn.a_max());
  j["mass_plus"] = rational_json(vn.mass_plus());
  j["a_max_limit"] = rational_json(in.filtration->a_max_limit());
  return {{{"csv", csv.str()}, {"json", dump(j)}}, csv.str()};
}

Artifacts measure(const RunConfig& cfg, const Inputs& in) {
  const long m = require_m(cfg);
  const auto nu = nu_m(*in.filtration, m);
  const auto limit = limit_measure_nu(*in.filtration);
  CsvTable csv({"location", "location_decimal", "mass", "mass_decimal"});
  for (const auto& a : nu.atoms()) {
    csv.add_row({to_string(a.location), to_decimal(a.location), to_string(a.mass), to_decimal(a.mass)});
  }
  Json j = header(cfg, in);
  j["m"] = m;
  j["nu_m"] = measure_json(nu);
  j["mu_m"] = measure_json(mu_m(*in.filtration, m));
  j["kolmogorov_to_limit"] = rational_json(kolmogorov_distance(Measure(nu), Measure(limit)));
  Plot plot{"nu_" + std::to_string(m) + " against nu", density_layers(limit)};
  plot.layers.push_back(stems_layer(nu));
  return {{{"csv", csv.str()}, {"json", dump(j)}, {"svg", render_svg(plot)}}, csv.str()};
}

Artifacts limit_measure(const RunConfig& cfg, const Inputs& in) {
  const auto nu = limit_measure_nu(*in.filtration);
  CsvTable csv({"kind", "lo", "hi", "density", "mass", "mass_decimal"});
  const auto& d = nu.density();
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const Rational mass = d.pieces[i].integral(d.breakpoints[i], d.breakpoints[i + 1]);
    csv.add_row({"interval", to_string(d.breakpoints[i]), to_string(d.breakpoints[i + 1]),
                 d.pieces[i].to_string(), to_string(mass), to_decimal(mass)});
  }
  if (nu.atom()) {
    const auto& a = *nu.atom();
    csv.add_row({"atom", to_string(a.location), to_string(a.location), "-", to_string(a.mass),
                 to_decimal(a.mass)});
  }
  Json j = header(cfg, in);
  j["nu"] = measure_json(nu);
  j["mu"] = measure_json(limit_measure_mu(*in.filtration));
  Plot plot{"limit measure nu", density_layers(nu)};
  return {{{"csv", csv.str()}, {"json", dump(j)}, {"svg", render_svg(plot)}}, csv.str()};
}

Artifacts converge(const RunConfig& cfg, const Inputs& in) {
  if (cfg.m_list.empty()) throw ValidationError("--m-list: required for 'converge'");
  const auto ms = parse_m_list(cfg.m_list);
  const auto rows = convergence_sweep(*in.filtration, ms);
  const auto csv = convergence_csv(rows).str();
  const auto limit = limit_measure_nu(*in.filtration);
  Json j = header(cfg, in);
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"m", r.m}, {"E_nu_m", rational_json(r.expectation)},
                     {"kolmogorov", rational_json(r.kolmogorov)}});
  }
  j["rows"] = std::move(table);
  j["E_nu"] = rational_json(limit.expectation());
  Plot plot{"nu_" + std::to_string(ms.back()) + " against nu", density_layers(limit)};
  plot.layers.push_back(stems_layer(nu_m(*in.filtration, ms.back())));
  return {{{"csv", csv}, {"json", dump(j)}, {"svg", render_svg(plot)}}, csv};
}

CsvTable vertex_csv(const RationalPolytope& p) {
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < p.dim(); ++i) cols.push_back("x" + std::to_string(i + 1));
  CsvTable csv(cols);
  for (const auto& v : p.vertices()) {
    std::vector<std::string> row;
    for (const auto& x : v) row.push_back(to_string(x));
    csv.add_row(std::move(row));
  }
  return csv;
}

Artifacts okounkov(const RunConfig& cfg, const Inputs& in) {
  const auto body = okounkov_body(*in.model);
  Json j = header(cfg, in);
  j["body"] = polytope_json(body);
  Artifacts a{{{"csv", vertex_csv(body).str()}, {"json", dump(j)}}, dump(j)};
  if (body.dim() <= 2) a.files["svg"] = render_svg({"Okounkov body", {body_layer(body, "#1f77b4", "")}});
  return a;
}

Artifacts filtered(const RunConfig& cfg, const Inputs& in) {
  const auto& f = *in.filtration;
  const auto body = filtered_body(f);
  const auto routes = filtered_body_volume_routes(f);
  if (routes.by_triangulation != routes.by_layer_cake) {
    throw InvariantViolation("filtered body volume routes disagree: " + to_string(routes.by_triangulation) +
                             " vs " + to_string(routes.by_layer_cake));
  }
  const ConcaveTransform g(f);
  Json j = header(cfg, in);
  j["body"] = polytope_json(body);
  j["volume"] = rational_json(routes.by_triangulation);
  j["a_max"] = rational_json(g.max());
  Json pieces = Json::array();
  for (const auto& p : g.pieces()) pieces.push_back({{"a", vector_json(p.slope)}, {"b", rational_json(p.offset)}});
  j["concave_transform"] = {{"domain", polytope_json(g.domain())}, {"pieces", std::move(pieces)}};
  j["slice_volume"] = piecewise_json(slice_volume_function(f).piecewise());
  Artifacts a{{{"csv", vertex_csv(body).str()}, {"json", dump(j)}}, dump(j)};
  if (f.dim() == 1) {
    a.files["svg"] = render_svg({"graph of G over the Okounkov body", {body_layer(body, "#1f77b4", "")}});
  } else if (f.dim() == 2) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"};
    Plot plot{"superlevel sets of G", {}};
    for (long k = 0; k < 5; ++k) {
      const Rational t = g.max() * ratio(k, 5);
      const auto s = g.superlevel_set(t);
      if (!s.is_empty()) plot.layers.push_back(body_layer(s, colors[k], "G >= " + to_string(t)));
    }
    a.files["svg"] = render_svg(plot);
  }
  return a;
}

RationalVector t_grid(const RunConfig& cfg, const Rational& a_max) {
  RationalVector ts;
  if (!cfg.t_list.empty()) {
    for (const auto& item : split(cfg.t_list)) {
      try {
        ts.push_back(parse_rational(item));
      } catch (const ValidationError& e) {
        throw ValidationError(std::string("--t: ") + e.what());
      }
    }
    return ts;
  }
  if (cfg.t_steps < 1) throw ValidationError("--t-steps: must be >= 1, got " + std::to_string(cfg.t_steps));
  for (long k = 0; k <= cfg.t_steps; ++k) ts.push_back(a_max * ratio(k, cfg.t_steps));
  return ts;
}

Artifacts restricted(const RunConfig& cfg, const Inputs& in) {
  const auto div = DivisorData::from_filtration(*in.filtration);
  const auto ts = t_grid(cfg, div.filtration().a_max_limit());
  const auto csv = restricted_volume_csv(div, ts).str();
  const auto vol = volume_function(div);
  const auto section = restricted_volume_function(div);
  Json j = header(cfg, in);
  j["volume_function"] = piecewise_json(vol.piecewise());
  j["restricted_volume"] = piecewise_json(section);
  j["vol_L"] = rational_json(div.model().volume_of_L());
  j["a_max"] = rational_json(vol.a_max());
  if (!cfg.m_list.empty()) {
    Json est = Json::array();
    for (const auto& t : ts) {
      if (t >= vol.a_max()) continue;
      Json row{{"t", rational_json(t)}};
      Json vals = Json::array();
      for (auto m : parse_m_list(cfg.m_list)) {
        vals.push_back({{"m", m}, {"estimate", rational_json(restricted_volume_estimate(div, m, t))}});
      }
      row["estimates"] = std::move(vals);
      row["limsup"] = rational_json(restricted_volume_limsup(div, t, parse_m_list(cfg.m_list)));
      est.push_back(std::move(row));
    }
    j["finite_level"] = std::move(est);
  }
  Plot plot{"Vol(L - tE) and restricted volume",
            {function_layer(vol.piecewise(), "#1f77b4", "Vol(L - tE)"),
             function_layer(section, "#d62728", "Vol_X|E(L - tE)")}};
  return {{{"csv", csv}, {"json", dump(j)}, {"svg", render_svg(plot)}}, csv};
}

Artifacts theorem5(const RunConfig& cfg, const Inputs& in) {
  const auto div = DivisorData::from_filtration(*in.filtration);
  const auto report = verify_theorem_5(div);
  Json j = header(cfg, in);
  Json ivs = Json::array();
  for (const auto& i : report.intervals) {
    ivs.push_back({{"lo", rational_json(i.lo)}, {"hi", rational_json(i.hi)},
                   {"nu_density", polynomial_json(i.nu_density)},
                   {"restricted_density", polynomial_json(i.restricted_density)}, {"pass", i.pass}});
  }
  j["intervals"] = std::move(ivs);
  j["atom_free"] = report.atom_free;
  j["a_max_limit"] = rational_json(report.a_max_limit);
  j["big_threshold"] = rational_json(report.big_threshold);
  j["threshold_pass"] = report.threshold_pass;
  j["passed"] = report.passed();
  CsvTable csv({"lo", "hi", "nu_density", "restricted_density", "pass"});
  for (const auto& i : report.intervals) {
    csv.add_row({to_string(i.lo), to_string(i.hi), i.nu_density.to_string(), i.restricted_density.to_string(),
                 i.pass ? "pass" : "fail"});
  }
  const std::string text = report.to_string() + (report.passed() ? "PASS\n" : "FAIL\n");
  return {{{"csv", csv.str()}, {"json", dump(j)}, {"txt", text}}, text};
}

Artifacts dispatch(const RunConfig& cfg) {
  const bool needs_filtration = cfg.command != "okounkov-body";
  const Inputs in = load_inputs(cfg, needs_filtration);
  if (cfg.command == "vanishing-numbers") return vanishing_numbers(cfg, in);
  if (cfg.command == "measure") return measure(cfg, in);
  if (cfg.command == "limit-measure") return limit_measure(cfg, in);
  if (cfg.command == "converge") return converge(cfg, in);
  if (cfg.command == "okounkov-body") return okounkov(cfg, in);
  if (cfg.command == "filtered-body") return filtered(cfg, in);
  if (cfg.command == "restricted-volume") return restricted(cfg, in);
  return theorem5(cfg, in);
}

void emit(const RunConfig& cfg, const Artifacts& a, std::ostream& out) {
  std::set<std::string> formats;
  if (!cfg.format.empty()) {
    for (const auto& f : split(cfg.format)) {
      if (f != "csv" && f != "json" && f != "svg" && f != "txt") {
        throw ValidationError("--format: unknown format '" + f + "' (expected csv, json, svg)");
      }
      if (!a.files.count(f)) {
        throw ValidationError("--format: '" + cfg.command + "' does not produce " + f + " output here");
      }
      formats.insert(f);
    }
  }
  if (cfg.out_dir.empty()) {
    if (formats.size() > 1) throw ValidationError("--format: several formats need --out");
    out << (formats.empty() ? a.text : a.files.at(*formats.begin()));
    return;
  }
  if (formats.empty()) {
    for (const auto& [ext, _] : a.files) formats.insert(ext);
  }
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw ValidationError("--out: cannot create directory '" + cfg.out_dir + "': " + ec.message());
  for (const auto& ext : formats) {
    const fs::path path = fs::path(cfg.out_dir) / (cfg.command + "." + ext);
    std::ofstream f(path, std::ios::binary);
    f << a.files.at(ext);
    if (!f) throw ValidationError("--out: cannot write '" + path.string() + "'");
    out << path.string() << "\n";
  }
  if (cfg.command == "verify-theorem5") out << a.text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Duistermaat-Heckman measures, Okounkov bodies and restricted volumes on toric models",
               "okdh"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_subcommand("examples", "List the builtin model/filtration pairs");
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--model", cfg.model_path, "Model JSON file");
    sub->add_option("--filtration", cfg.filtration_path, "Filtration JSON file");
    sub->add_option("--example", cfg.example, "Builtin model/filtration pair (see 'okdh examples')");
    sub->add_option("--m", cfg.m, "Level m");
    sub->add_option("--m-list", cfg.m_list, "Comma separated increasing levels, e.g. 1,2,4,8");
    sub->add_option("--t", cfg.t_list, "Comma separated rational t values");
    sub->add_option("--t-steps", cfg.t_steps, "Number of equal steps of the t grid over [0, a_max]");
    sub->add_option("--out", cfg.out_dir, "Output directory (default: print to stdout)");
    sub->add_option("--format", cfg.format, "Comma separated subset of csv,json,svg");
  }
  const std::pair<const char*, const char*> descriptions[] = {
      {"vanishing-numbers", "Sorted jumping numbers a_j(m) at level --m"},
      {"measure", "Discrete measure nu_m at level --m"},
      {"limit-measure", "Limit measure nu: density pieces and possible atom at a_max"},
      {"converge", "E(nu_m) and Kolmogorov distance to nu over --m-list"},
      {"okounkov-body", "Okounkov body Delta(L) and its volume"},
      {"filtered-body", "Filtered body, slice volumes h(t) and the concave transform"},
      {"restricted-volume", "Vol(L - tE) and Vol_X|E(L - tE) on a t grid"},
      {"verify-theorem5", "Check nu against d Vol_X|E(L - tE)/Vol(L) dt"},
  };
  for (const auto& [name, text] : descriptions) app.get_subcommand(name)->description(text);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (cfg.command == "examples") {
      for (const auto& ex : builtin_examples()) {
        out << ex.name << (ex.divisorial ? "  [divisor]" : "") << "\n    " << ex.description << "\n";
      }
      return 0;
    }
    emit(cfg, dispatch(cfg), out);
    return 0;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace okdh::cli
