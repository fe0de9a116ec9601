#include "hestondist/cli.hpp"

#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "hestondist/errors.hpp"
#include "hestondist/level_sets.hpp"
#include "hestondist/line_distance.hpp"
#include "hestondist/point_metric.hpp"
#include "hestondist/vol_smile.hpp"

namespace hestondist::cli {

using nlohmann::json;

void to_json(json& j, const OutputRecord& r) {
  j = json{{"kind", r.kind},
           {"inputs", r.inputs},
           {"outputs", r.outputs},
           {"diagnostics", r.diagnostics}};
}

void from_json(const json& j, OutputRecord& r) {
  j.at("kind").get_to(r.kind);
  r.inputs = j.value("inputs", json::object());
  r.outputs = j.value("outputs", json::object());
  r.diagnostics = j.value("diagnostics", json::object());
}

namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Result {
  OutputRecord record;
  Table table;
  bool failed = false;
};

struct Globals {
  std::string format = "json";
  std::optional<double> tol;
  bool quiet_meta = false;
};

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') {
      q += '"';
    }
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& t, bool quiet_meta) {
  if (!quiet_meta) {
    out << "# " << kToolName << ' ' << kVersion << '\n';
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i ? "," : "") << t.header[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "");
      if (const double* d = std::get_if<double>(&row[i])) {
        out << csv_number(*d);
      } else {
        out << csv_text(std::get<std::string>(row[i]));
      }
    }
    out << '\n';
  }
}

json meta() { return {{"tool", kToolName}, {"version", kVersion}}; }

void write_json(std::ostream& out, json doc, bool quiet_meta) {
  if (!quiet_meta) {
    doc["meta"] = meta();
  }
  out << doc.dump(2) << '\n';
}

json report_json(const SolveReport& r) {
  return {{"iterations", r.iterations},
          {"residual", r.residual},
          {"method", std::string(to_string(r.method))}};
}

Result solution_result(const char* kind, json inputs, const DistanceSolution& s,
                       std::vector<std::string> header, std::vector<Cell> lead) {
  Result res;
  res.record.kind = kind;
  res.record.inputs = std::move(inputs);
  res.record.outputs = {{"value", s.value},
                        {"half_squared", s.half_squared},
                        {"argmin_x", s.argmin.x},
                        {"argmin_v", s.argmin.v},
                        {"theta_at_argmin", s.theta_at_argmin}};
  res.record.diagnostics = report_json(s.report);
  res.record.diagnostics["branch"] = std::string(to_string(s.branch));
  for (const char* h : {"value", "half_squared", "argmin_x", "argmin_v", "theta", "branch"}) {
    header.emplace_back(h);
  }
  lead.insert(lead.end(), {s.value, s.half_squared, s.argmin.x, s.argmin.v, s.theta_at_argmin,
                           std::string(to_string(s.branch))});
  res.table = {std::move(header), {std::move(lead)}};
  return res;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw CLI::ValidationError("--strikes", "not a number: " + item);
    }
    values.push_back(x);
  }
  return values;
}

void print_error(std::ostream& os, const Globals& g, const std::string& name,
                 const std::string& message) {
  if (g.format == "csv") {
    Table t{{"error", "message"}, {{name, message}}};
    write_csv(os, t, g.quiet_meta);
  } else {
    write_json(os, {{"error", {{"name", name}, {"message", message}}}}, g.quiet_meta);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Distances in the Heston manifold", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Argument tolerance of the minimizers")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet-meta", g.quiet_meta, "Omit the tool/version banner");

  std::function<Result()> action;

  // dist point | line | level-set | horizontal
  auto* dist_cmd = app.add_subcommand("dist", "Distance computations")->require_subcommand(1);

  struct {
    double x0 = 0, v0 = 1, x1 = 0, v1 = 1;
    std::optional<double> c, rho;
  } pt;
  auto* point_cmd = dist_cmd->add_subcommand("point", "Distance between two points");
  point_cmd->add_option("--x0", pt.x0)->required();
  point_cmd->add_option("--v0", pt.v0)->required();
  point_cmd->add_option("--x1", pt.x1)->required();
  point_cmd->add_option("--v1", pt.v1)->required();
  point_cmd->add_option("--c", pt.c, "Vol-of-vol (correlated model)");
  point_cmd->add_option("--rho", pt.rho, "Correlation (correlated model)");
  point_cmd->callback([&] {
    action = [&]() -> Result {
      const ManifoldPoint p0{pt.x0, pt.v0};
      const ManifoldPoint p1{pt.x1, pt.v1};
      json inputs{{"x0", pt.x0}, {"v0", pt.v0}, {"x1", pt.x1}, {"v1", pt.v1}};
      double value = 0.0;
      if (pt.c || pt.rho) {
        const CorrelationFrame f = CorrelationFrame::make(pt.c.value_or(1.0), pt.rho.value_or(0.0));
        inputs["c"] = f.c;
        inputs["rho"] = f.rho;
        value = dist_correlated(f, p0, p1);
      } else {
        value = dist(p0, p1);
      }
      Result r;
      r.record = {"point-distance", inputs, {{"value", value}}, json::object()};
      r.table = {{"x0", "v0", "x1", "v1", "value"}, {{pt.x0, pt.v0, pt.x1, pt.v1, value}}};
      return r;
    };
  });

  struct {
    double beta = 0, gamma = 0;
    std::optional<double> c, rho, x0, v0;
  } ln;
  auto* line_cmd = dist_cmd->add_subcommand("line", "Distance from (0, 1) to x = beta + gamma v");
  line_cmd->add_option("--beta", ln.beta)->required();
  line_cmd->add_option("--gamma", ln.gamma)->required();
  line_cmd->add_option("--c", ln.c, "Vol-of-vol (correlated model)");
  line_cmd->add_option("--rho", ln.rho, "Correlation (correlated model)");
  line_cmd->add_option("--x0", ln.x0, "Start point abscissa (correlated model)");
  line_cmd->add_option("--v0", ln.v0, "Start point variance (correlated model)");
  line_cmd->callback([&] {
    action = [&]() -> Result {
      json inputs{{"beta", ln.beta}, {"gamma", ln.gamma}};
      if (ln.c || ln.rho || ln.x0 || ln.v0) {
        const CorrelationFrame f = CorrelationFrame::make(ln.c.value_or(1.0), ln.rho.value_or(0.0));
        const ManifoldPoint p0{ln.x0.value_or(0.0), ln.v0.value_or(1.0)};
        inputs.update({{"c", f.c}, {"rho", f.rho}, {"x0", p0.x}, {"v0", p0.v}});
        const double value = dist_to_line_correlated(f, p0, ln.beta, ln.gamma);
        Result r;
        r.record = {"line-distance", inputs, {{"value", value}}, json::object()};
        r.table = {{"beta", "gamma", "c", "rho", "x0", "v0", "value"},
                   {{ln.beta, ln.gamma, f.c, f.rho, p0.x, p0.v, value}}};
        return r;
      }
      MinimizeOptions opts;
      if (g.tol) {
        opts.tol = *g.tol;
      }
      return solution_result("line-distance", inputs, dist_to_line(ln.beta, ln.gamma, opts),
                             {"beta", "gamma"}, {ln.beta, ln.gamma});
    };
  });

  double theta = 0.0;
  auto* level_cmd = dist_cmd->add_subcommand("level-set", "Distance from (0, 1) to a level set");
  level_cmd->add_option("--theta", theta)->required();
  level_cmd->callback([&] {
    action = [&]() -> Result {
      return solution_result("level-set", {{"theta", theta}}, dist_to_level_set(theta), {"theta_in"},
                             {theta});
    };
  });

  double tau = 0.0;
  auto* horiz_cmd = dist_cmd->add_subcommand("horizontal", "Distance from (0, 1) to v = tau");
  horiz_cmd->add_option("--tau", tau)->required();
  horiz_cmd->callback([&] {
    action = [&]() -> Result {
      const double value = dist_to_horizontal(tau);
      Result r;
      r.record = {"horizontal", {{"tau", tau}}, {{"value", value}}, json::object()};
      r.table = {{"tau", "value"}, {{tau, value}}};
      return r;
    };
  });

  // levelset emit
  auto* levelset_cmd = app.add_subcommand("levelset", "Level-set data")->require_subcommand(1);
  struct {
    double theta = 0, x_max = 0;
    std::size_t samples = 50;
  } em;
  auto* emit_cmd = levelset_cmd->add_subcommand("emit", "Sample a level curve");
  emit_cmd->add_option("--theta", em.theta)->required();
  emit_cmd->add_option("--x-max", em.x_max)->required();
  emit_cmd->add_option("--samples", em.samples)->capture_default_str();
  emit_cmd->callback([&] {
    action = [&]() -> Result {
      const auto samples = sample_level_curve(em.theta, em.x_max, em.samples);
      Result r;
      r.record.kind = "level-set";
      r.record.inputs = {{"theta", em.theta}, {"x_max", em.x_max}, {"samples", em.samples}};
      json pts = json::array();
      r.table.header = {"theta", "x", "v", "slope"};
      for (const auto& s : samples) {
        pts.push_back({{"x", s.x}, {"v", s.v}, {"slope", s.slope}, {"curvature", s.curvature}});
        r.table.rows.push_back({s.theta, s.x, s.v, s.slope});
      }
      r.record.outputs = {{"samples", pts}};
      return r;
    };
  });

  // smile
  struct {
    double spot = 0, v0 = 0, c = 1, rho = 0;
    std::string strikes;
  } sm;
  auto* smile_cmd = app.add_subcommand("smile", "Small-maturity implied volatility limit");
  smile_cmd->add_option("--spot", sm.spot)->required();
  smile_cmd->add_option("--v0", sm.v0)->required();
  smile_cmd->add_option("--c", sm.c)->required();
  smile_cmd->add_option("--rho", sm.rho)->required();
  smile_cmd->add_option("--strikes", sm.strikes, "Comma-separated strikes")->required();
  smile_cmd->callback([&] {
    const std::vector<double> strikes = parse_list(sm.strikes);
    action = [&, strikes]() -> Result {
      SmileQuery q;
      q.spot = sm.spot;
      q.v0 = sm.v0;
      q.frame = CorrelationFrame::make(sm.c, sm.rho);
      const auto table = smile_table(q, strikes);
      Result r;
      r.record.kind = "smile";
      r.record.inputs = {
          {"spot", sm.spot}, {"v0", sm.v0}, {"c", sm.c}, {"rho", sm.rho}, {"strikes", strikes}};
      r.table.header = {"strike", "log_moneyness", "beta", "gamma", "distance", "iv_limit"};
      json pts = json::array();
      int failures = 0;
      for (const auto& e : table) {
        if (e.point) {
          const SmilePoint& p = *e.point;
          pts.push_back({{"strike", p.strike},
                         {"log_moneyness", p.log_moneyness},
                         {"beta", p.line_beta},
                         {"gamma", p.line_gamma},
                         {"distance", p.distance},
                         {"iv_limit", p.iv_limit}});
          r.table.rows.push_back(
              {p.strike, p.log_moneyness, p.line_beta, p.line_gamma, p.distance, p.iv_limit});
        } else {
          ++failures;
          pts.push_back({{"strike", e.strike},
                         {"error", {{"name", e.error_name}, {"message", e.error_message}}}});
          r.table.rows.push_back({e.strike, std::string(), std::string(), std::string(),
                                  std::string(), "error:" + e.error_name});
        }
      }
      r.record.outputs = {{"points", pts}};
      r.record.diagnostics = {{"failures", failures}};
      r.failed = failures > 0;
      return r;
    };
  });

  // oracle compare
  auto* oracle_cmd = app.add_subcommand("oracle", "Formula versus brute force")->require_subcommand(1);
  struct {
    double beta = 0, gamma = 0;
    std::size_t grid = 4096;
  } oc;
  auto* compare_cmd = oracle_cmd->add_subcommand("compare", "Compare dist line with the oracle");
  compare_cmd->add_option("--beta", oc.beta)->required();
  compare_cmd->add_option("--gamma", oc.gamma)->required();
  compare_cmd->add_option("--grid", oc.grid, "Oracle grid nodes")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24));
  compare_cmd->callback([&] {
    action = [&]() -> Result {
      MinimizeOptions mopts;
      OracleOptions oopts;
      oopts.grid = oc.grid;
      if (g.tol) {
        mopts.tol = *g.tol;
      }
      const DistanceSolution f = dist_to_line(oc.beta, oc.gamma, mopts);
      const DistanceSolution o = oracle_dist(oc.beta, oc.gamma, oopts);
      const double diff = std::abs(f.value - o.value);
      const double rel = diff / std::max(1.0, o.value);
      Result r;
      r.record.kind = "oracle-compare";
      r.record.inputs = {{"beta", oc.beta}, {"gamma", oc.gamma}, {"grid", oc.grid}};
      r.record.outputs = {
          {"formula", f.value}, {"oracle", o.value}, {"abs_diff", diff}, {"rel_diff", rel}};
      r.record.diagnostics = {{"formula_branch", std::string(to_string(f.branch))},
                              {"formula", report_json(f.report)},
                              {"oracle", report_json(o.report)}};
      r.table = {{"beta", "gamma", "formula", "oracle", "abs_diff", "rel_diff"},
                 {{oc.beta, oc.gamma, f.value, o.value, diff, rel}}};
      return r;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, g, "usage_error", e.what());
    return 2;
  }

  if (!action) {
    print_error(err, g, "usage_error", "no command given");
    return 2;
  }
  try {
    const Result r = action();
    if (g.format == "csv") {
      write_csv(out, r.table, g.quiet_meta);
    } else {
      write_json(out, r.record, g.quiet_meta);
    }
    return r.failed ? 1 : 0;
  } catch (const Error& e) {
    print_error(out, g, e.name(), e.what());
    return 1;
  }
}

}  // namespace hestondist::cli
