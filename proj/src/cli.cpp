#include "hseries/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hseries/errors.hpp"

namespace hseries::cli {

namespace {

using catalog::IdentityRecord;
using catalog::Params;
using catalog::VerificationReport;

std::string sci(const Real& x, int digits = 3) { return to_string(x, digits); }

std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string params_text(const Params& p) {
  std::string s = catalog::to_string(p);
  return s.empty() ? "-" : s;
}

nlohmann::json real_json(const Real& x) { return {{"value", to_string(x)}, {"approx", x.to_double()}}; }

nlohmann::json complex_json(const Complex& z) {
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}, {"approx", {z.re.to_double(), z.im.to_double()}}};
}

Real real_from(const nlohmann::json& j) { return Real::parse(j.at("value").get<std::string>()); }

Complex complex_from(const nlohmann::json& j) {
  return {Real::parse(j.at("re").get<std::string>()), Real::parse(j.at("im").get<std::string>())};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* kCsvHeader =
    "id,provenance,params,lhs,rhs,abs_error,rel_error,terms_used,accelerated,passed,wall_time_ms\n";

std::string csv_row(const VerificationReport& r, bool timing) {
  std::string p = catalog::to_string(r.params);
  std::replace(p.begin(), p.end(), ',', ';');
  const bool ok = r.error_kind.empty();
  std::ostringstream s;
  s << csv_field(r.id) << ',' << csv_field(r.provenance) << ',' << csv_field(p) << ','
    << (ok ? to_string(r.lhs) : "") << ',' << (ok ? to_string(r.rhs) : "") << ','
    << (ok ? to_string(r.abs_error) : "") << ',' << (ok ? to_string(r.rel_error) : "") << ',' << r.terms_used
    << ',' << (r.accelerated ? "true" : "false") << ',' << (r.passed ? "true" : "false") << ','
    << (timing ? fixed_ms(r.wall_time_ms) : "0") << '\n';
  return s.str();
}

std::string status(const VerificationReport& r) {
  if (!r.error_kind.empty()) return "ERROR";
  return r.passed ? "PASS" : "FAIL";
}

void text_report(std::ostream& out, const VerificationReport& r, bool timing) {
  auto line = [&](const char* k, const std::string& v) {
    out << k << std::string(13 - std::char_traits<char>::length(k), ' ') << v << '\n';
  };
  line("id", r.id);
  line("provenance", r.provenance);
  line("params", params_text(r.params));
  line("lhs", to_string(r.lhs));
  line("rhs", to_string(r.rhs));
  line("abs_error", sci(r.abs_error));
  line("rel_error", sci(r.rel_error));
  line("threshold", sci(r.threshold));
  line("achieved_tol", sci(r.achieved_tol));
  line("terms_used", std::to_string(r.terms_used));
  line("accelerated", r.accelerated ? "yes" : "no");
  if (timing) line("wall_time_ms", fixed_ms(r.wall_time_ms));
  line("result", status(r));
}

void table_text(std::ostream& out, const std::vector<VerificationReport>& rows, bool timing) {
  std::size_t wid = 2, wpar = 6;
  for (const auto& r : rows) {
    wid = std::max(wid, r.id.size());
    wpar = std::max(wpar, params_text(r.params).size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  out << pad("status", 7) << pad("id", wid + 2) << pad("params", wpar + 2) << pad("rel_error", 11)
      << pad("terms", 9) << "acc" << (timing ? "  wall_ms" : "") << '\n';
  for (const auto& r : rows) {
    out << pad(status(r), 7) << pad(r.id, wid + 2) << pad(params_text(r.params), wpar + 2);
    if (!r.error_kind.empty()) {
      out << r.error_kind << ": " << r.error_message << '\n';
      continue;
    }
    out << pad(sci(r.rel_error, 2), 11) << pad(std::to_string(r.terms_used), 9) << (r.accelerated ? "yes" : "no ");
    if (timing) out << "  " << fixed_ms(r.wall_time_ms);
    out << '\n';
  }
}

void table_markdown(std::ostream& out, const std::vector<VerificationReport>& rows, bool timing) {
  out << "| id | params | lhs | rhs | rel_error | terms | accelerated | status |" << (timing ? " wall_ms |" : "")
      << '\n';
  out << "|---|---|---|---|---|---|---|---|" << (timing ? "---|" : "") << '\n';
  for (const auto& r : rows) {
    const bool ok = r.error_kind.empty();
    out << "| " << r.id << " | " << params_text(r.params) << " | " << (ok ? to_string(r.lhs, 16) : "-") << " | "
        << (ok ? to_string(r.rhs, 16) : "-") << " | " << (ok ? sci(r.rel_error, 2) : r.error_kind) << " | "
        << r.terms_used << " | " << (r.accelerated ? "yes" : "no") << " | " << status(r) << " |";
    if (timing) out << ' ' << fixed_ms(r.wall_time_ms) << " |";
    out << '\n';
  }
}

void emit_rows(std::ostream& out, const CliConfig& cfg, const std::vector<VerificationReport>& rows,
               nlohmann::json header) {
  switch (cfg.format) {
    case Format::Json: {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& r : rows) results.push_back(to_json(r, cfg.timing));
      header["results"] = std::move(results);
      out << header.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << kCsvHeader;
      for (const auto& r : rows) out << csv_row(r, cfg.timing);
      break;
    case Format::Markdown:
      table_markdown(out, rows, cfg.timing);
      break;
    case Format::Text:
      table_text(out, rows, cfg.timing);
      break;
  }
}

int exit_for(const Error& e) {
  const std::string k = e.kind();
  if (k == "DomainError" || k == "PoleError" || k == "ParseError" || k == "NotFound" || k == "KindError") {
    return kExitUsage;
  }
  return kExitFail;
}

int report_error(std::ostream& out, std::ostream& err, const CliConfig& cfg, const Error& e) {
  err << "error[" << e.kind() << "]: " << e.what() << '\n';
  if (cfg.format == Format::Json) {
    nlohmann::json j = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    if (cfg.id) j["id"] = *cfg.id;
    out << j.dump(2) << '\n';
  }
  return exit_for(e);
}

Params explicit_params(const CliConfig& cfg) {
  Params p;
  if (cfg.z) p["z"] = catalog::parse_param(*cfg.z);
  if (cfg.m) p["m"] = catalog::parse_param(*cfg.m);
  for (const auto& [k, v] : cfg.params) p[k] = catalog::parse_param(v);
  return p;
}

const std::string& require_id(const CliConfig& cfg) {
  if (!cfg.id) throw DomainError("--id is required for this command");
  return *cfg.id;
}

nlohmann::json context_json(const CliConfig& cfg) {
  return {{"mantissa_bits", cfg.mantissa_bits}, {"tol", cfg.tol}, {"max_terms", cfg.max_terms}};
}

void run_list(const CliConfig& cfg, std::ostream& out) {
  const auto& ids = catalog::list_identities();
  auto names = [](const IdentityRecord& r) {
    std::string s;
    for (const auto& n : r.param_names) s += (s.empty() ? "" : " ") + n;
    return s.empty() ? std::string("-") : s;
  };
  switch (cfg.format) {
    case Format::Json:
      out << catalog::registry_json().dump(2) << '\n';
      return;
    case Format::Csv:
      out << "id,kind,provenance,params,domain,rhs\n";
      for (const auto& r : ids) {
        out << csv_field(r.id) << ',' << catalog::to_string(r.kind) << ',' << csv_field(r.provenance) << ','
            << csv_field(names(r)) << ',' << csv_field(r.domain) << ',' << csv_field(r.rhs_text) << '\n';
      }
      return;
    case Format::Markdown:
      out << "| id | kind | provenance | params | rhs |\n|---|---|---|---|---|\n";
      for (const auto& r : ids) {
        out << "| " << r.id << " | " << catalog::to_string(r.kind) << " | " << r.provenance << " | " << names(r)
            << " | " << r.rhs_text << " |\n";
      }
      return;
    case Format::Text: {
      std::size_t w = 0;
      for (const auto& r : ids) w = std::max(w, r.id.size());
      for (const auto& r : ids) {
        out << r.id << std::string(w + 2 - r.id.size(), ' ') << r.provenance << "  [" << names(r) << "]\n";
      }
      out << ids.size() << " identities\n";
      return;
    }
  }
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  VerificationReport r = catalog::verify(require_id(cfg), explicit_params(cfg), cfg.context());
  switch (cfg.format) {
    case Format::Json: out << to_json(r, cfg.timing).dump(2) << '\n'; break;
    case Format::Csv: out << kCsvHeader << csv_row(r, cfg.timing); break;
    case Format::Markdown: table_markdown(out, {r}, cfg.timing); break;
    case Format::Text: text_report(out, r, cfg.timing); break;
  }
  return r.passed ? kExitPass : kExitFail;
}

int run_sweep(const CliConfig& cfg, std::ostream& out) {
  const IdentityRecord& rec = catalog::lookup(require_id(cfg));
  std::vector<Params> grid = cfg.grid ? parse_grid(*cfg.grid, rec) : rec.canonical_params;
  const Params fixed = explicit_params(cfg);
  for (auto& p : grid) {
    for (const auto& [k, v] : fixed) p.emplace(k, v);
  }
  auto rows = catalog::sweep(rec.id, grid, cfg.context());
  if (!cfg.timing) {
    for (auto& r : rows) r.wall_time_ms = 0;
  }
  std::size_t passed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
  nlohmann::json header = {{"id", rec.id},
                           {"context", context_json(cfg)},
                           {"summary", {{"points", rows.size()}, {"passed", passed}}}};
  emit_rows(out, cfg, rows, header);
  if (cfg.format == Format::Text) out << passed << "/" << rows.size() << " points passed\n";
  return passed == rows.size() ? kExitPass : kExitFail;
}

int run_report(const CliConfig& cfg, std::ostream& out) {
  struct Job {
    const IdentityRecord* rec;
    Params params;
  };
  std::vector<Job> jobs;
  for (const auto& rec : catalog::list_identities()) {
    for (const auto& p : rec.canonical_params) jobs.push_back({&rec, p});
  }
  std::vector<VerificationReport> rows(jobs.size());
  const PrecisionContext ctx = cfg.context();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      rows[i] = catalog::sweep(jobs[i].rec->id, {jobs[i].params}, ctx).front();
      if (!cfg.timing) rows[i].wall_time_ms = 0;
    }
  };
  const auto start = std::chrono::steady_clock::now();
  unsigned n = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  const double total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::size_t passed = 0, ids = 0, ids_passed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    passed += rows[i].passed;
    const bool first = i == 0 || jobs[i].rec != jobs[i - 1].rec;
    if (first) {
      ++ids;
      bool all = true;
      for (std::size_t j = i; j < rows.size() && jobs[j].rec == jobs[i].rec; ++j) all = all && rows[j].passed;
      ids_passed += all;
    }
  }
  nlohmann::json summary = {{"identities", ids},
                            {"identities_passed", ids_passed},
                            {"points", rows.size()},
                            {"points_passed", passed}};
  if (cfg.timing) summary["wall_time_ms"] = total_ms;
  nlohmann::json header = {{"schema_version", catalog::kRegistrySchemaVersion},
                           {"context", context_json(cfg)},
                           {"summary", summary}};
  emit_rows(out, cfg, rows, header);
  if (cfg.format == Format::Text || cfg.format == Format::Markdown) {
    out << (cfg.format == Format::Markdown ? "\n" : "") << ids_passed << "/" << ids << " identities passed, "
        << passed << "/" << rows.size() << " points passed";
    if (cfg.timing) out << " in " << fixed_ms(total_ms) << " ms";
    out << '\n';
  }
  return passed == rows.size() ? kExitPass : kExitFail;
}

}  // namespace

void CliConfig::validate() const {
  if (!(tol > 0)) throw DomainError("--tol must be positive");
  if (mantissa_bits < 53) throw DomainError("--bits must be at least 53");
  if (max_terms < 1) throw DomainError("--max-terms must be at least 1");
}

PrecisionContext CliConfig::context() const {
  PrecisionContext ctx;
  ctx.mantissa_bits = mantissa_bits;
  ctx.max_terms = static_cast<std::size_t>(max_terms);
  ctx.target_tol = tol;
  return ctx;
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown" || text == "md") return Format::Markdown;
  throw ParseError("unknown format '" + std::string(text) + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Markdown: return "markdown";
  }
  return "?";
}

std::vector<Params> parse_grid(std::string_view grid, const IdentityRecord& record) {
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  std::size_t pos = 0;
  while (pos <= grid.size()) {
    std::size_t end = grid.find(';', pos);
    if (end == std::string_view::npos) end = grid.size();
    std::string_view axis = grid.substr(pos, end - pos);
    pos = end + 1;
    if (axis.empty()) continue;
    std::string name;
    if (auto eq = axis.find('='); eq != std::string_view::npos) {
      name = std::string(axis.substr(0, eq));
      axis.remove_prefix(eq + 1);
    } else if (record.param_names.size() == 1) {
      name = record.param_names.front();
    } else {
      throw ParseError("grid axis needs a name=... prefix for " + record.id);
    }
    if (std::find(record.param_names.begin(), record.param_names.end(), name) == record.param_names.end()) {
      throw ParseError("grid axis '" + name + "' is not a parameter of " + record.id);
    }
    std::vector<std::string> values;
    std::size_t p = 0;
    while (p <= axis.size()) {
      std::size_t e = axis.find(',', p);
      if (e == std::string_view::npos) e = axis.size();
      if (e > p) values.emplace_back(axis.substr(p, e - p));
      p = e + 1;
    }
    if (values.empty()) throw ParseError("empty grid axis '" + name + "'");
    axes.emplace_back(std::move(name), std::move(values));
  }
  if (axes.empty()) throw ParseError("empty grid");
  std::vector<Params> points{Params{}};
  for (const auto& [name, values] : axes) {
    std::vector<Params> next;
    for (const auto& base : points) {
      for (const auto& v : values) {
        Params p = base;
        p[name] = catalog::parse_param(v);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

nlohmann::json to_json(const VerificationReport& r, bool timing) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v.text;
  nlohmann::json j = {{"id", r.id},
                      {"provenance", r.provenance},
                      {"params", params},
                      {"lhs", complex_json(r.lhs)},
                      {"rhs", complex_json(r.rhs)},
                      {"abs_error", real_json(r.abs_error)},
                      {"rel_error", real_json(r.rel_error)},
                      {"achieved_tol", real_json(r.achieved_tol)},
                      {"threshold", real_json(r.threshold)},
                      {"terms_used", r.terms_used},
                      {"accelerated", r.accelerated},
                      {"passed", r.passed},
                      {"wall_time_ms", timing ? r.wall_time_ms : 0.0}};
  if (!r.error_kind.empty()) j["error"] = {{"kind", r.error_kind}, {"message", r.error_message}};
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.provenance = j.at("provenance").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params[k] = catalog::parse_param(v.get<std::string>());
  r.lhs = complex_from(j.at("lhs"));
  r.rhs = complex_from(j.at("rhs"));
  r.abs_error = real_from(j.at("abs_error"));
  r.rel_error = real_from(j.at("rel_error"));
  r.achieved_tol = real_from(j.at("achieved_tol"));
  r.threshold = real_from(j.at("threshold"));
  r.terms_used = j.at("terms_used").get<std::size_t>();
  r.accelerated = j.at("accelerated").get<bool>();
  r.passed = j.at("passed").get<bool>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  if (j.contains("error")) {
    r.error_kind = j["error"].at("kind").get<std::string>();
    r.error_message = j["error"].at("message").get<std::string>();
  }
  return r;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::List: run_list(config, out); return kExitPass;
      case Command::Verify: return run_verify(config, out);
      case Command::Sweep: return run_sweep(config, out);
      case Command::Report: return run_report(config, out);
    }
    return kExitUsage;
  } catch (const Error& e) {
    return report_error(out, err, config, e);
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify harmonic-number series identities to controlled precision", "hseries"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "text";
  std::string id, z, m, grid;
  std::vector<std::string> params;
  app.add_option("--id", id, "Identity id (see `list`)");
  app.add_option("--z", z, "General argument z: integer, p/q, decimal or a+bi");
  app.add_option("--m", m, "Half-integer index m >= 0");
  app.add_option("--param", params, "Extra parameter name=value (repeatable)")->allow_extra_args(false);
  app.add_option("--grid", grid, "Sweep grid, e.g. z=0,1/2,1 or m=0,1;p=2,3");
  app.add_option("--bits,--mantissa-bits", cfg.mantissa_bits, "Mantissa bits")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Relative tolerance")->capture_default_str();
  app.add_option("--max-terms", cfg.max_terms, "Maximum number of series terms")->capture_default_str();
  app.add_option("--format", format, "text, json, csv or markdown")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}))
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "Report wall-clock times");
  app.add_option("--jobs", cfg.jobs, "Worker threads for report (0 = all cores)");

  auto* list = app.add_subcommand("list", "Print the identity registry");
  auto* verify = app.add_subcommand("verify", "Verify one identity at one parameter point");
  auto* sweep = app.add_subcommand("sweep", "Verify one identity over a parameter grid");
  auto* report = app.add_subcommand("report", "Verify every identity at its canonical parameters");
  for (auto* sub : {list, verify, sweep, report}) sub->fallthrough();

  std::vector<const char*> argv{"hseries"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (list->parsed()) cfg.command = Command::List;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (sweep->parsed()) cfg.command = Command::Sweep;
  if (report->parsed()) cfg.command = Command::Report;
  cfg.format = parse_format(format);
  if (!id.empty()) cfg.id = id;
  if (!z.empty()) cfg.z = z;
  if (!m.empty()) cfg.m = m;
  if (!grid.empty()) cfg.grid = grid;
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "error[usage]: --param expects name=value, got '" << kv << "'\n";
      return kExitUsage;
    }
    cfg.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return run(cfg, out, err);
}

}  // namespace hseries::cli
