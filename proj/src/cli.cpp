#include "dtt/cli.hpp"

#include "dtt/closed_forms.hpp"
#include "dtt/core.hpp"
#include "dtt/spectrum.hpp"
#include "dtt/trig_sums.hpp"
#include "dtt/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace dtt::cli {

using nlohmann::json;

namespace {

enum class Format { table, json, csv };

Format parse_format(const std::string &s) {
  if (s == "json")
    return Format::json;
  if (s == "csv")
    return Format::csv;
  return Format::table;
}

std::string g6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width)
    s.insert(0, width - s.size(), ' ');
  return s;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

json envelope(std::string_view command, json params, json results) {
  json doc;
  doc["tool_version"] = tool_version;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  return doc;
}

void emit_json(std::ostream &out, const json &doc) { out << doc.dump(2) << '\n'; }

TransformKind kind_from(const std::string &text) {
  auto k = parse_kind(text);
  if (!k)
    throw Error(ErrorCode::InvalidArgument, "unknown kind '" + text + "'");
  return *k;
}

std::size_t size_from(long long n) {
  if (n < 0)
    throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  return static_cast<std::size_t>(n);
}

//------------------------------------------------------------------------------
int cmd_matrix(TransformKind kind, std::size_t n, Format fmt, std::ostream &out) {
  const auto a = build_matrix(kind, n);
  switch (fmt) {
  case Format::json: {
    json rows = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      json row = json::array();
      for (std::size_t l = 0; l < n; ++l)
        row.push_back(a(k, l));
      rows.push_back(std::move(row));
    }
    emit_json(out, envelope("matrix", {{"kind", name(kind)}, {"n", n}},
                            {{"entries", std::move(rows)}}));
    break;
  }
  case Format::csv:
    for (std::size_t l = 0; l < n; ++l)
      out << (l ? "," : "") << "c" << l;
    out << '\n';
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l)
        out << (l ? "," : "") << g17(a(k, l));
      out << '\n';
    }
    break;
  case Format::table:
    out << name(kind) << " n=" << n << '\n';
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l)
        out << (l ? " " : "") << pad(g6(a(k, l)), 13);
      out << '\n';
    }
    break;
  }
  return ok;
}

int cmd_spectrum(TransformKind kind, std::size_t n, Format fmt, std::ostream &out) {
  require_admissible(kind, n);
  const auto spec = analytic_spectrum(kind, n);
  const double from_pairs = spec.trace();
  const double closed = trace_closed_form(kind, n).value;

  switch (fmt) {
  case Format::json: {
    json pairs = json::array();
    for (const auto &p : spec.pairs) {
      pairs.push_back({{"value", p.value},
                       {"multiplicity", p.multiplicity},
                       {"exact", p.exact.to_string()}});
    }
    emit_json(out, envelope("spectrum", {{"kind", name(kind)}, {"n", n}},
                            {{"pairs", std::move(pairs)},
                             {"merged", spec.merged},
                             {"trace", {{"spectrum_sum", from_pairs},
                                        {"closed_form", closed}}}}));
    break;
  }
  case Format::csv:
    out << "value,multiplicity,exact\n";
    for (const auto &p : spec.pairs)
      out << g17(p.value) << ',' << p.multiplicity << ','
          << csv_field(p.exact.to_string()) << '\n';
    out << "# trace spectrum_sum=" << g17(from_pairs)
        << " closed_form=" << g17(closed) << '\n';
    break;
  case Format::table:
    out << name(kind) << " n=" << n << (spec.merged ? " (merged coincident rows)" : "")
        << '\n';
    out << pad("value", 13) << pad("mult", 6) << "  exact\n";
    for (const auto &p : spec.pairs)
      out << pad(g6(p.value), 13) << pad(std::to_string(p.multiplicity), 6) << "  "
          << p.exact.to_string() << '\n';
    out << "trace: spectrum sum " << g6(from_pairs) << ", closed form " << g6(closed)
        << '\n';
    break;
  }
  return ok;
}

json tally_json(const std::map<std::string, Tally> &m) {
  json j = json::object();
  for (const auto &[key, t] : m)
    j[key] = {{"total", t.total}, {"failed", t.failed}};
  return j;
}

json notes_json(const std::vector<CellNote> &notes) {
  json j = json::array();
  for (const auto &s : notes)
    j.push_back({{"kind", name(s.kind)}, {"n", s.n}, {"note", s.reason}});
  return j;
}

json tolerances_json(const Tolerances &t) {
  return {{"square", t.square},
          {"trace", t.trace},
          {"spectrum_value", t.spectrum_value},
          {"v1_action", t.v1_action},
          {"q_residual", t.q_residual},
          {"q_coeff", t.q_coeff},
          {"eigvec", t.eigvec},
          {"eigval_match", t.eigval_match},
          {"identity", t.identity},
          {"cluster_abs", t.cluster_abs},
          {"cluster_rel", t.cluster_rel},
          {"identity_max_param", t.identity_max_param}};
}

std::string kind_label(const Claim &c) {
  return c.kind ? std::string(name(*c.kind)) : "identity";
}

int cmd_verify(const std::vector<TransformKind> &kinds, std::size_t n_min,
               std::size_t n_max, Format fmt, bool fail_fast, std::ostream &out) {
  const Tolerances tol;
  const auto report = sweep(kinds, n_min, n_max, tol, fail_fast);
  const auto failed = report.failed_count();

  switch (fmt) {
  case Format::json: {
    json kind_names = json::array();
    for (auto k : report.kinds)
      kind_names.push_back(name(k));
    json claims = json::array();
    for (const auto &c : report.claims) {
      claims.push_back({{"id", name(c.id)},
                        {"kind", c.kind ? json(name(*c.kind)) : json(nullptr)},
                        {"n", c.n},
                        {"detail", c.detail},
                        {"measured", std::isfinite(c.measured) ? json(c.measured)
                                                               : json(nullptr)},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed}});
    }
    json params = {{"kinds", std::move(kind_names)},
                   {"n_min", n_min},
                   {"n_max", n_max},
                   {"fail_fast", fail_fast},
                   {"tolerances", tolerances_json(tol)}};
    json results = {{"summary", {{"total", report.claims.size()},
                                 {"failed", failed},
                                 {"by_id", tally_json(report.by_id)},
                                 {"by_kind", tally_json(report.by_kind)}}},
                    {"stopped_early", report.stopped_early},
                    {"claims", std::move(claims)},
                    {"skipped", notes_json(report.skipped)},
                    {"merged", notes_json(report.merged)}};
    emit_json(out, envelope("verify", std::move(params), std::move(results)));
    break;
  }
  case Format::csv:
    out << "id,kind,n,measured,tolerance,passed,detail\n";
    for (const auto &c : report.claims)
      out << name(c.id) << ',' << kind_label(c) << ',' << c.n << ','
          << g17(c.measured) << ',' << g17(c.tolerance) << ','
          << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
    for (const auto &m : report.merged)
      out << "# merged " << name(m.kind) << " n=" << m.n << ": " << m.reason << '\n';
    break;
  case Format::table:
    out << "claims " << report.claims.size() << ", failed " << failed
        << (report.stopped_early ? " (stopped at first failure)" : "") << '\n';
    for (const auto &[key, t] : report.by_id)
      out << "  " << key << ": " << t.total - t.failed << "/" << t.total << '\n';
    for (const auto &[key, t] : report.by_kind)
      out << "  " << key << ": " << t.total - t.failed << "/" << t.total << '\n';
    for (const auto &c : report.claims) {
      if (!c.passed)
        out << "FAIL " << name(c.id) << ' ' << kind_label(c) << " n=" << c.n << ' '
            << c.detail << ": " << g6(c.measured) << " > " << g6(c.tolerance) << '\n';
    }
    for (const auto &m : report.merged)
      out << "note: " << name(m.kind) << " n=" << m.n
          << " spectrum checked via merge path (" << m.reason << ")\n";
    for (const auto &s : report.skipped)
      out << "skipped: " << name(s.kind) << " n=" << s.n << " (" << s.reason << ")\n";
    break;
  }
  return failed == 0 ? ok : claims_failed;
}

struct IdentityRow {
  trig_sums::IdentityId id;
  std::int64_t max_param = 0;
  std::size_t points = 0;
  double max_deviation = 0.0;
  double max_ratio = 0.0; // deviation / term count
  double last_closed = 0.0;
  double last_direct = 0.0;
  bool passed = true;
};

std::vector<IdentityRow> identity_rows(std::int64_t max_m, double tol) {
  using namespace trig_sums;
  std::vector<IdentityRow> rows;
  for (auto id : all_identities) {
    IdentityRow row{id};
    for (std::int64_t n = 1;; ++n) {
      const auto d = forbidden_divisor(id, n);
      if ((d ? *d : n) > max_m)
        break;
      const DirectSummer oracle(id, n);
      const double terms = static_cast<double>(term_count(id, n));
      auto record = [&](std::int64_t a) {
        const double closed = closed_form(id, {n, a});
        const double direct = oracle.sum(a);
        const double dev = std::abs(closed - direct);
        row.max_deviation = std::max(row.max_deviation, dev);
        row.max_ratio = std::max(row.max_ratio, dev / terms);
        row.passed = row.passed && dev <= tol * terms;
        row.last_closed = closed;
        row.last_direct = direct;
        ++row.points;
      };
      if (!d) {
        record(0);
      } else {
        for (std::int64_t a = -4 * *d; a <= 4 * *d; ++a) {
          if (a % *d != 0)
            record(a);
        }
      }
      row.max_param = n;
    }
    if (row.points > 0)
      rows.push_back(row);
  }
  return rows;
}

int cmd_identities(std::int64_t max_m, Format fmt, std::ostream &out) {
  const double tol = Tolerances{}.identity;
  const auto rows = identity_rows(max_m, tol);
  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.passed; });

  switch (fmt) {
  case Format::json: {
    json arr = json::array();
    for (const auto &r : rows) {
      arr.push_back({{"identity", trig_sums::name(r.id)},
                     {"max_param", r.max_param},
                     {"points", r.points},
                     {"max_deviation", r.max_deviation},
                     {"max_deviation_per_term", r.max_ratio},
                     {"last_closed_form", r.last_closed},
                     {"last_direct", r.last_direct},
                     {"passed", r.passed}});
    }
    emit_json(out, envelope("identities",
                            {{"max_m", max_m}, {"tolerance_per_term", tol}},
                            {{"rows", std::move(arr)}, {"all_passed", all_pass}}));
    break;
  }
  case Format::csv:
    out << "identity,max_param,points,max_deviation,max_deviation_per_term,"
           "last_closed_form,last_direct,passed\n";
    for (const auto &r : rows)
      out << trig_sums::name(r.id) << ',' << r.max_param << ',' << r.points << ','
          << g17(r.max_deviation) << ',' << g17(r.max_ratio) << ','
          << g17(r.last_closed) << ',' << g17(r.last_direct) << ','
          << (r.passed ? "true" : "false") << '\n';
    break;
  case Format::table:
    out << pad("identity", 9) << pad("max n", 7) << pad("points", 8)
        << pad("max dev", 13) << pad("dev/term", 13) << pad("closed", 13)
        << pad("direct", 13) << "  ok\n";
    for (const auto &r : rows)
      out << pad(std::string(trig_sums::name(r.id)), 9)
          << pad(std::to_string(r.max_param), 7) << pad(std::to_string(r.points), 8)
          << pad(g6(r.max_deviation), 13) << pad(g6(r.max_ratio), 13)
          << pad(g6(r.last_closed), 13) << pad(g6(r.last_direct), 13)
          << (r.passed ? "  yes" : "  NO") << '\n';
    break;
  }
  return all_pass ? ok : claims_failed;
}

std::vector<std::string> kind_names() {
  std::vector<std::string> v;
  for (auto k : all_kinds)
    v.emplace_back(name(k));
  return v;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Spectral analysis and verification for symmetric DCT/DST matrices",
               "dtt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  const auto formats = CLI::IsMember({"table", "json", "csv"});
  const auto kinds = CLI::IsMember(kind_names());

  std::string kind_text;
  long long n = 0;
  std::string format = "table";

  auto *matrix = app.add_subcommand("matrix", "Print the transform matrix");
  matrix->add_option("--kind", kind_text, "Transform kind")->required()->check(kinds);
  matrix->add_option("--n", n, "Matrix order")->required();
  matrix->add_option("--format", format, "table, json or csv")->check(formats);

  auto *spectrum = app.add_subcommand("spectrum", "Print eigenvalues and multiplicities");
  spectrum->add_option("--kind", kind_text, "Transform kind")->required()->check(kinds);
  spectrum->add_option("--n", n, "Matrix order")->required();
  spectrum->add_option("--format", format, "table, json or csv")->check(formats);

  std::vector<std::string> verify_kinds;
  bool all = false;
  long long n_min = 1;
  long long n_max = 16;
  bool fail_fast = false;
  auto *verify = app.add_subcommand("verify", "Check every analytic claim over a range");
  verify->add_option("--kind", verify_kinds, "Transform kind (repeatable)")
      ->check(kinds);
  verify->add_flag("--all", all, "All eight kinds");
  verify->add_option("--n-min", n_min, "Smallest order")->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest order")->capture_default_str();
  verify->add_option("--format", format, "table, json or csv")->check(formats);
  verify->add_flag("--fail-fast", fail_fast, "Stop at the first failed claim");

  long long max_m = 0;
  auto *identities =
      app.add_subcommand("identities", "Compare trigonometric sum identities");
  identities->add_option("--max-m", max_m, "Largest modulus")->required();
  identities->add_option("--format", format, "table, json or csv")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  const auto fmt = parse_format(format);
  try {
    if (matrix->parsed())
      return cmd_matrix(kind_from(kind_text), size_from(n), fmt, out);
    if (spectrum->parsed())
      return cmd_spectrum(kind_from(kind_text), size_from(n), fmt, out);
    if (verify->parsed()) {
      if (n_min < 0 || n_max < 0 || n_min > n_max)
        throw Error(ErrorCode::InvalidArgument,
                    "invalid range [" + std::to_string(n_min) + ", " +
                        std::to_string(n_max) + "]");
      std::vector<TransformKind> selected;
      if (all)
        selected.assign(all_kinds.begin(), all_kinds.end());
      for (const auto &k : verify_kinds)
        selected.push_back(kind_from(k));
      return cmd_verify(selected, size_from(n_min), size_from(n_max), fmt, fail_fast,
                        out);
    }
    if (identities->parsed()) {
      if (max_m < 1)
        throw Error(ErrorCode::InvalidArgument, "--max-m must be >= 1");
      return cmd_identities(max_m, fmt, out);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

} // namespace dtt::cli
