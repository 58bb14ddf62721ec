#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bicell/characters.hpp"
#include "bicell/charsum.hpp"
#include "bicell/counting.hpp"
#include "bicell/error.hpp"
#include "bicell/oracle.hpp"
#include "bicell/parallel.hpp"
#include "bicell/zeros.hpp"

namespace bicell::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count();
}

// Genus table when every occupied degree maps to a genus >= 0; disconnected
// maps can break that, in which case there is no table.
std::optional<GenusDistribution> try_genus(const BicellularInstance& inst, const RatPoly& poly) {
  const int top = inst.n() - inst.mu().length();
  for (const auto& [m, c] : poly.terms())
    if (m > top || (top - m) % 2 != 0) return std::nullopt;
  return genus_distribution(inst, poly);
}

void fill_checks(PolyReport& report) {
  if (report.poly.is_zero()) {
    report.imag_axis = false;
    report.log_concave = true;
    return;
  }
  report.imag_axis = imaginary_axis_check(report.poly);
  report.log_concave = log_concavity_check(report.poly);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

PolyReport compute_poly(const PolyRequest& request) {
  const auto start = Clock::now();
  const BicellularInstance inst(request.n, request.p, request.mu);

  PolyReport report;
  report.n = inst.n();
  report.p = inst.p();
  report.mu = inst.mu();
  report.method = request.method;

  const OracleOptions oracle_options{request.max_class_size, request.threads};
  const Partition face = inst.face_type();

  if (report.method == "closed" && !inst.closed_form_valid()) {
    report.method = request.connected ? "oracle" : "charsum";
    report.warnings.push_back("min(mu)=" + std::to_string(inst.mu().smallest()) + " <= p=" +
                              std::to_string(inst.p()) + ": closed form does not apply, using " + report.method);
  }

  if (report.method == "closed") {
    report.poly = request.connected ? poly_connected(inst) : poly_closed(inst);
  } else if (report.method == "charsum") {
    if (request.connected && !inst.closed_form_valid())
      throw InvalidInput("connected-only counts outside the closed-form regime need --method oracle");
    report.poly = poly_charsum(inst.n(), face, inst.mu());
  } else if (report.method == "oracle") {
    report.poly = oracle_poly(inst.n(), face, inst.mu(), request.connected, oracle_options);
  } else {
    throw InvalidInput("unknown method '" + report.method + "' (expected closed, charsum or oracle)");
  }

  report.genus = try_genus(inst, report.poly);
  fill_checks(report);
  report.ms = elapsed_ms(start);
  return report;
}

std::string render_text(const PolyReport& report) {
  std::ostringstream out;
  out << "instance: n=" << report.n << " p=" << report.p << " mu=" << report.mu.to_string() << "\n";
  out << "method:   " << report.method << "\n";
  out << "P(x) = " << report.poly.to_string() << "\n";
  if (report.genus) {
    out << "genus distribution (of " << report.genus->class_size.get_str() << "):\n";
    for (const auto& [g, c] : report.genus->counts) out << "  g=" << g << ": " << c.get_str() << "\n";
  } else {
    out << "genus distribution: undefined (disconnected maps present)\n";
  }
  out << "imaginary-axis zeros: " << yes_no(report.imag_axis) << "\n";
  out << "log-concave:          " << yes_no(report.log_concave) << "\n";
  out << "time: " << report.ms << " ms\n";
  return out.str();
}

nlohmann::json to_json(const PolyReport& report) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [d, c] : report.poly.terms())
    coeffs.push_back({{"deg", d}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  nlohmann::json genus = nlohmann::json::object();
  if (report.genus)
    for (const auto& [g, c] : report.genus->counts) genus[std::to_string(g)] = c.get_str();
  return {
      {"n", report.n},
      {"p", report.p},
      {"mu", report.mu.parts()},
      {"method", report.method},
      {"coeffs", coeffs},
      {"genus", genus},
      {"checks", {{"imag_axis", report.imag_axis}, {"log_concave", report.log_concave}}},
      {"ms", report.ms},
  };
}

PolyReport poly_report_from_json(const nlohmann::json& doc) {
  PolyReport report;
  try {
    report.n = doc.at("n").get<int>();
    report.p = doc.at("p").get<int>();
    report.mu = Partition::from_unsorted(doc.at("mu").get<std::vector<int>>());
    report.method = doc.at("method").get<std::string>();
    std::vector<Rational> coeffs;
    for (const auto& term : doc.at("coeffs")) {
      const int d = term.at("deg").get<int>();
      if (d < 0) throw InvalidInput("negative degree in report");
      if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1);
      coeffs[d] = make_rational(Integer(term.at("num").get<std::string>()), Integer(term.at("den").get<std::string>()));
    }
    report.poly = RatPoly(std::move(coeffs));
    const auto& genus = doc.at("genus");
    if (!genus.empty()) {
      GenusDistribution dist;
      dist.class_size = class_size(report.mu);
      for (const auto& [g, c] : genus.items()) dist.counts[std::stoi(g)] = Integer(c.get<std::string>());
      report.genus = dist;
    }
    report.imag_axis = doc.at("checks").at("imag_axis").get<bool>();
    report.log_concave = doc.at("checks").at("log_concave").get<bool>();
    report.ms = doc.at("ms").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return report;
}

std::string csv_header() { return "n,p,mu,poly,genus_counts,imag_axis,log_concave,method,ms"; }

std::string csv_row(const PolyReport& report, bool with_timing) {
  std::ostringstream out;
  out << report.n << ',' << report.p << ',' << csv_quote(report.mu.to_string()) << ','
      << csv_quote(report.poly.to_string()) << ',' << (report.genus ? report.genus->to_string() : "") << ','
      << (report.imag_axis ? "true" : "false") << ',' << (report.log_concave ? "true" : "false") << ','
      << report.method << ',';
  if (with_timing) out << report.ms;
  return out.str();
}

namespace {

struct CheckLine {
  std::string suite;
  std::string instance;
  std::vector<std::string> failures;
};

CheckLine check_closed(const BicellularInstance& inst, const OracleOptions& options) {
  CheckLine line{"closed", inst.to_string(), {}};
  const RatPoly closed = poly_closed(inst);
  const RatPoly charsum = poly_charsum(inst.n(), inst.face_type(), inst.mu());
  const RatPoly oracle = oracle_poly(inst.n(), inst.face_type(), inst.mu(), false, options);
  if (closed != charsum) line.failures.push_back("closed=" + closed.to_string() + " charsum=" + charsum.to_string());
  if (closed != oracle) line.failures.push_back("closed=" + closed.to_string() + " oracle=" + oracle.to_string());
  return line;
}

CheckLine check_w(const BicellularInstance& inst) {
  CheckLine line{"w", inst.to_string(), {}};
  const ClassList classes(inst.n(), {inst.mu(), inst.face_type()});
  const CharacterProfile profile = character_profile(classes);
  for (int r = 1; r <= inst.n(); ++r) {
    const Rational closed = w_number_bicellular(inst, r);
    const Rational sum = w_number(profile, r);
    if (closed != sum)
      line.failures.push_back("r=" + std::to_string(r) + " closed=" + to_string(closed) + " sum=" + to_string(sum));
  }
  return line;
}

CheckLine check_connectivity(const BicellularInstance& inst, const OracleOptions& options) {
  CheckLine line{"connectivity", inst.to_string(), {}};
  const Permutation gamma = canonical_gamma(inst.p(), inst.n());
  const CycleHistogram all = oracle_histogram(gamma, inst.mu(), false, options);
  const CycleHistogram connected = oracle_histogram(gamma, inst.mu(), true, options);
  if (all.counts != connected.counts) {
    std::uint64_t a = 0, c = 0;
    for (auto v : all.counts) a += v;
    for (auto v : connected.counts) c += v;
    line.failures.push_back("connected " + std::to_string(c) + " of " + std::to_string(a));
  }
  return line;
}

CheckLine check_zeros(const BicellularInstance& inst) {
  CheckLine line{"zeros", inst.to_string(), {}};
  for (const auto& record : verify_zero_claims(inst.to_string(), poly_closed(inst)))
    line.failures.push_back(record.to_string());
  return line;
}

}  // namespace

int run_verify(const VerifyRequest& request, std::ostream& out) {
  static const std::vector<std::string> kSuites{"closed", "w", "connectivity", "zeros"};
  std::vector<std::string> suites;
  if (request.suite == "all") suites = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), request.suite) != kSuites.end()) suites = {request.suite};
  else throw InvalidInput("unknown suite '" + request.suite + "'");

  const auto instances = valid_instances(request.max_n);
  // Each instance is checked serially inside; instances run in parallel.
  const OracleOptions options{request.max_class_size, 1};
  std::vector<std::vector<CheckLine>> results(instances.size());
  parallel_for(instances.size(), request.threads, [&](std::size_t i) {
    for (const auto& suite : suites) {
      if (suite == "closed") results[i].push_back(check_closed(instances[i], options));
      else if (suite == "w") results[i].push_back(check_w(instances[i]));
      else if (suite == "connectivity") results[i].push_back(check_connectivity(instances[i], options));
      else results[i].push_back(check_zeros(instances[i]));
    }
  });

  const char* green = request.color ? "\033[32m" : "";
  const char* red = request.color ? "\033[31m" : "";
  const char* reset = request.color ? "\033[0m" : "";
  std::size_t checks = 0, failures = 0;
  for (const auto& lines : results)
    for (const auto& line : lines) {
      ++checks;
      if (line.failures.empty()) {
        out << green << "PASS" << reset << ' ' << line.suite << ' ' << line.instance << '\n';
        continue;
      }
      ++failures;
      out << red << "FAIL" << reset << ' ' << line.suite << ' ' << line.instance;
      for (const auto& f : line.failures) out << " | " << f;
      out << '\n';
    }
  out << "summary: " << instances.size() << " instances, " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kOk : kInternal;
}

void run_census(const CensusRequest& request, std::ostream& out) {
  const auto instances = valid_instances(request.max_n);
  std::vector<std::string> rows(instances.size());
  parallel_for(instances.size(), request.threads, [&](std::size_t i) {
    const auto& inst = instances[i];
    PolyRequest poly;
    poly.n = inst.n();
    poly.p = inst.p();
    poly.mu = inst.mu();
    poly.threads = 1;
    rows[i] = csv_row(compute_poly(poly), request.with_timing);
  });
  out << csv_header() << '\n';
  for (const auto& row : rows) out << row << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Genus distributions of two-face bicolored maps, computed exactly", "bicell"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = one per hardware thread)");

  std::uint64_t max_class_size = 50'000'000;
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--max-class-size", max_class_size, "Largest class the brute-force oracle may enumerate");
  };

  PolyRequest poly;
  std::string mu_text;
  std::string format = "text";
  auto* poly_cmd = app.add_subcommand("poly", "Genus distribution polynomial of one instance");
  poly_cmd->add_option("--n", poly.n, "Number of edges")->required();
  poly_cmd->add_option("--p", poly.p, "Length of one face (the other is n-p)")->required();
  poly_cmd->add_option("--mu", mu_text, "White vertex degrees, e.g. 3,3 or 2^3,1")->required();
  poly_cmd->add_option("--method", poly.method, "closed | charsum | oracle")
      ->check(CLI::IsMember({"closed", "charsum", "oracle"}));
  poly_cmd->add_flag("--connected", poly.connected, "Count connected maps only");
  poly_cmd->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  add_guard(poly_cmd);

  VerifyRequest verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed form, character sums and brute force");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n to check");
  verify_cmd->add_option("--suite", verify.suite, "closed | w | connectivity | zeros | all")
      ->check(CLI::IsMember({"closed", "w", "connectivity", "zeros", "all"}));
  add_guard(verify_cmd);

  std::string lambda_text, char_mu_text;
  auto* char_cmd = app.add_subcommand("char", "Irreducible character value chi^lambda(mu)");
  char_cmd->add_option("--lambda", lambda_text, "Shape")->required();
  char_cmd->add_option("--mu", char_mu_text, "Cycle type")->required();

  CensusRequest census;
  std::string out_path;
  auto* census_cmd = app.add_subcommand("census", "CSV table over every closed-form instance");
  census_cmd->add_option("--max-n", census.max_n, "Largest n");
  census_cmd->add_option("--out", out_path, "Output file (default: standard output)");
  census_cmd->add_flag("--timing", census.with_timing, "Fill the ms column (makes output run-dependent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*poly_cmd) {
      poly.mu = Partition::parse(mu_text);
      poly.threads = threads;
      poly.max_class_size = max_class_size;
      const PolyReport report = compute_poly(poly);
      for (const auto& w : report.warnings) err << "warning: " << w << "\n";
      if (format == "json") out << to_json(report).dump() << "\n";
      else if (format == "csv") out << csv_header() << "\n" << csv_row(report, true) << "\n";
      else out << render_text(report);
      return kOk;
    }
    if (*verify_cmd) {
      verify.threads = threads;
      verify.max_class_size = max_class_size;
      verify.color = color;
      return run_verify(verify, out);
    }
    if (*char_cmd) {
      out << mn_character(Partition::parse(lambda_text), Partition::parse(char_mu_text)).get_str() << "\n";
      return kOk;
    }
    if (*census_cmd) {
      census.threads = threads;
      if (out_path.empty()) {
        run_census(census, out);
        return kOk;
      }
      std::ofstream file(out_path);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kIoError;
      }
      run_census(census, file);
      file.flush();
      if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return kIoError;
      }
      return kOk;
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace bicell::cli
