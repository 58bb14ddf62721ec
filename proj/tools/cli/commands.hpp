#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicell/closed_form.hpp"
#include "bicell/partition.hpp"
#include "bicell/ratpoly.hpp"

namespace bicell::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kGuardExceeded = 3,
  kIoError = 4,
};

struct PolyRequest {
  int n = 0;
  int p = 0;
  Partition mu;
  std::string method = "closed";  ///< closed | charsum | oracle
  bool connected = false;
  unsigned threads = 0;
  std::uint64_t max_class_size = 50'000'000;
};

struct PolyReport {
  int n = 0;
  int p = 0;
  Partition mu;
  std::string method;
  RatPoly poly;
  std::optional<GenusDistribution> genus;
  bool imag_axis = false;
  bool log_concave = false;
  std::int64_t ms = 0;
  std::vector<std::string> warnings;
};

/// Computes the polynomial with the requested method. "closed" falls back to
/// "charsum" (or "oracle" for connected-only counts) outside its regime and
/// records a warning.
PolyReport compute_poly(const PolyRequest& request);

std::string render_text(const PolyReport& report);
nlohmann::json to_json(const PolyReport& report);
/// Inverse of to_json; rebuilds the exact polynomial from its string fields.
PolyReport poly_report_from_json(const nlohmann::json& doc);

std::string csv_header();
/// One CSV record; the ms column is left empty unless with_timing.
std::string csv_row(const PolyReport& report, bool with_timing);

struct VerifyRequest {
  int max_n = 8;
  std::string suite = "all";  ///< closed | w | connectivity | zeros | all
  unsigned threads = 0;
  std::uint64_t max_class_size = 50'000'000;
  bool color = false;
};

/// Prints one PASS/FAIL line per (suite, instance) and a summary. Returns
/// kOk iff no counterexample was produced.
int run_verify(const VerifyRequest& request, std::ostream& out);

struct CensusRequest {
  int max_n = 7;
  unsigned threads = 0;
  bool with_timing = false;
};

/// Writes the census CSV for every closed-form instance up to max_n.
void run_census(const CensusRequest& request, std::ostream& out);

/// Entry point shared by the executable and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color);

}  // namespace bicell::cli
