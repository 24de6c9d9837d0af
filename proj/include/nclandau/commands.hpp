#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nclandau/run_config.hpp"

namespace nclandau {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Row-oriented output table. `schema` names the column layout and is
/// versioned in the CSV header comment.
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> metadata;
};

/// "%.17g", with "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double value);

/// '#'-prefixed schema and metadata lines, a header row, then the rows.
void write_csv(const Table& table, std::ostream& out);
/// Array of row objects keyed by column name; non-finite numbers become null.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

/// Enumerated Landau levels with their shift from the commutative spectrum.
Table cmd_spectrum(const RunConfig& config);

/// One row per sweep value. Points where the parameters are invalid (e.g.
/// theta = 0 in phase mode) produce a row with NaN values and an error
/// status instead of aborting the sweep. Points are evaluated in parallel on
/// up to sweep_thread_count() threads.
Table cmd_sweep(const RunConfig& config);

/// Normalized radial wavefunction sampled uniformly on [0, rho_max].
Table cmd_wavefunction(const RunConfig& config, int n_rho, int m, int samples);

struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool pass = false;
};

/// Bopp-map algebra, coefficient matching against the closed form, and the
/// finite-difference oracle for m in {0, 1, 2}, n_rho <= 2.
VerifyReport cmd_verify(const RunConfig& config);

void write_verify_report(const VerifyReport& report, std::ostream& out);

/// NCLANDAU_THREADS if set to a positive integer, else hardware concurrency.
unsigned sweep_thread_count();

}  // namespace nclandau
