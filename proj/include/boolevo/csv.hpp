#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "boolevo/sweep.hpp"

namespace boolevo {

inline constexpr std::string_view kRowsHeader =
    "run_id,combo_p0,combo_alpha,seed,fitness_variant,crossover,n,budget,"
    "best_balanced_nl,best_fitness,evals_to_best,wallclock_ms,best_table_hex";

inline constexpr std::string_view kAggregateHeader =
    "p0,alpha,runs,count_ge_threshold,count_eq_optimum,success_rate";

enum class ExportFormat { Rows, Aggregate };

// Shortest decimal representation that round-trips; keeps exports byte-stable.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline void write_row(std::ostream& os, std::uint64_t run_id, double p0, double alpha,
                      const RunResult& r) {
  const std::uint64_t evals_to_best =
      r.best_fitness_trace.empty() ? 0 : r.best_fitness_trace.back().first;
  os << run_id << ',' << format_double(p0) << ',' << format_double(alpha) << ',' << r.seed << ','
     << to_string(r.config.fitness) << ',' << to_string(r.config.crossover) << ',' << r.config.n
     << ',' << r.config.budget << ',' << r.best_balanced_nonlinearity << ','
     << format_double(r.best_individual.fitness) << ',' << evals_to_best << ','
     << format_double(r.wallclock_ms) << ','
     << format_truth_table_hex(r.best_individual.chromosome) << '\n';
}

}  // namespace detail

// One record per run, (combo, run) order.
inline void write_rows(const SweepGrid& grid, std::ostream& os) {
  os << kRowsHeader << '\n';
  std::uint64_t run_id = 0;
  for (const SweepCombo& combo : grid.combos) {
    for (const RunResult& r : combo.runs) {
      detail::write_row(os, run_id++, combo.p0, combo.alpha, r);
    }
  }
}

inline void write_rows(const RunResult& result, std::ostream& os) {
  os << kRowsHeader << '\n';
  detail::write_row(os, 0, result.config.p0, result.config.alpha, result);
}

// One record per (p0, alpha) combination with the stored aggregates.
inline void write_aggregate(const SweepGrid& grid, std::ostream& os) {
  os << kAggregateHeader << '\n';
  for (const SweepCombo& combo : grid.combos) {
    os << format_double(combo.p0) << ',' << format_double(combo.alpha) << ','
       << combo.runs.size() << ',' << combo.count_ge_threshold << ',' << combo.count_eq_optimum
       << ',' << format_double(combo.success_rate) << '\n';
  }
}

inline void write_aggregate(const RunResult& result, std::ostream& os) {
  os << kAggregateHeader << '\n';
  const int threshold = default_threshold(result.config.n);
  const int optimum = default_optimum(result.config.n);
  const bool ge = result.best_balanced_nonlinearity >= threshold;
  const bool eq = result.best_balanced_nonlinearity == optimum;
  os << format_double(result.config.p0) << ',' << format_double(result.config.alpha) << ",1,"
     << (ge ? 1 : 0) << ',' << (eq ? 1 : 0) << ',' << format_double(ge ? 1.0 : 0.0) << '\n';
}

namespace detail {

template <class T>
void export_to_file(const T& value, const std::filesystem::path& path, ExportFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  if (format == ExportFormat::Rows) {
    write_rows(value, os);
  } else {
    write_aggregate(value, os);
  }
  os.flush();
  if (!os) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace detail

inline void export_results(const SweepGrid& grid, const std::filesystem::path& path,
                           ExportFormat format) {
  detail::export_to_file(grid, path, format);
}

inline void export_results(const RunResult& result, const std::filesystem::path& path,
                           ExportFormat format) {
  detail::export_to_file(result, path, format);
}

// Parsed `rows` record; fields mirror kRowsHeader.
struct RowRecord {
  std::uint64_t run_id = 0;
  double combo_p0 = 0.0;
  double combo_alpha = 0.0;
  std::uint64_t seed = 0;
  std::string fitness_variant;
  std::string crossover;
  int n = 0;
  std::uint64_t budget = 0;
  int best_balanced_nl = 0;
  double best_fitness = 0.0;
  std::uint64_t evals_to_best = 0;
  double wallclock_ms = 0.0;
  std::string best_table_hex;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

template <class T>
T parse_number(const std::string& field, const char* what) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error(std::string("rows csv: bad ") + what + " field '" + field + "'");
  }
  return value;
}

}  // namespace detail

inline std::vector<RowRecord> read_rows(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kRowsHeader) {
    throw std::runtime_error("rows csv: missing or unexpected header");
  }
  std::vector<RowRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 13) {
      throw std::runtime_error("rows csv: expected 13 fields, got " + std::to_string(f.size()));
    }
    RowRecord r;
    r.run_id = detail::parse_number<std::uint64_t>(f[0], "run_id");
    r.combo_p0 = detail::parse_number<double>(f[1], "combo_p0");
    r.combo_alpha = detail::parse_number<double>(f[2], "combo_alpha");
    r.seed = detail::parse_number<std::uint64_t>(f[3], "seed");
    r.fitness_variant = f[4];
    r.crossover = f[5];
    r.n = detail::parse_number<int>(f[6], "n");
    r.budget = detail::parse_number<std::uint64_t>(f[7], "budget");
    r.best_balanced_nl = detail::parse_number<int>(f[8], "best_balanced_nl");
    r.best_fitness = detail::parse_number<double>(f[9], "best_fitness");
    r.evals_to_best = detail::parse_number<std::uint64_t>(f[10], "evals_to_best");
    r.wallclock_ms = detail::parse_number<double>(f[11], "wallclock_ms");
    r.best_table_hex = f[12];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<RowRecord> read_rows(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  return read_rows(is);
}

}  // namespace boolevo
