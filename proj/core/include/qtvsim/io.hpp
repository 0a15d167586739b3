#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtvsim/evolution.hpp"
#include "qtvsim/types.hpp"

namespace qtvsim {

// 12 significant digits, shortest form ("%.12g"); every number the
// library writes goes through this so reruns are byte-identical.
std::string format_number(double value);

// Flat "key = value" document with '#' comments. Values stay strings;
// typed getters convert on demand and point at the source line when the
// text does not parse.
class ConfigDoc {
 public:
  static ConfigDoc parse_file(const std::string& path);
  static ConfigDoc parse_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::vector<std::string>& keys() const { return order_; }

  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_uint64(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  // comma-separated list of numbers in one value
  std::vector<double> get_double_list(const std::string& key) const;

  // Rejects any key outside the allowed set (unknown keys are config
  // errors, not parse errors).
  void require_known_keys(const std::vector<std::string>& allowed) const;

 private:
  struct Entry {
    std::string value;
    int line;
  };
  const Entry& entry(const std::string& key) const;

  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// Headerless CSV of reals, cells through format_number.
void write_real_matrix_csv(const std::string& path, const RealMatrix& m);

// Headerless CSV of doubles; skip_lines drops leading lines (headers).
RealMatrix read_real_matrix_csv(const std::string& path, int skip_lines = 0);

// Complex matrix from "a+bi" cells in a single CSV.
ComplexMatrix read_complex_matrix_csv(const std::string& path);

// Complex matrix from two real CSVs of equal shape.
ComplexMatrix read_complex_matrix_pair(const std::string& real_path,
                                       const std::string& imag_path);

// One complex number in "a", "bi", or "a+bi" form (also 'j' accepted).
Complex parse_complex_cell(const std::string& text, int line, int column);

// trace table with its fixed header row
void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& records);

}  // namespace qtvsim
