#include "qtvsim/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qtvsim/errors.hpp"

namespace qtvsim {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

double parse_double(const std::string& text, int line, int column) {
  std::string t = trim(text);
  if (t.empty()) {
    throw ParseError("expected a number, got an empty cell", line, column);
  }
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &consumed);
  } catch (const std::exception&) {
    throw ParseError("'" + t + "' is not a number", line, column);
  }
  if (consumed != t.size()) {
    throw ParseError("trailing characters after number in '" + t + "'", line, column);
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

ConfigDoc ConfigDoc::parse_file(const std::string& path) {
  return parse_string(read_file(path));
}

ConfigDoc ConfigDoc::parse_string(const std::string& text) {
  ConfigDoc doc;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (trim(line).empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", line_no, 1);
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("empty key", line_no, 1);
    }
    if (doc.entries_.count(key)) {
      throw ParseError("duplicate key '" + key + "'", line_no, 1);
    }
    doc.entries_[key] = Entry{value, line_no};
    doc.order_.push_back(key);
  }
  return doc;
}

bool ConfigDoc::has(const std::string& key) const { return entries_.count(key) > 0; }

const ConfigDoc::Entry& ConfigDoc::entry(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw InvalidConfigError("missing config key '" + key + "'");
  }
  return it->second;
}

double ConfigDoc::get_double(const std::string& key) const {
  const Entry& e = entry(key);
  return parse_double(e.value, e.line, 1);
}

int ConfigDoc::get_int(const std::string& key) const {
  const Entry& e = entry(key);
  double v = parse_double(e.value, e.line, 1);
  int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ParseError("'" + e.value + "' is not an integer", e.line, 1);
  }
  return i;
}

std::uint64_t ConfigDoc::get_uint64(const std::string& key) const {
  const Entry& e = entry(key);
  std::string t = trim(e.value);
  if (!t.empty() && t[0] == '-') {  // stoull would wrap silently
    throw ParseError("'" + t + "' is not an unsigned integer", e.line, 1);
  }
  size_t consumed = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &consumed);
  } catch (const std::exception&) {
    throw ParseError("'" + t + "' is not an unsigned integer", e.line, 1);
  }
  if (consumed != t.size()) {
    throw ParseError("trailing characters after number in '" + t + "'", e.line, 1);
  }
  return static_cast<std::uint64_t>(v);
}

std::string ConfigDoc::get_string(const std::string& key) const {
  return entry(key).value;
}

std::vector<double> ConfigDoc::get_double_list(const std::string& key) const {
  const Entry& e = entry(key);
  std::vector<double> out;
  int column = 1;
  for (const std::string& cell : split(e.value, ',')) {
    out.push_back(parse_double(cell, e.line, column));
    ++column;
  }
  return out;
}

void ConfigDoc::require_known_keys(const std::vector<std::string>& allowed) const {
  for (const std::string& key : order_) {
    bool known = false;
    for (const std::string& a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InvalidConfigError("unknown config key '" + key + "'");
    }
  }
}

void write_real_matrix_csv(const std::string& path, const RealMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_number(m(i, j));
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

namespace {

std::vector<std::vector<std::string>> read_csv_cells(const std::string& path,
                                                     int skip_lines) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no <= skip_lines) continue;
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) {
    throw ParseError("'" + path + "' holds no data rows", 1, 1);
  }
  size_t width = rows[0].size();
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw ParseError("row has " + std::to_string(rows[r].size()) +
                           " cells, expected " + std::to_string(width),
                       static_cast<int>(r) + 1 + skip_lines, 1);
    }
  }
  return rows;
}

}  // namespace

RealMatrix read_real_matrix_csv(const std::string& path, int skip_lines) {
  auto rows = read_csv_cells(path, skip_lines);
  RealMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_double(
          rows[i][j], static_cast<int>(i) + 1 + skip_lines, static_cast<int>(j) + 1);
    }
  }
  return m;
}

ComplexMatrix read_complex_matrix_csv(const std::string& path) {
  auto rows = read_csv_cells(path, 0);
  ComplexMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_complex_cell(rows[i][j], static_cast<int>(i) + 1,
                             static_cast<int>(j) + 1);
    }
  }
  return m;
}

ComplexMatrix read_complex_matrix_pair(const std::string& real_path,
                                       const std::string& imag_path) {
  RealMatrix re = read_real_matrix_csv(real_path);
  RealMatrix im = read_real_matrix_csv(imag_path);
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw InvalidShapeError("real part is " + std::to_string(re.rows()) + "x" +
                            std::to_string(re.cols()) + " but imaginary part is " +
                            std::to_string(im.rows()) + "x" +
                            std::to_string(im.cols()));
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Complex parse_complex_cell(const std::string& text, int line, int column) {
  std::string t = trim(text);
  if (t.empty()) {
    throw ParseError("expected a complex number, got an empty cell", line, column);
  }
  char tail = t.back();
  bool has_imag_unit = tail == 'i' || tail == 'j';
  if (!has_imag_unit) {
    return Complex(parse_double(t, line, column), 0.0);
  }
  std::string body = t.substr(0, t.size() - 1);
  // find the sign separating real and imaginary parts, skipping exponent
  // signs and the leading sign
  size_t sep = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      sep = k;
      break;
    }
  }
  auto parse_imag_coeff = [&](const std::string& coeff) {
    if (coeff.empty() || coeff == "+") return 1.0;
    if (coeff == "-") return -1.0;
    return parse_double(coeff, line, column);
  };
  if (sep == std::string::npos) {
    return Complex(0.0, parse_imag_coeff(body));
  }
  double re = parse_double(body.substr(0, sep), line, column);
  double im = parse_imag_coeff(body.substr(sep));
  return Complex(re, im);
}

void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << "t,two_norm,spectral_radius,qtv_real,qtv_abs,purity,qee,coherence,trace_H\n";
  for (const TraceRecord& r : records) {
    out << r.step << ',' << format_number(r.two_norm) << ','
        << format_number(r.spectral_radius) << ',' << format_number(r.qtv_real) << ','
        << format_number(r.qtv_abs) << ',' << format_number(r.purity) << ','
        << format_number(r.qee) << ',' << format_number(r.coherence) << ','
        << format_number(r.trace_h) << '\n';
  }
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace qtvsim
