#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qtvsim/random.hpp"
#include "qtvsim/types.hpp"

namespace qtvsim::testing {

inline ComplexMatrix random_complex(int rows, int cols, RandomStream& stream) {
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      m(i, j) = Complex(stream.next_gaussian(), stream.next_gaussian());
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(int dim, RandomStream& stream) {
  ComplexMatrix a = random_complex(dim, dim, stream);
  return (a + a.adjoint()) / 2.0;
}

inline ComplexMatrix random_psd(int dim, RandomStream& stream) {
  ComplexMatrix a = random_complex(dim, dim, stream);
  return a.adjoint() * a;
}

inline RealMatrix random_nonnegative(int dim, RandomStream& stream) {
  RealMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      m(i, j) = stream.next_uniform();
    }
  }
  return m;
}

// random point on the simplex (exponential spacings)
inline RealVector random_simplex(int dim, RandomStream& stream) {
  RealVector w(dim);
  for (int i = 0; i < dim; ++i) {
    w(i) = -std::log(1.0 - stream.next_uniform());
  }
  return w / w.sum();
}

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

// Runs the built CLI with the given argument string; stderr is dropped.
inline CommandResult run_cli(const std::string& cli_path, const std::string& args,
                             const std::string& scratch_dir) {
  std::string out_file = scratch_dir + "/cmd_stdout.txt";
  std::string command = cli_path + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

inline std::string make_temp_dir(const std::string& tag) {
  std::string pattern = "/tmp/qtvsim_" + tag + "_XXXXXX";
  std::string buf = pattern;
  if (mkdtemp(buf.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed for " + pattern);
  }
  return buf;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// value of "key = ..." in CLI output
inline double parse_output_value(const std::string& text, const std::string& key) {
  size_t pos = text.find(key + " = ");
  if (pos == std::string::npos) {
    throw std::runtime_error("key '" + key + "' not found in output:\n" + text);
  }
  return std::stod(text.substr(pos + key.size() + 3));
}

}  // namespace qtvsim::testing
