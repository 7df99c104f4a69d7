// Copyright 2026 The sinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sinit/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sinit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices are written");
  out << "sinit-matrix 1\n" << "dim " << m.rows() << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_double(m(r, c).real()) << ' ' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "sinit-matrix" || version != 1) {
    throw std::runtime_error("not a sinit-matrix v1 file");
  }
  std::string key;
  long long dim = 0;
  if (!(in >> key >> dim) || key != "dim" || dim <= 0 || dim > 256) throw std::runtime_error("bad matrix dimension");
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      std::string re, im;
      if (!(in >> re >> im)) {
        throw std::runtime_error("matrix data truncated at row " + std::to_string(r + 1));
      }
      m(r, c) = Complex(std::stod(re), std::stod(im));
    }
  }
  return m;
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_matrix(out, m);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_matrix(in);
}

}  // namespace sinit
