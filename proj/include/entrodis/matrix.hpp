// Copyright 2026 The Entrodis Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entrodis {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Plain value type: copyable, immutable by
/// convention once handed to a consumer.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;  // rows * cols entries, row-major

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static ComplexMatrix zeros(std::size_t r, std::size_t c) { return {r, c}; }
  static ComplexMatrix identity(std::size_t n);

  cplx& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool is_square() const { return rows == cols; }
  std::size_t size() const { return data.size(); }
};

// Arithmetic. Multiplication routes through the kernel dispatch layer.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply_nh(const ComplexMatrix& a, const ComplexMatrix& b);  // a * b^dagger
ComplexMatrix multiply_hn(const ComplexMatrix& a, const ComplexMatrix& b);  // a^dagger * b
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scaled(const ComplexMatrix& a, cplx factor);
void accumulate(ComplexMatrix& target, const ComplexMatrix& term, cplx factor = 1.0);
ComplexMatrix adjoint(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);
/// Tr[a^dagger b]; the Hilbert-Schmidt inner product.
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Kronecker product; output is (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column j as an amplitude vector.
std::vector<cplx> column(const ComplexMatrix& a, std::size_t j);

/// |u><v| for amplitude vectors u, v.
ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);

}  // namespace entrodis
