// Copyright 2026 The qspect authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra sized for 2^q-dimensional spaces, q <= ~13.
 *
 * Conventions used throughout the library:
 *  - storage is row-major, dimensions are powers of two;
 *  - qubit 0 is the most significant bit of row/column indices, matching
 *    left-to-right tensor order (kron(A, B) puts A on qubit 0).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qspect/errors.hpp"

namespace qspect::linalg {

using cplx = std::complex<double>;

/// Dense square complex matrix of power-of-two dimension. Immutable by
/// convention once built: all operations below return new matrices.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// Zero matrix of the given dimension. Checks the memory cap and that
    /// dim is a power of two.
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t qubits() const noexcept;

    cplx &operator()(std::size_t row, std::size_t col) noexcept {
        return a_[row * dim_ + col];
    }
    const cplx &operator()(std::size_t row, std::size_t col) const noexcept {
        return a_[row * dim_ + col];
    }

    std::vector<cplx> &data() noexcept { return a_; }
    const std::vector<cplx> &data() const noexcept { return a_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix dagger() const;

    cplx trace() const;

    /// max |A[i][j] - conj(A[j][i])|.
    double hermiticity_residual() const;
    bool is_hermitian(double tol = 1e-10) const {
        return hermiticity_residual() <= tol;
    }

    /// ||U U^dag - I||_F.
    double unitarity_residual() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix a) {
        a *= scale;
        return a;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

/// A * B by the textbook triple loop with a fixed summation order.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tensor product; (A kron B)[(i1,i2),(j1,j2)] = A[i1][j1] * B[i2][j2].
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Traces out the qubits in `traced_qubits` (indices into [0, q)) of a
/// 2^q-dimensional matrix. Remaining qubits keep their relative order.
ComplexMatrix partial_trace(const ComplexMatrix &a,
                            const std::vector<std::size_t> &traced_qubits,
                            std::size_t qubit_count);

double frobenius_norm(const ComplexMatrix &a);
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

enum class Side { Left, Right, Conjugate };

/// Applies a small unitary G on `target_qubits` of A without materializing
/// the kron embedding: Left gives (I x G x I) A, Right gives A (I x G x I)^dag,
/// Conjugate gives (I x G x I) A (I x G x I)^dag. Targets must be distinct
/// and in range; G.dim() must be 2^{targets.size()}. The embedding is
/// iterated over strided fibers, one output entry at a time.
ComplexMatrix apply_gate(const ComplexMatrix &a, const ComplexMatrix &gate,
                         const std::vector<std::size_t> &target_qubits,
                         Side side);

namespace detail {
/// In-place fiber transform over row indices: data is an n_rows x n_cols
/// row-major block, rows are grouped by the bit positions of
/// `target_qubits` (qubit 0 = MSB of the row index within `row_qubits`
/// qubits), and each fiber is multiplied by `gate`. Shared by matrix and
/// state-vector gate application.
void apply_left_rows(cplx *data, std::size_t n_cols, std::size_t row_qubits,
                     const ComplexMatrix &gate,
                     const std::vector<std::size_t> &target_qubits);
} // namespace detail

} // namespace qspect::linalg
