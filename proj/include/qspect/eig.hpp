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

#pragma once

#include <vector>

#include "qspect/matrix.hpp"

namespace qspect::linalg {

/// Eigen-decomposition of a Hermitian matrix: A = V diag(lambda) V^dag with
/// eigenvalues sorted descending and orthonormal eigenvector columns.
struct EigDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi rotations on the full matrix. Stops when the off-diagonal
/// Frobenius mass drops below 1e-12 * ||A||_F, capped at 100 sweeps.
/// Throws InvalidArgument for inputs that are not Hermitian within
/// `hermitian_tol`, ConvergenceError past the sweep cap.
EigDecomposition hermitian_eig(const ComplexMatrix &a,
                               double hermitian_tol = 1e-8);

} // namespace qspect::linalg
