#pragma once

#include "hopf/hopf_data.hpp"

namespace hopf {

// Dense exact linear algebra over a Scalar field, used for antipode
// inversion and convolution-invertibility solves. Row-major matrices.
struct ScalarMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    static ScalarMatrix zero(const Field& f, std::size_t r, std::size_t c);
};

// Solve A x = b exactly; nullopt when inconsistent. Underdetermined systems
// return one solution (free variables set to zero).
std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix A, std::vector<Scalar> b);

// Exact inverse; nullopt when singular.
std::optional<ScalarMatrix> invert(const ScalarMatrix& A);

// Dual Hopf algebra on delta-functional basis ids (name suffixed "*"):
// multiplication is the transpose of comultiplication and vice versa.
// Finite bases only.
HopfPtr dual(HopfPtr H);

enum class OpCop { Op, Cop, Both };

// Opposite / co-opposite structure. When the antipode is not involutive it
// is replaced by its exact inverse (finite bases), so the result is again a
// Hopf algebra.
HopfPtr op_cop(HopfPtr H, OpCop which);

}  // namespace hopf
