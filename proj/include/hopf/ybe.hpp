#pragma once

#include "hopf/pairings.hpp"

namespace hopf {

// Corepresentation: a basis with a coaction m -> m0 (x) m1 into
// (comodule (x) algebra) pairs; coassociativity and the counit law are
// checkable on the window.
struct Comodule {
    HopfPtr algebra;
    std::vector<BasisId> basis;
    LinMap coaction;  // arity 1, values over pair ids (m-id, algebra-id)

    // Regular corepresentation: coaction = comultiplication.
    static Comodule regular(HopfPtr A);
    // One-dimensional trivial comodule m -> m (x) 1.
    static Comodule trivial(HopfPtr A, BasisId m);
    // Block direct sum (bases must be disjoint).
    static Comodule direct_sum(const Comodule& M, const Comodule& N);
};

VerificationReport check_comodule(const Comodule& M, const CheckOptions& opts = {});

// Exact dense square matrix with basis labeling; `dim` is the comodule
// dimension d for a d^2 x d^2 tensor-square matrix.
struct SquareMatrix {
    std::size_t dim = 0;   // d
    std::size_t size = 0;  // matrix side, d^2 (or d^3 for triple products)
    std::vector<Scalar> a; // row-major
    std::vector<BasisId> labels;

    Scalar& at(std::size_t r, std::size_t c) { return a[r * size + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * size + c]; }
    bool operator==(const SquareMatrix& o) const { return size == o.size && a == o.a; }

    // First line "d n", then n rows of n scalar literals.
    std::string to_text() const;
};

SquareMatrix matrix_multiply(const SquareMatrix& x, const SquareMatrix& y);

// R_p on M (x) M: R(m (x) n) = p(m1, n1) m0 (x) n0, row-major over ordered
// pairs. The braiding is assumed checked unless `check`.
SquareMatrix r_matrix(const BilinearForm& p, const Comodule& M, bool check = true);

// Quantum Yang-Baxter check: R12 R13 R23 = R23 R13 R12 on the d^3 space,
// with R12 = R (x) I, R23 = I (x) R, R13 = (swap23)(R (x) I)(swap23).
VerificationReport check_ybe(const SquareMatrix& R);

}  // namespace hopf
