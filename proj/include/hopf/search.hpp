#pragma once

#include "hopf/coquasi.hpp"

namespace hopf {

// Incremental exact Gauss-Jordan elimination mod p on byte entries.
// Equations stream in; pivot rows stay fully reduced against each other.
class FpEliminator {
public:
    FpEliminator(long p, std::size_t ncols);

    // coeffs has ncols entries; the equation is sum coeffs[i] x_i = rhs.
    void add_equation(const std::vector<uint8_t>& coeffs, uint8_t rhs);

    bool consistent() const { return !inconsistent_; }
    std::size_t rank() const { return pivot_cols_.size(); }
    std::size_t free_count() const { return ncols_ - pivot_cols_.size(); }

    // Particular solution (free variables zero) and a nullspace basis.
    std::vector<uint8_t> particular() const;
    std::vector<std::vector<uint8_t>> nullspace() const;

private:
    long p_;
    std::size_t ncols_;
    bool inconsistent_ = false;
    std::vector<int> pivot_row_of_col_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::vector<uint8_t>> rows_;  // length ncols+1, rhs last
};

struct SearchSpace {
    HopfPtr algebra;
    long prime = 0;
    std::size_t unknowns = 0;
    std::size_t free_parameters = 0;   // after linear elimination
    std::size_t candidates = 0;        // p^free

    std::string describe() const;
};

struct EnumerationResult {
    SearchSpace space;
    std::vector<BilinearForm> forms;
};

// Every braiding on the finite algebra A over F_p: the unit normalizations
// and the commutation law are linear in the unknown form and are eliminated
// exactly; the two multiplicativity laws (and convolution invertibility when
// A has no antipode) filter the remaining coset. Deterministic order.
// Throws Error::Kind::Bound when more than max_free parameters survive.
EnumerationResult enumerate_braidings(HopfPtr A, long p, std::size_t max_free = 12);

// Forms on (A, H) satisfying the generalized right skew pairing laws for the
// given braiding and cocycle, same strategy (unit laws linear, rest filter).
EnumerationResult enumerate_rs_forms(const BilinearForm& pbraid, const ExtendingDatum& omega,
                                     long p, std::size_t max_free = 12);
EnumerationResult enumerate_ls_forms(const BilinearForm& pbraid, const ExtendingDatum& omega,
                                     long p, std::size_t max_free = 12);
// Generalized skew braidings on the H-part against fixed u, v.
EnumerationResult enumerate_sbr_forms(const BilinearForm& u, const BilinearForm& v,
                                      const ExtendingDatum& omega, long p,
                                      std::size_t max_free = 12);

struct BijectionReport {
    std::size_t sigma_count = 0;
    std::size_t quadruple_count = 0;
    bool counts_match = false;
    bool round_trips_identity = false;
    std::vector<BilinearForm> sigmas;
    std::vector<Quadruple> quadruples;
    std::string to_text() const;
};

// Exhaustive two-sided validation of the braiding <-> quadruple bijection on
// a small product over F_p: enumerate both sides independently, then check
// that assembly and decomposition are mutually inverse bijections.
BijectionReport cross_validate_bijection(ProductPtr prod, long p, std::size_t max_free = 12);

// Entrywise equality of two forms on full finite windows.
bool forms_identical(const BilinearForm& a, const BilinearForm& b);

}  // namespace hopf
