#pragma once

#include "hopf/check.hpp"

namespace hopf {

// Scalar-valued bilinear form on a pair of algebras, defined on basis pairs
// and extended bilinearly. Orientation is explicit: `left` is the first
// tensor slot. Never flipped implicitly.
class BilinearForm {
public:
    BilinearForm(std::string name, HopfPtr left, HopfPtr right, ScalarMap values);

    // Table with a default policy for unlisted pairs: zero, or the counit
    // product eps(x) eps(y).
    enum class Default { Zero, CounitProduct };
    static BilinearForm from_table(std::string name, HopfPtr left, HopfPtr right,
                                   std::map<std::vector<BasisId>, Scalar> entries,
                                   Default def = Default::Zero);
    static BilinearForm counit_product(HopfPtr left, HopfPtr right);

    const std::string& name() const { return name_; }
    const HopfPtr& left() const { return left_; }
    const HopfPtr& right() const { return right_; }
    const Field& field() const { return values_.field(); }
    const ScalarMap& values() const { return values_; }

    Scalar operator()(const BasisId& a, const BasisId& b) const { return values_.apply(a, b); }
    Scalar operator()(const LinComb& a, const LinComb& b) const { return values_.apply_lin(a, b); }
    Scalar eval_mixed(const BasisId& a, const LinComb& b) const {
        return values_.apply_lin(LinComb::basis(left_->field, a), b);
    }

    // Materialize entries over the given windows (canonical order).
    std::map<std::vector<BasisId>, Scalar> table(const std::vector<BasisId>& wl,
                                                 const std::vector<BasisId>& wr) const;

    BilinearForm renamed(std::string name) const;

private:
    std::string name_;
    HopfPtr left_, right_;
    ScalarMap values_;
};

// Skew-pairing axioms on (A, H) = (left, right):
//   pairing-mult-left   lambda(xy, z) = lambda(x, z1) lambda(y, z2)
//   pairing-unit-left   lambda(1, z) = eps(z)
//   pairing-mult-right  lambda(x, l z) = lambda(x1, z) lambda(x2, l)
//   pairing-unit-right  lambda(x, 1) = eps(x)
VerificationReport check_skew_pairing(const BilinearForm& lambda,
                                      const std::vector<BasisId>& window_left,
                                      const std::vector<BasisId>& window_right,
                                      const CheckOptions& opts = {});
VerificationReport check_skew_pairing(const BilinearForm& lambda, const CheckOptions& opts = {});

// Braiding (coquasitriangular structure) on one algebra: the four pairing
// axioms plus
//   braiding-commutation    p(x1, y1) x2 y2 = y1 x1 p(x2, y2)
//   convolution-invertible  a two-sided convolution inverse exists
// Invertibility is witnessed through the antipode when one is present and by
// an exact linear solve on the window otherwise.
VerificationReport check_braiding(const BilinearForm& p, const std::vector<BasisId>& window,
                                  const CheckOptions& opts = {});
VerificationReport check_braiding(const BilinearForm& p, const CheckOptions& opts = {});

// lambda o (S (x) Id); two-sided convolution inverse of a skew pairing.
BilinearForm convolution_inverse(const BilinearForm& lambda);

// lambda o (S (x) Id) o flip : a skew pairing on (H, A) when lambda is one
// on (A, H).
BilinearForm flip_dual(const BilinearForm& lambda);

// Convolution of two forms on the same pair of algebras, via the tensor
// coalgebra: (f*g)(a,h) = f(a1,h1) g(a2,h2).
BilinearForm convolve_forms(const BilinearForm& f, const BilinearForm& g);

// Braiding axioms for the one-parameter family on the binomial coalgebra
// k[X]: tau(X^i, X^j) = 0 for i != j and i! alpha^i on the diagonal.
// Positive characteristic is rejected (i! may vanish).
VerificationReport check_tau_on_kX(const BilinearForm& tau, const std::vector<BasisId>& window,
                                   const CheckOptions& opts = {});

// Extend generator-level values to whole word bases using the two
// multiplicativity laws; used by catalog fixtures whose pairings are given
// on generators only. Requires both algebras finite.
BilinearForm extend_pairing_from_generators(std::string name, HopfPtr left, HopfPtr right,
                                            const std::map<std::vector<BasisId>, Scalar>& generator_values,
                                            const std::map<BasisId, std::vector<BasisId>>& left_letters,
                                            const std::map<BasisId, std::vector<BasisId>>& right_letters);

}  // namespace hopf
