#pragma once

#include "hopf/products.hpp"

namespace hopf {

// The four restrictions of a braiding on a product A x| H:
//   p on (A, A), tau on (H, H), u on (A, H), v on (H, A).
struct Quadruple {
    BilinearForm p;
    BilinearForm tau;
    BilinearForm u;
    BilinearForm v;
};

// Generalized right skew pairing u on (A, H) against the braiding p and the
// cocycle f of the datum:
//   u-mult-left      u(ab, t) = u(a, t1) u(b, t2)
//   u-unit-left      u(1, h) = eps(h)
//   u-twisted-split  u(a1, g2.t2) p(a2, f(g1, t1)) = u(a1, t) u(a2, g)
//   u-unit-right     u(a, 1) = eps(a)
VerificationReport check_rs(const BilinearForm& u, const BilinearForm& p, const ExtendingDatum& omega,
                            const CheckOptions& opts = {});

// Generalized left skew pairing v on (H, A):
//   v-twisted-split  p(f(h1,g1), c1) v(h2.g2, c2) = v(h, c1) v(g, c2)
//   v-unit-right     v(h, 1) = eps(h)
//   v-mult-right     v(h, bc) = v(h1, c) v(h2, b)
//   v-unit-left      v(1, a) = eps(a)
VerificationReport check_ls(const BilinearForm& v, const BilinearForm& p, const ExtendingDatum& omega,
                            const CheckOptions& opts = {});

// Generalized skew braiding tau on the H-part against u and v:
//   tau-twisted-left   u(f(h1,g1), t1) tau(h2.g2, t2) = tau(h, t1) tau(g, t2)
//   tau-unit-left      tau(1, g) = eps(g)
//   tau-twisted-right  tau(h1, g2.t2) v(h2, f(g1,t1)) = tau(h1, t) tau(h2, g)
//   tau-unit-right     tau(g, 1) = eps(g)
//   tau-commutation    tau(h1, g1) h2.g2 = g1.h1 tau(h2, g2)
VerificationReport check_sbr(const BilinearForm& tau, const BilinearForm& u, const BilinearForm& v,
                             const ExtendingDatum& omega, const CheckOptions& opts = {});

// The seven cross-compatibilities between the quadruple and the datum. For
// quantum doubles the pairing-substituted variants are evaluated as well and
// cross-checked for agreement with the general list.
VerificationReport check_compat(const Quadruple& quad, const ProductAlgebra& prod,
                                const CheckOptions& opts = {});

// Both pairing-derived absorption identities, implied by the first two
// compatibilities:
//   v(h1, b1)(h2 <| b2) = h1 v(h2, b)
//   (g1 <| a1) u(a2, g2) = u(a, g1) g2
VerificationReport derived_identities(const Quadruple& quad, const ExtendingDatum& omega,
                                      const CheckOptions& opts = {});

// All component checks plus the compatibilities.
VerificationReport check_quadruple(const Quadruple& quad, const ProductAlgebra& prod,
                                   const CheckOptions& opts = {});

// The braiding on A x| H assembled from a quadruple:
//   sigma(a x| h, b x| g) = u(a1, g1) p(a2, b1) tau(h1, g2) v(h2, b2)
// Component checks run first unless `force`.
BilinearForm assemble_sigma(const Quadruple& quad, const ProductAlgebra& prod, bool force = false);

// Restrictions of a candidate braiding along the unit embeddings. Needs only
// the product's coalgebra and units, so arbitrary candidates can be probed.
Quadruple decompose_sigma(const BilinearForm& sigma, const ProductAlgebra& prod);

// Canonical braiding on a generalized quantum double from braidings on the
// two factors:
//   sigma(a |><| h, b |><| g) = lambda(S(g1), a1) p(a2, b1) tau(h1, g2) lambda(h2, b2)
// Equals assemble_sigma with v := lambda and u := the flip dual of lambda.
BilinearForm canonical_gqd_sigma(const BilinearForm& p, const BilinearForm& tau,
                                 const BilinearForm& lambda, const ProductAlgebra& prod);

// Entrywise equality of two forms over windows, as a reported check.
VerificationReport forms_equal(const BilinearForm& a, const BilinearForm& b,
                               const std::vector<BasisId>& wl, const std::vector<BasisId>& wr,
                               const CheckOptions& opts = {});

struct GqdCoquasiDecision {
    bool coquasitriangular = false;
    std::string obstruction;                 // names the factor with no braiding
    std::optional<BilinearForm> sigma;       // forward witness
    std::optional<Quadruple> witness;        // forward witness quadruple
};

// Forward direction of the double characterization: feed braidings on the
// factors (found by hand or by the search oracle); empty candidate lists on
// either side decide negatively with the obstruction recorded.
GqdCoquasiDecision check_iff_gqd(const ProductAlgebra& gqd,
                                 const std::vector<BilinearForm>& braidings_on_A,
                                 const std::vector<BilinearForm>& braidings_on_H);

// Backward direction: restrict sigma to both factors and re-run the braiding
// checker on each restriction.
struct GqdRestriction {
    Quadruple quad;
    VerificationReport p_report;
    VerificationReport tau_report;
};
GqdRestriction restrict_sigma_to_factors(const BilinearForm& sigma, const ProductAlgebra& prod,
                                         const CheckOptions& opts = {});

}  // namespace hopf
