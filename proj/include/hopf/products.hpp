#pragma once

#include "hopf/pairings.hpp"

namespace hopf {

// Extending datum (H, ract, lact, cocycle) over a base A. The H-part is a
// coalgebra with a unital, not necessarily associative product; it reuses
// HopfData storage but is validated through check_extending_structure, not
// check_hopf.
struct ExtendingDatum {
    HopfPtr base;     // A
    HopfPtr hpart;    // H
    LinMap ract;      // H (x) A -> H
    LinMap lact;      // H (x) A -> A
    LinMap cocycle;   // H (x) H -> A

    ExtendingDatum(HopfPtr a, HopfPtr h, LinMap r, LinMap l, LinMap f)
        : base(std::move(a)), hpart(std::move(h)), ract(std::move(r)), lact(std::move(l)),
          cocycle(std::move(f)) {}
};

using DatumPtr = std::shared_ptr<const ExtendingDatum>;

// Trivial pieces: h <| a = eps(a) h, h |> a = eps(h) a, f = eps (x) eps 1_A.
LinMap trivial_ract(HopfPtr A, HopfPtr H);
LinMap trivial_lact(HopfPtr A, HopfPtr H);
LinMap trivial_cocycle(HopfPtr A, HopfPtr H);

enum class Provenance { Unified, DoubleCross, Crossed, Gqd, CoadjointDouble, Tensor };

struct ProductAlgebra {
    HopfPtr hopf;  // the built algebra on pair ids (A-index first)
    Provenance provenance = Provenance::Unified;
    DatumPtr datum;
    std::optional<BilinearForm> pairing;  // the inducing skew pairing for gqd

    // a -> a (x) 1_H and h -> 1_A (x) h.
    LinComb embed_left(const LinComb& a) const { return a.tensor(datum->hpart->unit); }
    LinComb embed_right(const LinComb& h) const { return datum->base->unit.tensor(h); }
    LinComb embed_left(const BasisId& a) const {
        return embed_left(LinComb::basis(datum->base->field, a));
    }
    LinComb embed_right(const BasisId& h) const {
        return embed_right(LinComb::basis(datum->base->field, h));
    }
};

using ProductPtr = std::shared_ptr<const ProductAlgebra>;

// Normalization, coalgebra-map, module and the seven twisted-compatibility
// conditions that make the pair-basis multiplication a bialgebra.
VerificationReport check_extending_structure(const ExtendingDatum& omega,
                                             const std::vector<BasisId>& window_a,
                                             const std::vector<BasisId>& window_h,
                                             const CheckOptions& opts = {});
VerificationReport check_extending_structure(const ExtendingDatum& omega,
                                             const CheckOptions& opts = {});

// The unified product A x| H: twisted multiplication, tensor coalgebra
// structure, antipode when both components carry one. Validates the datum
// first unless `force`.
ProductPtr build_unified_product(DatumPtr omega, bool force = false);

ProductPtr build_double_cross(HopfPtr A, HopfPtr H, LinMap lact, LinMap ract, bool force = false);
ProductPtr build_crossed_product(HopfPtr A, HopfPtr H, LinMap lact, LinMap cocycle, bool force = false);

// Mutual actions induced by a skew pairing lambda on (H, A):
//   h <| a = h2 lambda^-1(h1, a1) lambda(h3, a2)
//   h |> a = a2 lambda^-1(h1, a1) lambda(h2, a3)
std::pair<LinMap, LinMap> matched_pair_from_pairing(const BilinearForm& lambda);  // (ract, lact)

// Generalized quantum double A |><| H over the pairing.
ProductPtr build_gqd(HopfPtr A, HopfPtr H, const BilinearForm& lambda, bool force = false);

// Drinfeld double D(H) = H*op |><| H by the mutual coadjoint actions;
// finite-dimensional H with antipode.
ProductPtr coadjoint_double(HopfPtr H);

// Evaluation pairing on (H, H*op): (h, alpha) -> alpha(h).
BilinearForm evaluation_pairing(HopfPtr H, HopfPtr dual_op);

// Plain tensor-product Hopf algebra on pair ids, built directly (used as an
// independent comparison route for trivial-action degenerations).
ProductPtr tensor_product(HopfPtr A, HopfPtr H);

}  // namespace hopf
