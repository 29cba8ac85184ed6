#pragma once

#include <functional>

#include "hopf/hopf_data.hpp"

namespace hopf {

struct CheckOptions {
    bool all_failures = false;  // list every failing tuple, not just the first
    long window_bound = 0;      // >0 overrides rule-backed window bounds
};

// Evaluate one identity over every tuple in the cartesian product of the
// window lists. The callback returns true when the identity holds at the
// tuple; on failure it may fill printable sides. Iteration order is the
// sorted tuple order; the reported witness is the first failing tuple, so
// output is deterministic under any worker count.
using TupleCheck = std::function<bool(std::span<const BasisId>, std::string* lhs, std::string* rhs)>;

CheckItem check_over_tuples(std::string axiom, std::vector<std::vector<BasisId>> windows,
                            const TupleCheck& fn, const CheckOptions& opts = {});

// Full bialgebra/Hopf axiom suite on the window: unit and associativity
// laws, counit and coassociativity laws, comultiplication/counit are algebra
// maps, and (when present) the antipode identity.
VerificationReport check_hopf(const HopfData& H, const std::vector<BasisId>& window,
                              const CheckOptions& opts = {});
VerificationReport check_hopf(const HopfData& H, const CheckOptions& opts = {});

// Entrywise structure-constant comparison of two algebras over a shared
// window (basis ids must agree). Reports the first mismatching entry.
VerificationReport structure_equal(const HopfData& A, const HopfData& B,
                                   const std::vector<BasisId>& window);

// Componentwise product on tensor squares: (a (x) b)(c (x) d) = ac (x) bd.
LinComb tensor_square_mult(const HopfData& H, const LinComb& u, const LinComb& v);

}  // namespace hopf
