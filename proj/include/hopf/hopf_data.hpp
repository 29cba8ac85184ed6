#pragma once

#include <memory>
#include <optional>

#include "hopf/linmap.hpp"
#include "hopf/report.hpp"

namespace hopf {

// Basis descriptor: a finite list of ids, or a named rule domain (kZ, kX,
// pair-of-rules) with a declared finite verification window. Checks on
// rule-backed algebras are window-bounded by construction.
class BasisDesc {
public:
    static BasisDesc finite(std::vector<BasisId> elems);
    static BasisDesc integer_powers(std::string name, long window);       // kZ-style: name[t], |t| <= window
    static BasisDesc natural_powers(std::string name, long window);      // kX-style: name[n], 0 <= n <= window
    static BasisDesc pair_of(std::shared_ptr<const BasisDesc> left,
                             std::shared_ptr<const BasisDesc> right);

    bool is_finite() const { return kind_ == Kind::Finite; }
    const std::vector<BasisId>& elements() const;  // finite only

    // Default verification window: whole basis when finite, declared bound
    // otherwise.
    std::vector<BasisId> window() const;
    // Window re-derived with rule bounds overridden by `bound`.
    std::vector<BasisId> window_with_bound(long bound) const;

    std::string describe() const;

    enum class Kind { Finite, IntegerPowers, NaturalPowers, Pair };
    Kind kind() const { return kind_; }
    const std::string& rule_name() const { return name_; }
    long rule_window() const { return window_; }
    const std::shared_ptr<const BasisDesc>& left() const { return left_; }
    const std::shared_ptr<const BasisDesc>& right() const { return right_; }

private:
    Kind kind_ = Kind::Finite;
    std::vector<BasisId> elems_;
    std::string name_;
    long window_ = 0;
    std::shared_ptr<const BasisDesc> left_, right_;
};

// A (bi/Hopf) algebra presented by basis-indexed structure maps. Immutable
// after construction; all evaluation is pure.
struct HopfData {
    std::string name;
    Field field;
    BasisDesc basis;
    LinMap mult;                    // arity 2
    LinComb unit;                   // usually a single basis element; duals may need a combination
    LinMap comult;                  // arity 1, values over pair ids
    ScalarMap counit;               // arity 1
    std::optional<LinMap> antipode; // arity 1
    std::map<std::string, std::string> meta;  // e.g. {"char_ne","2"}

    HopfData(std::string n, Field f, BasisDesc b, LinMap m, LinComb u, LinMap cm, ScalarMap cu,
             std::optional<LinMap> s = std::nullopt, std::map<std::string, std::string> me = {})
        : name(std::move(n)),
          field(std::move(f)),
          basis(std::move(b)),
          mult(std::move(m)),
          unit(std::move(u)),
          comult(std::move(cm)),
          counit(std::move(cu)),
          antipode(std::move(s)),
          meta(std::move(me)) {}

    std::vector<BasisId> window() const { return basis.window(); }
    bool has_antipode() const { return antipode.has_value(); }

    // Guard used when loading into a prime field: structures declaring
    // "char_ne" reject matching moduli.
    void require_char_ok(long p) const;
};

using HopfPtr = std::shared_ptr<const HopfData>;

// Sweedler expansion: Delta^{n-1}(x) as a flat sum of n-tuples with scalar
// coefficients. n = 1 returns x itself.
struct TensorTerm {
    std::vector<BasisId> factors;
    Scalar coeff;
};
std::vector<TensorTerm> sweedler(const HopfData& H, const BasisId& x, int nfold);

// Comultiplication of the tensor coalgebra A (x) H on pair ids:
// (a,h) -> sum (a1,h1) (x) (a2,h2).
LinMap tensor_coalgebra_comult(HopfPtr A, HopfPtr H);
// Counit of the tensor coalgebra on pair ids.
ScalarMap tensor_coalgebra_counit(HopfPtr A, HopfPtr H);

}  // namespace hopf
