#include "hopf/hopf_data.hpp"

namespace hopf {

BasisDesc BasisDesc::finite(std::vector<BasisId> elems) {
    BasisDesc d;
    d.kind_ = Kind::Finite;
    d.elems_ = std::move(elems);
    return d;
}

BasisDesc BasisDesc::integer_powers(std::string name, long window) {
    BasisDesc d;
    d.kind_ = Kind::IntegerPowers;
    d.name_ = std::move(name);
    d.window_ = window;
    return d;
}

BasisDesc BasisDesc::natural_powers(std::string name, long window) {
    BasisDesc d;
    d.kind_ = Kind::NaturalPowers;
    d.name_ = std::move(name);
    d.window_ = window;
    return d;
}

BasisDesc BasisDesc::pair_of(std::shared_ptr<const BasisDesc> left,
                             std::shared_ptr<const BasisDesc> right) {
    BasisDesc d;
    d.kind_ = Kind::Pair;
    d.left_ = std::move(left);
    d.right_ = std::move(right);
    return d;
}

const std::vector<BasisId>& BasisDesc::elements() const {
    if (kind_ != Kind::Finite) fail(Error::Kind::Domain, "basis is rule-backed, not finite");
    return elems_;
}

std::vector<BasisId> BasisDesc::window() const { return window_with_bound(0); }

std::vector<BasisId> BasisDesc::window_with_bound(long bound) const {
    long w = bound > 0 ? bound : window_;
    switch (kind_) {
        case Kind::Finite: return elems_;
        case Kind::IntegerPowers: {
            std::vector<BasisId> ids;
            for (long t = -w; t <= w; ++t) ids.push_back(BasisId(name_, {t}));
            return ids;
        }
        case Kind::NaturalPowers: {
            std::vector<BasisId> ids;
            for (long n = 0; n <= w; ++n) ids.push_back(BasisId(name_, {n}));
            return ids;
        }
        case Kind::Pair: {
            std::vector<BasisId> ids;
            for (const auto& a : left_->window_with_bound(bound))
                for (const auto& b : right_->window_with_bound(bound)) ids.push_back(BasisId::pair(a, b));
            return ids;
        }
    }
    return {};
}

std::string BasisDesc::describe() const {
    switch (kind_) {
        case Kind::Finite: return "finite basis of " + std::to_string(elems_.size());
        case Kind::IntegerPowers:
            return "rule basis " + name_ + "[t], window |t| <= " + std::to_string(window_);
        case Kind::NaturalPowers:
            return "rule basis " + name_ + "[n], window n <= " + std::to_string(window_);
        case Kind::Pair: return "pairs of (" + left_->describe() + ") x (" + right_->describe() + ")";
    }
    return "?";
}

void HopfData::require_char_ok(long p) const {
    auto it = meta.find("char_ne");
    if (it != meta.end() && std::to_string(p) == it->second)
        fail(Error::Kind::Domain,
             name + " requires characteristic != " + it->second + "; modulus " + std::to_string(p) +
                 " rejected");
}

namespace {

// Iterated-coproduct cache. Keyed by (algebra name, field tag, element,
// depth): algebra names are unique per structure in this code base, and the
// key avoids dangling pointers when algebras are rebuilt.
struct SweedlerCache {
    std::mutex mutex;
    std::map<std::tuple<std::string, std::string, BasisId, int>, std::vector<TensorTerm>> entries;
};
SweedlerCache& sweedler_cache() {
    static SweedlerCache cache;
    return cache;
}

}  // namespace

std::vector<TensorTerm> sweedler(const HopfData& H, const BasisId& x, int nfold) {
    if (nfold < 1) fail(Error::Kind::Domain, "sweedler expansion needs nfold >= 1");
    if (nfold > 1) {
        auto key = std::make_tuple(H.name, H.field.to_string(), x, nfold);
        auto& cache = sweedler_cache();
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    std::vector<TensorTerm> terms{{std::vector<BasisId>{x}, Scalar::one(H.field)}};
    for (int step = 1; step < nfold; ++step) {
        std::vector<TensorTerm> next;
        for (const auto& t : terms) {
            LinComb d = H.comult.apply(t.factors.back());
            for (const auto& [id, c] : d.terms()) {
                if (!id.is_tuple() || id.parts().size() != 2)
                    fail(Error::Kind::Domain, "comultiplication output is not a pair tensor");
                std::vector<BasisId> factors(t.factors.begin(), t.factors.end() - 1);
                factors.push_back(id.parts()[0]);
                factors.push_back(id.parts()[1]);
                next.push_back(TensorTerm{std::move(factors), t.coeff * c});
            }
        }
        terms = std::move(next);
    }
    if (nfold > 1) {
        auto key = std::make_tuple(H.name, H.field.to_string(), x, nfold);
        auto& cache = sweedler_cache();
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.entries.emplace(std::move(key), terms);
    }
    return terms;
}

LinMap tensor_coalgebra_comult(HopfPtr A, HopfPtr H) {
    Field field = A->field;
    return LinMap::rule(
        1, field,
        [A, H, field](std::span<const BasisId> args) {
            const BasisId& x = args[0];
            if (!x.is_tuple() || x.parts().size() != 2)
                fail(Error::Kind::Domain, "tensor coalgebra expects pair ids");
            LinComb out = LinComb::zero(field);
            LinComb da = A->comult.apply(x.parts()[0]);
            LinComb dh = H->comult.apply(x.parts()[1]);
            for (const auto& [pa, ca] : da.terms())
                for (const auto& [ph, ch] : dh.terms()) {
                    BasisId lhs = BasisId::pair(pa.parts()[0], ph.parts()[0]);
                    BasisId rhs = BasisId::pair(pa.parts()[1], ph.parts()[1]);
                    out.add_term(BasisId::pair(std::move(lhs), std::move(rhs)), ca * ch);
                }
            return out;
        },
        [A, H](std::span<const BasisId> args) {
            return A->comult.apply(args[0].parts()[0]).support_size() *
                   H->comult.apply(args[0].parts()[1]).support_size();
        });
}

ScalarMap tensor_coalgebra_counit(HopfPtr A, HopfPtr H) {
    Field field = A->field;
    return ScalarMap::rule(1, field, [A, H](std::span<const BasisId> args) {
        const BasisId& x = args[0];
        if (!x.is_tuple() || x.parts().size() != 2)
            fail(Error::Kind::Domain, "tensor coalgebra expects pair ids");
        return A->counit.apply(x.parts()[0]) * H->counit.apply(x.parts()[1]);
    });
}

}  // namespace hopf
