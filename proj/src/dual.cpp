#include "hopf/dual.hpp"

#include <algorithm>

namespace hopf {

ScalarMatrix ScalarMatrix::zero(const Field& f, std::size_t r, std::size_t c) {
    ScalarMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r * c, Scalar::zero(f));
    return m;
}

std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix A, std::vector<Scalar> b) {
    std::size_t n = A.rows, m = A.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pr = rank;
        while (pr < n && A.at(pr, col).is_zero()) ++pr;
        if (pr == n) continue;
        if (pr != rank) {
            for (std::size_t c = 0; c < m; ++c) std::swap(A.at(pr, c), A.at(rank, c));
            std::swap(b[pr], b[rank]);
        }
        Scalar inv = A.at(rank, col).inverse();
        for (std::size_t c = col; c < m; ++c) A.at(rank, c) = A.at(rank, c) * inv;
        b[rank] = b[rank] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || A.at(r, col).is_zero()) continue;
            Scalar factor = A.at(r, col);
            for (std::size_t c = col; c < m; ++c)
                A.at(r, c) = A.at(r, c) - factor * A.at(rank, c);
            b[r] = b[r] - factor * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        if (!b[r].is_zero()) return std::nullopt;

    Field f = b.empty() ? Field::rationals() : b[0].field();
    std::vector<Scalar> x(m, Scalar::zero(f));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::optional<ScalarMatrix> invert(const ScalarMatrix& A) {
    if (A.rows != A.cols) fail(Error::Kind::Domain, "inverting a non-square matrix");
    std::size_t n = A.rows;
    Field f = A.a.empty() ? Field::rationals() : A.a[0].field();
    ScalarMatrix work = A;
    ScalarMatrix inv = ScalarMatrix::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = Scalar::one(f);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && work.at(pr, col).is_zero()) ++pr;
        if (pr == n) return std::nullopt;
        if (pr != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work.at(pr, c), work.at(col, c));
                std::swap(inv.at(pr, c), inv.at(col, c));
            }
        Scalar s = work.at(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            work.at(col, c) = work.at(col, c) * s;
            inv.at(col, c) = inv.at(col, c) * s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            Scalar factor = work.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                work.at(r, c) = work.at(r, c) - factor * work.at(col, c);
                inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

namespace {

BasisId dual_id(const BasisId& id) { return BasisId(id.name() + "*", id.index()); }

// S as a matrix in the given basis, columns indexed by input element.
ScalarMatrix map_matrix(const HopfData& H, const LinMap& map, const std::vector<BasisId>& basis) {
    std::map<BasisId, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    ScalarMatrix M = ScalarMatrix::zero(H.field, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [id, c] : map.apply(basis[j]).terms()) {
            auto it = pos.find(id);
            if (it == pos.end()) fail(Error::Kind::Domain, "map leaves the finite basis");
            M.at(it->second, j) = c;
        }
    return M;
}

LinMap matrix_to_map(const Field& f, const std::vector<BasisId>& basis, const ScalarMatrix& M) {
    std::map<std::vector<BasisId>, LinComb> entries;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        LinComb out = LinComb::zero(f);
        for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], M.at(i, j));
        if (!out.is_zero()) entries.emplace(std::vector<BasisId>{basis[j]}, std::move(out));
    }
    return LinMap::table(1, f, std::move(entries));
}

bool antipode_involutive(const HopfData& H, const std::vector<BasisId>& basis) {
    for (const auto& x : basis) {
        LinComb s2 = H.antipode->apply_lin(H.antipode->apply(x));
        if (s2 != LinComb::basis(H.field, x)) return false;
    }
    return true;
}

}  // namespace

HopfPtr dual(HopfPtr H) {
    if (!H->basis.is_finite())
        fail(Error::Kind::Domain, "dual requires a finite basis; " + H->name + " is rule-backed");
    const auto& basis = H->basis.elements();
    const Field& f = H->field;

    std::vector<BasisId> dbasis;
    dbasis.reserve(basis.size());
    for (const auto& id : basis) dbasis.push_back(dual_id(id));

    // mult(dual)(i*, j*) = sum_k <e_i (x) e_j, Delta(e_k)> k*
    std::map<std::vector<BasisId>, LinComb> dmult;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            LinComb out = LinComb::zero(f);
            for (std::size_t kk = 0; kk < basis.size(); ++kk) {
                Scalar c = H->comult.apply(basis[kk]).coeff(BasisId::pair(basis[i], basis[j]));
                out.add_term(dbasis[kk], c);
            }
            if (!out.is_zero()) dmult.emplace(std::vector<BasisId>{dbasis[i], dbasis[j]}, std::move(out));
        }

    // comult(dual)(k*) = sum_{i,j} <e_k, e_i e_j> i* (x) j*
    std::map<std::vector<BasisId>, LinComb> dcomult;
    for (std::size_t kk = 0; kk < basis.size(); ++kk) {
        LinComb out = LinComb::zero(f);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Scalar c = H->mult.apply(basis[i], basis[j]).coeff(basis[kk]);
                out.add_term(BasisId::pair(dbasis[i], dbasis[j]), c);
            }
        dcomult.emplace(std::vector<BasisId>{dbasis[kk]}, std::move(out));
    }

    // unit(dual) = counit as a functional; counit(dual)(k*) = <e_k, 1>.
    LinComb dunit = LinComb::zero(f);
    for (std::size_t i = 0; i < basis.size(); ++i) dunit.add_term(dbasis[i], H->counit.apply(basis[i]));
    std::map<std::vector<BasisId>, Scalar> dcounit;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Scalar c = H->unit.coeff(basis[i]);
        if (!c.is_zero()) dcounit.emplace(std::vector<BasisId>{dbasis[i]}, c);
    }

    std::optional<LinMap> dantipode;
    if (H->has_antipode()) {
        // S*(k*) = sum_i <e_k, S(e_i)> i*
        std::map<std::vector<BasisId>, LinComb> ds;
        for (std::size_t kk = 0; kk < basis.size(); ++kk) {
            LinComb out = LinComb::zero(f);
            for (std::size_t i = 0; i < basis.size(); ++i)
                out.add_term(dbasis[i], H->antipode->apply(basis[i]).coeff(basis[kk]));
            if (!out.is_zero()) ds.emplace(std::vector<BasisId>{dbasis[kk]}, std::move(out));
        }
        dantipode = LinMap::table(1, f, std::move(ds));
    }

    auto out = std::make_shared<HopfData>(
        H->name + "*", f, BasisDesc::finite(std::move(dbasis)), LinMap::table(2, f, std::move(dmult)),
        std::move(dunit), LinMap::table(1, f, std::move(dcomult)),
        ScalarMap::table(1, f, std::move(dcounit)), std::move(dantipode), H->meta);
    return out;
}

HopfPtr op_cop(HopfPtr H, OpCop which) {
    const Field& f = H->field;
    bool do_op = which != OpCop::Cop;
    bool do_cop = which != OpCop::Op;

    LinMap mult = H->mult;
    LinMap comult = H->comult;

    if (do_op) {
        if (H->basis.is_finite()) {
            std::map<std::vector<BasisId>, LinComb> m;
            for (const auto& x : H->basis.elements())
                for (const auto& y : H->basis.elements()) {
                    LinComb v = H->mult.apply(y, x);
                    if (!v.is_zero()) m.emplace(std::vector<BasisId>{x, y}, std::move(v));
                }
            mult = LinMap::table(2, f, std::move(m));
        } else {
            LinMap base = H->mult;
            mult = LinMap::rule(
                2, f,
                [base](std::span<const BasisId> args) { return base.apply(args[1], args[0]); },
                [base](std::span<const BasisId> args) {
                    return base.apply(args[1], args[0]).support_size();
                });
        }
    }
    if (do_cop) {
        LinMap base = H->comult;
        auto flip = [base, f](std::span<const BasisId> args) {
            LinComb out = LinComb::zero(f);
            for (const auto& [id, c] : base.apply(args[0]).terms())
                out.add_term(BasisId::pair(id.parts()[1], id.parts()[0]), c);
            return out;
        };
        if (H->basis.is_finite()) {
            std::map<std::vector<BasisId>, LinComb> m;
            for (const auto& x : H->basis.elements()) {
                BasisId arr[1] = {x};
                m.emplace(std::vector<BasisId>{x}, flip(std::span<const BasisId>(arr, 1)));
            }
            comult = LinMap::table(1, f, std::move(m));
        } else {
            comult = LinMap::rule(1, f, flip, [base](std::span<const BasisId> args) {
                return base.apply(args[0]).support_size();
            });
        }
    }

    std::optional<LinMap> antipode = H->antipode;
    if (H->has_antipode() && do_op != do_cop) {
        // One-sided reversal needs S^{-1}; involutive antipodes are their own
        // inverse, otherwise invert the matrix over the finite basis.
        if (H->basis.is_finite() && !antipode_involutive(*H, H->basis.elements())) {
            ScalarMatrix S = map_matrix(*H, *H->antipode, H->basis.elements());
            auto Sinv = invert(S);
            if (!Sinv) fail(Error::Kind::Domain, "antipode is not invertible on " + H->name);
            antipode = matrix_to_map(f, H->basis.elements(), *Sinv);
        }
    }

    std::string suffix = do_op && do_cop ? "^opcop" : (do_op ? "^op" : "^cop");
    return std::make_shared<HopfData>(H->name + suffix, f, H->basis, std::move(mult), H->unit,
                                      std::move(comult), H->counit, std::move(antipode), H->meta);
}

}  // namespace hopf
