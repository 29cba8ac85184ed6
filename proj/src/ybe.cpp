#include "hopf/ybe.hpp"

#include "hopf/util.hpp"

namespace hopf {

Comodule Comodule::regular(HopfPtr A) {
    if (!A->basis.is_finite()) fail(Error::Kind::Domain, "regular comodule needs a finite basis");
    return Comodule{A, A->basis.elements(), A->comult};
}

Comodule Comodule::trivial(HopfPtr A, BasisId m) {
    Field k = A->field;
    std::map<std::vector<BasisId>, LinComb> table;
    LinComb out = LinComb::zero(k);
    for (const auto& [uid, c] : A->unit.terms()) out.add_term(BasisId::pair(m, uid), c);
    table.emplace(std::vector<BasisId>{m}, std::move(out));
    return Comodule{A, {std::move(m)}, LinMap::table(1, k, std::move(table))};
}

Comodule Comodule::direct_sum(const Comodule& M, const Comodule& N) {
    if (M.algebra != N.algebra) fail(Error::Kind::Domain, "direct sum over different algebras");
    Field k = M.algebra->field;
    std::vector<BasisId> basis = M.basis;
    for (const auto& id : N.basis) {
        if (std::find(basis.begin(), basis.end(), id) != basis.end())
            fail(Error::Kind::Domain, "direct sum requires disjoint bases");
        basis.push_back(id);
    }
    std::map<std::vector<BasisId>, LinComb> table;
    for (const auto& id : M.basis) table.emplace(std::vector<BasisId>{id}, M.coaction.apply(id));
    for (const auto& id : N.basis) table.emplace(std::vector<BasisId>{id}, N.coaction.apply(id));
    return Comodule{M.algebra, std::move(basis), LinMap::table(1, k, std::move(table))};
}

VerificationReport check_comodule(const Comodule& M, const CheckOptions& opts) {
    VerificationReport report;
    report.subject = "comodule over " + M.algebra->name;
    report.window_note = std::to_string(M.basis.size()) + " basis elements";
    const HopfData& A = *M.algebra;
    const Field& k = A.field;

    report.items.push_back(check_over_tuples(
        "coaction-coassociative", {M.basis},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            // (rho (x) id) rho = (id (x) Delta) rho, flattened to triples.
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& [id, c] : M.coaction.apply(t[0]).terms()) {
                const BasisId& m0 = id.parts()[0];
                const BasisId& m1 = id.parts()[1];
                for (const auto& [id2, c2] : M.coaction.apply(m0).terms())
                    l.add_term(BasisId::tuple({id2.parts()[0], id2.parts()[1], m1}), c * c2);
                for (const auto& [id2, c2] : A.comult.apply(m1).terms())
                    r.add_term(BasisId::tuple({m0, id2.parts()[0], id2.parts()[1]}), c * c2);
            }
            if (l == r) return true;
            if (lhs) { *lhs = l.to_string(); *rhs = r.to_string(); }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "coaction-counit", {M.basis},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb out = LinComb::zero(k);
            for (const auto& [id, c] : M.coaction.apply(t[0]).terms())
                out.add_term(id.parts()[0], c * A.counit.apply(id.parts()[1]));
            LinComb want = LinComb::basis(k, t[0]);
            if (out == want) return true;
            if (lhs) { *lhs = out.to_string(); *rhs = want.to_string(); }
            return false;
        },
        opts));

    return report;
}

std::string SquareMatrix::to_text() const {
    std::string out = std::to_string(dim) + " " + std::to_string(size) + "\n";
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            if (c) out += " ";
            out += at(r, c).to_string();
        }
        out += "\n";
    }
    return out;
}

SquareMatrix matrix_multiply(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.size != y.size) fail(Error::Kind::Domain, "matrix dimension mismatch");
    Field f = x.a.front().field();
    SquareMatrix out;
    out.dim = x.dim;
    out.size = x.size;
    out.labels = x.labels;
    out.a.assign(x.size * x.size, Scalar::zero(f));
    // Sparse-aware: skip zero left entries.
    util::parallel_for(x.size, [&](std::size_t r) {
        for (std::size_t m = 0; m < x.size; ++m) {
            const Scalar& xv = x.at(r, m);
            if (xv.is_zero()) continue;
            for (std::size_t c = 0; c < x.size; ++c) {
                const Scalar& yv = y.at(m, c);
                if (yv.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + xv * yv;
            }
        }
    });
    return out;
}

SquareMatrix r_matrix(const BilinearForm& p, const Comodule& M, bool check) {
    if (check) {
        VerificationReport rb = check_braiding(p);
        if (!rb.all_pass()) fail(Error::Kind::Validation, "not a braiding:\n" + rb.to_text());
        VerificationReport rc = check_comodule(M);
        if (!rc.all_pass()) fail(Error::Kind::Validation, "not a comodule:\n" + rc.to_text());
    }
    const Field& k = p.field();
    std::size_t d = M.basis.size();
    std::map<BasisId, std::size_t> pos;
    for (std::size_t i = 0; i < d; ++i) pos.emplace(M.basis[i], i);

    SquareMatrix R;
    R.dim = d;
    R.size = d * d;
    R.labels = M.basis;
    R.a.assign(R.size * R.size, Scalar::zero(k));

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // R(m_i (x) m_j) = p(m1, n1) m0 (x) n0
            std::size_t col = i * d + j;
            for (const auto& [mi, cm] : M.coaction.apply(M.basis[i]).terms())
                for (const auto& [nj, cn] : M.coaction.apply(M.basis[j]).terms()) {
                    Scalar val = p(mi.parts()[1], nj.parts()[1]) * cm * cn;
                    if (val.is_zero()) continue;
                    std::size_t row = pos.at(mi.parts()[0]) * d + pos.at(nj.parts()[0]);
                    R.a[row * R.size + col] = R.a[row * R.size + col] + val;
                }
        }
    return R;
}

namespace {

// Embeddings into the d^3 tensor cube.
SquareMatrix pad(const SquareMatrix& R, int slot) {
    std::size_t d = R.dim;
    std::size_t n = d * d * d;
    Field f = R.a.front().field();
    SquareMatrix out;
    out.dim = d;
    out.size = n;
    out.a.assign(n * n, Scalar::zero(f));

    auto idx = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t i2 = 0; i2 < d; ++i2)
                    for (std::size_t j2 = 0; j2 < d; ++j2) {
                        // (i,j) or (j,k) or (i,k) transformed, remaining index fixed.
                        const Scalar* v = nullptr;
                        std::size_t row = 0, col = 0;
                        if (slot == 12) {
                            v = &R.at(i2 * d + j2, i * d + j);
                            row = idx(i2, j2, k);
                            col = idx(i, j, k);
                        } else if (slot == 23) {
                            v = &R.at(i2 * d + j2, j * d + k);
                            row = idx(i, i2, j2);
                            col = idx(i, j, k);
                        } else {  // 13
                            v = &R.at(i2 * d + j2, i * d + k);
                            row = idx(i2, j, j2);
                            col = idx(i, j, k);
                        }
                        if (!v->is_zero()) out.a[row * n + col] = out.a[row * n + col] + *v;
                    }
    return out;
}

}  // namespace

VerificationReport check_ybe(const SquareMatrix& R) {
    VerificationReport report;
    report.subject = "quantum Yang-Baxter equation";
    report.window_note = std::to_string(R.size) + "^2 matrix, cube side " +
                         std::to_string(R.dim * R.dim * R.dim);
    CheckItem item;
    item.axiom = "ybe";
    if (R.size != R.dim * R.dim) {
        item.status = CheckStatus::Error;
        item.detail = "matrix side is not dim^2";
        report.items.push_back(std::move(item));
        return report;
    }
    SquareMatrix R12 = pad(R, 12);
    SquareMatrix R13 = pad(R, 13);
    SquareMatrix R23 = pad(R, 23);
    SquareMatrix lhs = matrix_multiply(matrix_multiply(R12, R13), R23);
    SquareMatrix rhs = matrix_multiply(matrix_multiply(R23, R13), R12);
    if (!(lhs == rhs)) {
        item.status = CheckStatus::Fail;
        for (std::size_t r = 0; r < lhs.size && item.lhs.empty(); ++r)
            for (std::size_t c = 0; c < lhs.size; ++c)
                if (!(lhs.at(r, c) == rhs.at(r, c))) {
                    item.lhs = lhs.at(r, c).to_string();
                    item.rhs = rhs.at(r, c).to_string();
                    item.detail = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
                    break;
                }
    }
    report.items.push_back(std::move(item));
    return report;
}

}  // namespace hopf
