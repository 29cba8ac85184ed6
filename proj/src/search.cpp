#include "hopf/search.hpp"

#include <algorithm>

namespace hopf {

// ---------------------------------------------------------------------------
// FpEliminator

FpEliminator::FpEliminator(long p, std::size_t ncols)
    : p_(p), ncols_(ncols), pivot_row_of_col_(ncols, -1) {}

void FpEliminator::add_equation(const std::vector<uint8_t>& coeffs, uint8_t rhs) {
    if (inconsistent_) return;
    std::vector<uint8_t> row(coeffs.begin(), coeffs.end());
    row.push_back(rhs);
    long p = p_;

    for (std::size_t col = 0; col < ncols_; ++col) {
        if (row[col] == 0) continue;
        int pr = pivot_row_of_col_[col];
        if (pr < 0) {
            // New pivot: normalize, then clear this column from older rows.
            long inv = 1;
            for (long cand = 1; cand < p; ++cand)
                if ((cand * row[col]) % p == 1) {
                    inv = cand;
                    break;
                }
            for (auto& v : row) v = static_cast<uint8_t>((v * inv) % p);
            for (auto& other : rows_) {
                long factor = other[col];
                if (factor == 0) continue;
                for (std::size_t i = col; i <= ncols_; ++i)
                    other[i] = static_cast<uint8_t>((other[i] + (p - factor) * row[i]) % p);
            }
            pivot_row_of_col_[col] = static_cast<int>(rows_.size());
            pivot_cols_.push_back(col);
            rows_.push_back(std::move(row));
            return;
        }
        long factor = row[col];
        const auto& prow = rows_[static_cast<std::size_t>(pr)];
        for (std::size_t i = col; i <= ncols_; ++i)
            row[i] = static_cast<uint8_t>((row[i] + (p - factor) * prow[i]) % p);
    }
    if (row[ncols_] != 0) inconsistent_ = true;
}

std::vector<uint8_t> FpEliminator::particular() const {
    std::vector<uint8_t> x(ncols_, 0);
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        // Rows are fully reduced, so with free variables at zero the pivot
        // variable equals the right-hand side.
        const auto& row = rows_[r];
        std::size_t col = 0;
        while (col < ncols_ && row[col] == 0) ++col;
        x[col] = row[ncols_];
    }
    return x;
}

std::vector<std::vector<uint8_t>> FpEliminator::nullspace() const {
    std::vector<std::vector<uint8_t>> basis;
    std::vector<bool> is_pivot(ncols_, false);
    for (std::size_t c : pivot_cols_) is_pivot[c] = true;
    for (std::size_t fc = 0; fc < ncols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint8_t> v(ncols_, 0);
        v[fc] = 1;
        for (const auto& row : rows_) {
            std::size_t col = 0;
            while (col < ncols_ && row[col] == 0) ++col;
            if (col < ncols_ && row[fc] != 0)
                v[col] = static_cast<uint8_t>((p_ - row[fc]) % p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string SearchSpace::describe() const {
    return algebra->name + " over F" + std::to_string(prime) + ": " + std::to_string(unknowns) +
           " unknowns, " + std::to_string(free_parameters) + " free after elimination (" +
           std::to_string(candidates) + " candidates)";
}

// ---------------------------------------------------------------------------
// Shared machinery for enumerating bilinear forms

namespace {

struct Slots {
    std::vector<BasisId> left, right;
    std::map<std::pair<BasisId, BasisId>, std::size_t> index;

    Slots(const HopfData& L, const HopfData& R)
        : left(L.basis.elements()), right(R.basis.elements()) {
        for (const auto& a : left)
            for (const auto& b : right) index.emplace(std::make_pair(a, b), index.size());
    }
    std::size_t at(const BasisId& a, const BasisId& b) const {
        auto it = index.find(std::make_pair(a, b));
        if (it == index.end()) fail(Error::Kind::Domain, "slot outside the finite basis");
        return it->second;
    }
    std::size_t size() const { return index.size(); }
};

uint8_t to_residue(const Scalar& s, long p) {
    long r = s.residue() % p;
    return static_cast<uint8_t>(r < 0 ? r + p : r);
}

// Unit normalizations: form(1, b) = eps(b) and form(a, 1) = eps(a); linear
// even when the unit is a combination.
void add_unit_equations(FpEliminator& elim, const Slots& slots, const HopfData& L, const HopfData& R,
                        long p) {
    for (const auto& b : slots.right) {
        std::vector<uint8_t> row(slots.size(), 0);
        for (const auto& [uid, c] : L.unit.terms())
            row[slots.at(uid, b)] = to_residue(c, p);
        elim.add_equation(row, to_residue(R.counit.apply(b), p));
    }
    for (const auto& a : slots.left) {
        std::vector<uint8_t> row(slots.size(), 0);
        for (const auto& [uid, c] : R.unit.terms())
            row[slots.at(a, uid)] = to_residue(c, p);
        elim.add_equation(row, to_residue(L.counit.apply(a), p));
    }
}

// Commutation law rows: p(x1,y1) x2 y2 - y1 x1 p(x2,y2) = 0, one equation
// per output basis element of each window pair. Linear in the form.
void add_commutation_equations(FpEliminator& elim, const Slots& slots, const HopfData& A, long p) {
    for (const auto& x : slots.left)
        for (const auto& y : slots.right) {
            std::map<BasisId, std::vector<long>> rows;  // output id -> coefficients
            auto row_for = [&](const BasisId& out) -> std::vector<long>& {
                auto it = rows.find(out);
                if (it == rows.end())
                    it = rows.emplace(out, std::vector<long>(slots.size(), 0)).first;
                return it->second;
            };
            for (const auto& xs : sweedler(A, x, 2))
                for (const auto& ys : sweedler(A, y, 2)) {
                    long c = to_residue(xs.coeff * ys.coeff, p);
                    std::size_t s1 = slots.at(xs.factors[0], ys.factors[0]);
                    for (const auto& [out, mc] : A.mult.apply(xs.factors[1], ys.factors[1]).terms())
                        row_for(out)[s1] += c * to_residue(mc, p);
                    std::size_t s2 = slots.at(xs.factors[1], ys.factors[1]);
                    for (const auto& [out, mc] : A.mult.apply(ys.factors[0], xs.factors[0]).terms())
                        row_for(out)[s2] -= c * to_residue(mc, p);
                }
            for (auto& [out, coeffs] : rows) {
                std::vector<uint8_t> row(slots.size());
                bool nonzero = false;
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    long v = coeffs[i] % p;
                    if (v < 0) v += p;
                    row[i] = static_cast<uint8_t>(v);
                    nonzero = nonzero || v != 0;
                }
                if (nonzero) elim.add_equation(row, 0);
            }
        }
}

BilinearForm form_from_vector(const std::string& name, HopfPtr L, HopfPtr R, const Slots& slots,
                              const std::vector<uint8_t>& x) {
    Field f = L->field;
    std::map<std::vector<BasisId>, Scalar> table;
    for (const auto& a : slots.left)
        for (const auto& b : slots.right) {
            uint8_t v = x[slots.at(a, b)];
            if (v) table.emplace(std::vector<BasisId>{a, b}, Scalar::from_long(f, v));
        }
    return BilinearForm(name, L, R, ScalarMap::table(2, f, std::move(table)));
}

// Early-exit predicates used to filter enumeration candidates. Final
// survivors are re-validated by the full checkers in the callers' tests.
bool pred_mult_left(const BilinearForm& form) {
    const HopfData& L = *form.left();
    const HopfData& R = *form.right();
    const Field& k = form.field();
    for (const auto& x : L.basis.elements())
        for (const auto& y : L.basis.elements())
            for (const auto& z : R.basis.elements()) {
                Scalar lhs = form(L.mult.apply(x, y), LinComb::basis(k, z));
                Scalar rhs = Scalar::zero(k);
                for (const auto& zs : sweedler(R, z, 2))
                    rhs = rhs + form(x, zs.factors[0]) * form(y, zs.factors[1]) * zs.coeff;
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool pred_mult_right(const BilinearForm& form) {
    const HopfData& L = *form.left();
    const HopfData& R = *form.right();
    const Field& k = form.field();
    for (const auto& x : L.basis.elements())
        for (const auto& l : R.basis.elements())
            for (const auto& z : R.basis.elements()) {
                Scalar lhs = form(LinComb::basis(k, x), R.mult.apply(l, z));
                Scalar rhs = Scalar::zero(k);
                for (const auto& xs : sweedler(L, x, 2))
                    rhs = rhs + form(xs.factors[0], z) * form(xs.factors[1], l) * xs.coeff;
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool pred_conv_invertible(const BilinearForm& form) {
    // With an antipode the inverse is form o (S (x) Id) once the pairing laws
    // hold; without one, fall back to an exact solve on the window.
    if (form.left()->has_antipode()) return true;
    VerificationReport r = check_braiding(form, form.left()->basis.elements());
    const CheckItem* item = r.find("convolution-invertible");
    return item != nullptr && item->passed();
}

std::vector<std::vector<uint8_t>> enumerate_coset(const FpEliminator& elim, long p,
                                                  std::size_t max_free, const std::string& what) {
    if (!elim.consistent()) return {};
    if (elim.free_count() > max_free)
        fail(Error::Kind::Bound, what + ": " + std::to_string(elim.free_count()) +
                                     " free parameters exceed the bound of " +
                                     std::to_string(max_free));
    std::vector<uint8_t> part = elim.particular();
    std::vector<std::vector<uint8_t>> null = elim.nullspace();
    std::size_t d = null.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(p);

    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> digits(d, 0);
    for (std::size_t it = 0; it < total; ++it) {
        std::vector<uint8_t> x = part;
        for (std::size_t i = 0; i < d; ++i) {
            if (digits[i] == 0) continue;
            for (std::size_t j = 0; j < x.size(); ++j)
                x[j] = static_cast<uint8_t>((x[j] + digits[i] * null[i][j]) % p);
        }
        out.push_back(std::move(x));
        for (std::size_t i = d; i-- > 0;) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

}  // namespace

EnumerationResult enumerate_braidings(HopfPtr A, long p, std::size_t max_free) {
    if (!A->basis.is_finite()) fail(Error::Kind::Domain, "enumeration needs a finite basis");
    if (A->field != Field::prime(p))
        fail(Error::Kind::FieldMismatch, "algebra must be defined over F" + std::to_string(p));
    A->require_char_ok(p);

    Slots slots(*A, *A);
    FpEliminator elim(p, slots.size());
    add_unit_equations(elim, slots, *A, *A, p);
    add_commutation_equations(elim, slots, *A, p);

    EnumerationResult result;
    result.space = SearchSpace{A, p, slots.size(), elim.free_count(), 0};
    auto candidates = enumerate_coset(elim, p, max_free, "braiding search on " + A->name);
    result.space.candidates = candidates.size();

    std::size_t n = 0;
    for (const auto& x : candidates) {
        BilinearForm form =
            form_from_vector("braiding#" + std::to_string(n), A, A, slots, x);
        if (pred_mult_left(form) && pred_mult_right(form) && pred_conv_invertible(form)) {
            result.forms.push_back(form.renamed("braiding#" + std::to_string(result.forms.size())));
            ++n;
        }
    }
    return result;
}

namespace {

bool pred_rs_twisted(const BilinearForm& u, const BilinearForm& pb, const ExtendingDatum& omega) {
    const HopfData& A = *omega.base;
    const HopfData& H = *omega.hpart;
    const Field& k = u.field();
    for (const auto& a : A.basis.elements())
        for (const auto& g : H.basis.elements())
            for (const auto& t : H.basis.elements()) {
                Scalar lhs = Scalar::zero(k), rhs = Scalar::zero(k);
                for (const auto& as : sweedler(A, a, 2)) {
                    for (const auto& gs : sweedler(H, g, 2))
                        for (const auto& ts : sweedler(H, t, 2)) {
                            Scalar c = as.coeff * gs.coeff * ts.coeff;
                            lhs = lhs + u.eval_mixed(as.factors[0],
                                                     H.mult.apply(gs.factors[1], ts.factors[1])) *
                                            pb.eval_mixed(as.factors[1],
                                                          omega.cocycle.apply(gs.factors[0],
                                                                              ts.factors[0])) *
                                            c;
                        }
                    rhs = rhs + u(as.factors[0], t) * u(as.factors[1], g) * as.coeff;
                }
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool pred_ls_twisted(const BilinearForm& v, const BilinearForm& pb, const ExtendingDatum& omega) {
    const HopfData& A = *omega.base;
    const HopfData& H = *omega.hpart;
    const Field& k = v.field();
    for (const auto& h : H.basis.elements())
        for (const auto& g : H.basis.elements())
            for (const auto& cbasis : A.basis.elements()) {
                Scalar lhs = Scalar::zero(k), rhs = Scalar::zero(k);
                for (const auto& cs : sweedler(A, cbasis, 2)) {
                    for (const auto& hs : sweedler(H, h, 2))
                        for (const auto& gs : sweedler(H, g, 2)) {
                            Scalar c = cs.coeff * hs.coeff * gs.coeff;
                            lhs = lhs + pb(omega.cocycle.apply(hs.factors[0], gs.factors[0]),
                                           LinComb::basis(k, cs.factors[0])) *
                                            v(H.mult.apply(hs.factors[1], gs.factors[1]),
                                              LinComb::basis(k, cs.factors[1])) *
                                            c;
                        }
                    rhs = rhs + v(h, cs.factors[0]) * v(g, cs.factors[1]) * cs.coeff;
                }
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool pred_sbr_twisted(const BilinearForm& tau, const BilinearForm& u, const BilinearForm& v,
                      const ExtendingDatum& omega) {
    const HopfData& H = *omega.hpart;
    const Field& k = tau.field();
    for (const auto& h : H.basis.elements())
        for (const auto& g : H.basis.elements())
            for (const auto& t : H.basis.elements()) {
                Scalar l1 = Scalar::zero(k), r1 = Scalar::zero(k);
                for (const auto& ts : sweedler(H, t, 2)) {
                    for (const auto& hs : sweedler(H, h, 2))
                        for (const auto& gs : sweedler(H, g, 2)) {
                            Scalar c = ts.coeff * hs.coeff * gs.coeff;
                            l1 = l1 + u(omega.cocycle.apply(hs.factors[0], gs.factors[0]),
                                        LinComb::basis(k, ts.factors[0])) *
                                          tau(H.mult.apply(hs.factors[1], gs.factors[1]),
                                              LinComb::basis(k, ts.factors[1])) *
                                          c;
                        }
                    r1 = r1 + tau(h, ts.factors[0]) * tau(g, ts.factors[1]) * ts.coeff;
                }
                if (!(l1 == r1)) return false;

                Scalar l2 = Scalar::zero(k), r2 = Scalar::zero(k);
                for (const auto& hs : sweedler(H, h, 2)) {
                    for (const auto& gs : sweedler(H, g, 2))
                        for (const auto& ts : sweedler(H, t, 2)) {
                            Scalar c = hs.coeff * gs.coeff * ts.coeff;
                            l2 = l2 + tau.eval_mixed(hs.factors[0],
                                                     H.mult.apply(gs.factors[1], ts.factors[1])) *
                                          v.eval_mixed(hs.factors[1],
                                                       omega.cocycle.apply(gs.factors[0],
                                                                           ts.factors[0])) *
                                          c;
                        }
                    r2 = r2 + tau(hs.factors[0], t) * tau(hs.factors[1], g) * hs.coeff;
                }
                if (!(l2 == r2)) return false;
            }
    return true;
}

}  // namespace

EnumerationResult enumerate_rs_forms(const BilinearForm& pbraid, const ExtendingDatum& omega,
                                     long p, std::size_t max_free) {
    HopfPtr A = omega.base;
    HopfPtr H = omega.hpart;
    Slots slots(*A, *H);
    FpEliminator elim(p, slots.size());
    add_unit_equations(elim, slots, *A, *H, p);
    EnumerationResult result;
    result.space = SearchSpace{A, p, slots.size(), elim.free_count(), 0};
    auto candidates = enumerate_coset(elim, p, max_free, "right pairing search");
    result.space.candidates = candidates.size();
    for (const auto& x : candidates) {
        BilinearForm form = form_from_vector("u#" + std::to_string(result.forms.size()), A, H, slots, x);
        if (pred_mult_left(form) && pred_rs_twisted(form, pbraid, omega))
            result.forms.push_back(std::move(form));
    }
    return result;
}

EnumerationResult enumerate_ls_forms(const BilinearForm& pbraid, const ExtendingDatum& omega,
                                     long p, std::size_t max_free) {
    HopfPtr A = omega.base;
    HopfPtr H = omega.hpart;
    Slots slots(*H, *A);
    FpEliminator elim(p, slots.size());
    add_unit_equations(elim, slots, *H, *A, p);
    EnumerationResult result;
    result.space = SearchSpace{H, p, slots.size(), elim.free_count(), 0};
    auto candidates = enumerate_coset(elim, p, max_free, "left pairing search");
    result.space.candidates = candidates.size();
    for (const auto& x : candidates) {
        BilinearForm form = form_from_vector("v#" + std::to_string(result.forms.size()), H, A, slots, x);
        if (pred_mult_right(form) && pred_ls_twisted(form, pbraid, omega))
            result.forms.push_back(std::move(form));
    }
    return result;
}

EnumerationResult enumerate_sbr_forms(const BilinearForm& u, const BilinearForm& v,
                                      const ExtendingDatum& omega, long p, std::size_t max_free) {
    HopfPtr H = omega.hpart;
    Slots slots(*H, *H);
    FpEliminator elim(p, slots.size());
    add_unit_equations(elim, slots, *H, *H, p);
    add_commutation_equations(elim, slots, *H, p);
    EnumerationResult result;
    result.space = SearchSpace{H, p, slots.size(), elim.free_count(), 0};
    auto candidates = enumerate_coset(elim, p, max_free, "skew braiding search");
    result.space.candidates = candidates.size();
    for (const auto& x : candidates) {
        BilinearForm form =
            form_from_vector("tau#" + std::to_string(result.forms.size()), H, H, slots, x);
        if (pred_sbr_twisted(form, u, v, omega)) result.forms.push_back(std::move(form));
    }
    return result;
}

bool forms_identical(const BilinearForm& a, const BilinearForm& b) {
    for (const auto& x : a.left()->basis.elements())
        for (const auto& y : a.right()->basis.elements())
            if (!(a(x, y) == b(x, y))) return false;
    return true;
}

std::string BijectionReport::to_text() const {
    std::string s = "braidings on the product: " + std::to_string(sigma_count) +
                    "; valid quadruples: " + std::to_string(quadruple_count);
    s += counts_match ? " (counts match)" : " (COUNTS DIFFER)";
    s += round_trips_identity ? "; assembly and decomposition are mutually inverse"
                              : "; ROUND TRIP FAILED";
    return s;
}

BijectionReport cross_validate_bijection(ProductPtr prod, long p, std::size_t max_free) {
    BijectionReport report;
    HopfPtr P = prod->hopf;
    HopfPtr A = prod->datum->base;
    HopfPtr H = prod->datum->hpart;

    EnumerationResult sigmas = enumerate_braidings(P, p, max_free);
    report.sigmas = sigmas.forms;
    report.sigma_count = sigmas.forms.size();

    EnumerationResult ps = enumerate_braidings(A, p, max_free);
    for (const auto& pb : ps.forms) {
        EnumerationResult us = enumerate_rs_forms(pb, *prod->datum, p, max_free);
        EnumerationResult vs = enumerate_ls_forms(pb, *prod->datum, p, max_free);
        for (const auto& u : us.forms)
            for (const auto& v : vs.forms) {
                EnumerationResult taus = enumerate_sbr_forms(u, v, *prod->datum, p, max_free);
                for (const auto& tau : taus.forms) {
                    Quadruple quad{pb, tau, u, v};
                    if (check_compat(quad, *prod).all_pass()) report.quadruples.push_back(quad);
                }
            }
    }
    report.quadruple_count = report.quadruples.size();
    report.counts_match = report.sigma_count == report.quadruple_count;

    // assemble o decompose = id and decompose o assemble = id, extensionally.
    report.round_trips_identity = true;
    for (const auto& quad : report.quadruples) {
        BilinearForm sigma = assemble_sigma(quad, *prod, /*force=*/true);
        bool found = false;
        for (const auto& s : report.sigmas) found = found || forms_identical(s, sigma);
        Quadruple back = decompose_sigma(sigma, *prod);
        bool same = forms_identical(back.p, quad.p) && forms_identical(back.tau, quad.tau) &&
                    forms_identical(back.u, quad.u) && forms_identical(back.v, quad.v);
        if (!found || !same) report.round_trips_identity = false;
    }
    for (const auto& sigma : report.sigmas) {
        Quadruple quad = decompose_sigma(sigma, *prod);
        bool found = false;
        for (const auto& q : report.quadruples)
            found = found ||
                    (forms_identical(q.p, quad.p) && forms_identical(q.tau, quad.tau) &&
                     forms_identical(q.u, quad.u) && forms_identical(q.v, quad.v));
        BilinearForm again = assemble_sigma(quad, *prod, /*force=*/true);
        if (!found || !forms_identical(again, sigma)) report.round_trips_identity = false;
    }
    return report;
}

}  // namespace hopf
