#include "hopf/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "hopf/dual.hpp"

namespace hopf {

namespace {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rule-backed group algebra k[Z] and binomial coalgebra k[X]

HopfPtr make_group_algebra_kZ(const Field& f, long window) {
    auto one = [](std::span<const BasisId>) { return std::size_t{1}; };
    LinMap mult = LinMap::rule(
        2, f,
        [f](std::span<const BasisId> args) {
            return LinComb::basis(f, BasisId("g", {args[0].index()[0] + args[1].index()[0]}));
        },
        one);
    LinMap comult = LinMap::rule(
        1, f,
        [f](std::span<const BasisId> args) {
            return LinComb::basis(f, BasisId::pair(args[0], args[0]));
        },
        one);
    ScalarMap counit = ScalarMap::rule(1, f, [f](std::span<const BasisId>) { return Scalar::one(f); });
    LinMap antipode = LinMap::rule(
        1, f,
        [f](std::span<const BasisId> args) {
            return LinComb::basis(f, BasisId("g", {-args[0].index()[0]}));
        },
        one);
    return std::make_shared<HopfData>("kZ", f, BasisDesc::integer_powers("g", window), std::move(mult),
                                      LinComb::basis(f, BasisId("g", {0})), std::move(comult),
                                      std::move(counit), std::move(antipode));
}

HopfPtr make_binomial_kX(const Field& f, long window) {
    auto one = [](std::span<const BasisId>) { return std::size_t{1}; };
    LinMap mult = LinMap::rule(
        2, f,
        [f](std::span<const BasisId> args) {
            return LinComb::basis(f, BasisId("X", {args[0].index()[0] + args[1].index()[0]}));
        },
        one);
    LinMap comult = LinMap::rule(
        1, f,
        [f](std::span<const BasisId> args) {
            long n = args[0].index()[0];
            LinComb out = LinComb::zero(f);
            for (long k = 0; k <= n; ++k)
                out.add_term(BasisId::pair(BasisId("X", {k}), BasisId("X", {n - k})),
                             Scalar::from_rational(f, Rat(binomial(n, k))));
            return out;
        },
        [](std::span<const BasisId> args) { return static_cast<std::size_t>(args[0].index()[0]) + 1; });
    ScalarMap counit = ScalarMap::rule(1, f, [f](std::span<const BasisId> args) {
        return args[0].index()[0] == 0 ? Scalar::one(f) : Scalar::zero(f);
    });
    LinMap antipode = LinMap::rule(
        1, f,
        [f](std::span<const BasisId> args) {
            long n = args[0].index()[0];
            return LinComb::monomial(f, args[0], Scalar::from_long(f, n % 2 == 0 ? 1 : -1));
        },
        one);
    return std::make_shared<HopfData>("kX", f, BasisDesc::natural_powers("X", window), std::move(mult),
                                      LinComb::basis(f, BasisId("X", {0})), std::move(comult),
                                      std::move(counit), std::move(antipode));
}

// ---------------------------------------------------------------------------
// Sweedler's four-dimensional Hopf algebra

HopfPtr make_sweedler_h4(const Field& f) {
    BasisId e1("1"), eg("g"), ex("x"), egx("gx");
    auto one = Scalar::one(f);
    auto neg = Scalar::from_long(f, -1);

    std::map<std::vector<BasisId>, LinComb> mult;
    auto set = [&](const BasisId& a, const BasisId& b, LinComb v) {
        if (!v.is_zero()) mult.emplace(std::vector<BasisId>{a, b}, std::move(v));
    };
    for (const auto& y : {e1, eg, ex, egx}) {
        set(e1, y, LinComb::basis(f, y));
        if (y != e1) set(y, e1, LinComb::basis(f, y));
    }
    set(eg, eg, LinComb::basis(f, e1));
    set(eg, ex, LinComb::basis(f, egx));
    set(eg, egx, LinComb::basis(f, ex));
    set(ex, eg, LinComb::monomial(f, egx, neg));
    set(egx, eg, LinComb::monomial(f, ex, neg));
    // x x = x gx = gx x = gx gx = 0

    std::map<std::vector<BasisId>, LinComb> comult;
    comult.emplace(std::vector<BasisId>{e1}, LinComb::basis(f, BasisId::pair(e1, e1)));
    comult.emplace(std::vector<BasisId>{eg}, LinComb::basis(f, BasisId::pair(eg, eg)));
    {
        LinComb dx = LinComb::basis(f, BasisId::pair(ex, eg));
        dx.add_term(BasisId::pair(e1, ex), one);
        comult.emplace(std::vector<BasisId>{ex}, std::move(dx));
        LinComb dgx = LinComb::basis(f, BasisId::pair(egx, e1));
        dgx.add_term(BasisId::pair(eg, egx), one);
        comult.emplace(std::vector<BasisId>{egx}, std::move(dgx));
    }

    std::map<std::vector<BasisId>, Scalar> counit;
    counit.emplace(std::vector<BasisId>{e1}, one);
    counit.emplace(std::vector<BasisId>{eg}, one);

    std::map<std::vector<BasisId>, LinComb> antipode;
    antipode.emplace(std::vector<BasisId>{e1}, LinComb::basis(f, e1));
    antipode.emplace(std::vector<BasisId>{eg}, LinComb::basis(f, eg));
    antipode.emplace(std::vector<BasisId>{ex}, LinComb::basis(f, egx));
    antipode.emplace(std::vector<BasisId>{egx}, LinComb::monomial(f, ex, neg));

    return std::make_shared<HopfData>(
        "H4", f, BasisDesc::finite({e1, eg, ex, egx}), LinMap::table(2, f, std::move(mult)),
        LinComb::basis(f, e1), LinMap::table(1, f, std::move(comult)),
        ScalarMap::table(1, f, std::move(counit)), LinMap::table(1, f, std::move(antipode)),
        std::map<std::string, std::string>{{"char_ne", "2"}});
}

BilinearForm h4_braiding(HopfPtr h4, const std::string& param) {
    const Field& f = h4->field;
    Scalar al = Scalar::parameter(f, param);
    Scalar one = Scalar::one(f);
    Scalar neg = Scalar::from_long(f, -1);
    BasisId e1("1"), eg("g"), ex("x"), egx("gx");
    std::map<std::vector<BasisId>, Scalar> t;
    t.emplace(std::vector<BasisId>{e1, e1}, one);
    t.emplace(std::vector<BasisId>{e1, eg}, one);
    t.emplace(std::vector<BasisId>{eg, e1}, one);
    t.emplace(std::vector<BasisId>{eg, eg}, neg);
    // The pairing laws force p(g x, g x) = -p(x, g x), so the only
    // consistent one-parameter family carries -alpha at the (x, gx) cell.
    t.emplace(std::vector<BasisId>{ex, ex}, al);
    t.emplace(std::vector<BasisId>{ex, egx}, -al);
    t.emplace(std::vector<BasisId>{egx, ex}, al);
    t.emplace(std::vector<BasisId>{egx, egx}, al);
    return BilinearForm("p_" + param, h4, h4, ScalarMap::table(2, f, std::move(t)));
}

// ---------------------------------------------------------------------------
// Cyclic group algebras and the three-dimensional monoid toy

HopfPtr make_cyclic_group_algebra(const Field& f, long n) {
    std::vector<BasisId> basis;
    for (long t = 0; t < n; ++t) basis.push_back(BasisId("g", {t}));
    std::map<std::vector<BasisId>, LinComb> mult;
    std::map<std::vector<BasisId>, LinComb> comult;
    std::map<std::vector<BasisId>, Scalar> counit;
    std::map<std::vector<BasisId>, LinComb> antipode;
    for (long s = 0; s < n; ++s) {
        for (long t = 0; t < n; ++t)
            mult.emplace(std::vector<BasisId>{basis[s], basis[t]},
                         LinComb::basis(f, basis[(s + t) % n]));
        comult.emplace(std::vector<BasisId>{basis[s]},
                       LinComb::basis(f, BasisId::pair(basis[s], basis[s])));
        counit.emplace(std::vector<BasisId>{basis[s]}, Scalar::one(f));
        antipode.emplace(std::vector<BasisId>{basis[s]}, LinComb::basis(f, basis[(n - s) % n]));
    }
    return std::make_shared<HopfData>("kZ" + std::to_string(n), f, BasisDesc::finite(basis),
                                      LinMap::table(2, f, std::move(mult)),
                                      LinComb::basis(f, basis[0]),
                                      LinMap::table(1, f, std::move(comult)),
                                      ScalarMap::table(1, f, std::move(counit)),
                                      LinMap::table(1, f, std::move(antipode)));
}

HopfPtr make_left_zero_monoid_toy(const Field& f) {
    BasisId e1("1"), ea("a"), eb("b");
    std::map<std::vector<BasisId>, LinComb> mult;
    for (const auto& y : {e1, ea, eb}) {
        mult.emplace(std::vector<BasisId>{e1, y}, LinComb::basis(f, y));
        if (y != e1) mult.emplace(std::vector<BasisId>{y, e1}, LinComb::basis(f, y));
    }
    // x y = x for x, y in {a, b}: associative, noncommutative, no inverses.
    mult.emplace(std::vector<BasisId>{ea, ea}, LinComb::basis(f, ea));
    mult.emplace(std::vector<BasisId>{ea, eb}, LinComb::basis(f, ea));
    mult.emplace(std::vector<BasisId>{eb, ea}, LinComb::basis(f, eb));
    mult.emplace(std::vector<BasisId>{eb, eb}, LinComb::basis(f, eb));
    std::map<std::vector<BasisId>, LinComb> comult;
    std::map<std::vector<BasisId>, Scalar> counit;
    for (const auto& y : {e1, ea, eb}) {
        comult.emplace(std::vector<BasisId>{y}, LinComb::basis(f, BasisId::pair(y, y)));
        counit.emplace(std::vector<BasisId>{y}, Scalar::one(f));
    }
    return std::make_shared<HopfData>("toy3", f, BasisDesc::finite({e1, ea, eb}),
                                      LinMap::table(2, f, std::move(mult)), LinComb::basis(f, e1),
                                      LinMap::table(1, f, std::move(comult)),
                                      ScalarMap::table(1, f, std::move(counit)));
}

// ---------------------------------------------------------------------------
// The quotient U(n)~: letters c < x_1..x_n < y_1..y_n, words with exponents
// in {0,1}; c anticommutes with every x_i and y_i, x's anticommute among
// themselves, y's likewise, and x's commute with y's.

namespace words {

int kind(int letter, int n) { return letter == 0 ? 0 : (letter <= n ? 1 : 2); }

int swap_sign(int a, int b, int n) {
    int ka = kind(a, n), kb = kind(b, n);
    if ((ka == 1 && kb == 2) || (ka == 2 && kb == 1)) return 1;
    return -1;
}

// Normalize a letter string into the canonical ascending word; returns the
// sign, or 0 when a square x_i^2 / y_i^2 kills the word.
std::pair<int, std::vector<int>> normalize(std::vector<int> ls, int n) {
    int sign = 1;
    std::vector<int> out;
    for (int l : ls) {
        std::size_t pos = out.size();
        while (pos > 0 && out[pos - 1] > l) {
            sign *= swap_sign(out[pos - 1], l, n);
            --pos;
        }
        if (pos > 0 && out[pos - 1] == l) {
            if (l == 0) {
                out.erase(out.begin() + (pos - 1));  // c c = 1
            } else {
                return {0, {}};
            }
        } else {
            out.insert(out.begin() + pos, l);
        }
    }
    return {sign, std::move(out)};
}

std::string letter_name(int l, int n) {
    if (l == 0) return "c";
    if (l <= n) return "x" + std::to_string(l);
    return "y" + std::to_string(l - n);
}

BasisId word_id(const std::vector<int>& w, int n) {
    if (w.empty()) return BasisId("1");
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += letter_name(w[i], n);
    }
    return BasisId(std::move(s));
}

// Coproduct splittings of a single letter as (left word, right word) pairs.
std::vector<std::pair<std::vector<int>, std::vector<int>>> letter_comult(int l, int n) {
    if (l == 0) return {{{0}, {0}}};
    if (kind(l, n) == 1) return {{{}, {l}}, {{l}, {0}}};  // 1 (x) x_i + x_i (x) c
    return {{{0}, {l}}, {{l}, {}}};                       // c (x) y_i + y_i (x) 1
}

std::vector<int> letter_antipode(int l, int n) {
    if (l == 0) return {0};
    if (kind(l, n) == 1) return {0, l};  // c x_i
    return {l, 0};                       // y_i c
}

HopfPtr build_word_algebra(const Field& f, int n, const std::vector<int>& letters,
                           const std::string& name) {
    // All subsets of the letter set, in subset-mask order.
    std::vector<std::vector<int>> basis_words;
    std::size_t m = letters.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> w;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) w.push_back(letters[i]);
        std::sort(w.begin(), w.end());
        basis_words.push_back(std::move(w));
    }
    std::sort(basis_words.begin(), basis_words.end());
    basis_words.erase(std::unique(basis_words.begin(), basis_words.end()), basis_words.end());

    std::vector<BasisId> basis;
    for (const auto& w : basis_words) basis.push_back(word_id(w, n));

    auto word_of = std::make_shared<std::map<BasisId, std::vector<int>>>();
    for (std::size_t i = 0; i < basis.size(); ++i) word_of->emplace(basis[i], basis_words[i]);

    auto mult_words = [f, n](const std::vector<int>& u, const std::vector<int>& v) {
        std::vector<int> cat = u;
        cat.insert(cat.end(), v.begin(), v.end());
        auto [sign, w] = normalize(std::move(cat), n);
        if (sign == 0) return LinComb::zero(f);
        return LinComb::monomial(f, word_id(w, n), Scalar::from_long(f, sign));
    };

    std::map<std::vector<BasisId>, LinComb> mult;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            LinComb v = mult_words(basis_words[i], basis_words[j]);
            if (!v.is_zero()) mult.emplace(std::vector<BasisId>{basis[i], basis[j]}, std::move(v));
        }

    std::map<std::vector<BasisId>, LinComb> comult;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // Product of the letter coproducts, multiplied out componentwise.
        std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> acc = {{{}, {}, 1}};
        for (int l : basis_words[i]) {
            std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> next;
            for (const auto& [lw, rw, sg] : acc)
                for (const auto& [la, rb] : letter_comult(l, n)) {
                    std::vector<int> lcat = lw;
                    lcat.insert(lcat.end(), la.begin(), la.end());
                    auto [s1, lnorm] = normalize(std::move(lcat), n);
                    if (s1 == 0) continue;
                    std::vector<int> rcat = rw;
                    rcat.insert(rcat.end(), rb.begin(), rb.end());
                    auto [s2, rnorm] = normalize(std::move(rcat), n);
                    if (s2 == 0) continue;
                    next.push_back({std::move(lnorm), std::move(rnorm), sg * s1 * s2});
                }
            acc = std::move(next);
        }
        LinComb out = LinComb::zero(f);
        for (const auto& [lw, rw, sg] : acc)
            out.add_term(BasisId::pair(word_id(lw, n), word_id(rw, n)), Scalar::from_long(f, sg));
        comult.emplace(std::vector<BasisId>{basis[i]}, std::move(out));
    }

    std::map<std::vector<BasisId>, Scalar> counit;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool only_c = true;
        for (int l : basis_words[i])
            if (l != 0) only_c = false;
        if (only_c) counit.emplace(std::vector<BasisId>{basis[i]}, Scalar::one(f));
    }

    std::map<std::vector<BasisId>, LinComb> antipode;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // S(l1 ... lk) = S(lk) ... S(l1)
        std::vector<int> cat;
        for (auto it = basis_words[i].rbegin(); it != basis_words[i].rend(); ++it) {
            auto sl = letter_antipode(*it, n);
            cat.insert(cat.end(), sl.begin(), sl.end());
        }
        auto [sign, w] = normalize(std::move(cat), n);
        LinComb out = sign == 0 ? LinComb::zero(f)
                                : LinComb::monomial(f, word_id(w, n), Scalar::from_long(f, sign));
        antipode.emplace(std::vector<BasisId>{basis[i]}, std::move(out));
    }

    return std::make_shared<HopfData>(
        name, f, BasisDesc::finite(basis), LinMap::table(2, f, std::move(mult)),
        LinComb::basis(f, BasisId("1")), LinMap::table(1, f, std::move(comult)),
        ScalarMap::table(1, f, std::move(counit)), LinMap::table(1, f, std::move(antipode)),
        std::map<std::string, std::string>{{"char_ne", "2"}});
}

std::map<BasisId, std::vector<BasisId>> letter_map(const HopfData& alg, int n) {
    std::map<BasisId, std::vector<BasisId>> out;
    for (const auto& id : alg.basis.elements()) {
        std::vector<BasisId> letters;
        if (id.name() != "1") {
            std::string cur;
            for (char ch : id.name() + std::string("*")) {
                if (ch == '*') {
                    letters.push_back(BasisId(cur));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
        }
        out.emplace(id, std::move(letters));
        (void)n;
    }
    return out;
}

}  // namespace words

HopfPtr make_utilde(const Field& f, int n) {
    std::vector<int> letters;
    for (int l = 0; l <= 2 * n; ++l) letters.push_back(l);
    return words::build_word_algebra(f, n, letters, "Utilde(" + std::to_string(n) + ")");
}

HopfPtr make_borel_plus(const Field& f, int n) {
    std::vector<int> letters = {0};
    for (int i = 1; i <= n; ++i) letters.push_back(i);
    return words::build_word_algebra(f, n, letters, "B+(" + std::to_string(n) + ")");
}

HopfPtr make_borel_minus(const Field& f, int n) {
    std::vector<int> letters = {0};
    for (int i = 1; i <= n; ++i) letters.push_back(n + i);
    return words::build_word_algebra(f, n, letters, "B-(" + std::to_string(n) + ")");
}

BilinearForm borel_plus_braiding(HopfPtr bplus, int n) {
    const Field& f = bplus->field;
    std::map<std::vector<BasisId>, Scalar> gen;
    gen.emplace(std::vector<BasisId>{BasisId("c"), BasisId("c")}, Scalar::from_long(f, -1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            gen.emplace(std::vector<BasisId>{BasisId("x" + std::to_string(i)),
                                             BasisId("x" + std::to_string(j))},
                        Scalar::parameter(f, "beta_" + std::to_string(i) + std::to_string(j)));
    auto lm = words::letter_map(*bplus, n);
    return extend_pairing_from_generators("p_beta", bplus, bplus, gen, lm, lm);
}

BilinearForm borel_minus_braiding(HopfPtr bminus, int n) {
    const Field& f = bminus->field;
    std::map<std::vector<BasisId>, Scalar> gen;
    gen.emplace(std::vector<BasisId>{BasisId("c"), BasisId("c")}, Scalar::from_long(f, -1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            gen.emplace(std::vector<BasisId>{BasisId("y" + std::to_string(i)),
                                             BasisId("y" + std::to_string(j))},
                        Scalar::parameter(f, "alpha_" + std::to_string(i) + std::to_string(j)));
    auto lm = words::letter_map(*bminus, n);
    return extend_pairing_from_generators("tau_alpha", bminus, bminus, gen, lm, lm);
}

BilinearForm borel_pairing(HopfPtr bminus, HopfPtr bplus, int n) {
    const Field& f = bminus->field;
    std::map<std::vector<BasisId>, Scalar> gen;
    gen.emplace(std::vector<BasisId>{BasisId("c"), BasisId("c")}, Scalar::from_long(f, -1));
    for (int i = 1; i <= n; ++i)
        gen.emplace(std::vector<BasisId>{BasisId("y" + std::to_string(i)),
                                         BasisId("x" + std::to_string(i))},
                    Scalar::one(f));
    auto lmm = words::letter_map(*bminus, n);
    auto lmp = words::letter_map(*bplus, n);
    return extend_pairing_from_generators("lambda", bminus, bplus, gen, lmm, lmp);
}

// ---------------------------------------------------------------------------
// Forms on kZ and kX

BilinearForm kz_power_braiding(HopfPtr kZ, const std::string& param) {
    Field f = kZ->field;
    Scalar q = Scalar::parameter(f, param);
    ScalarMap values = ScalarMap::rule(2, f, [q](std::span<const BasisId> args) {
        return q.pow(args[0].index()[0] * args[1].index()[0]);
    });
    return BilinearForm("p_" + param, kZ, kZ, std::move(values));
}

BilinearForm kx_diagonal_braiding(HopfPtr kX, const std::string& param) {
    Field f = kX->field;
    Scalar al = Scalar::parameter(f, param);
    ScalarMap values = ScalarMap::rule(2, f, [f, al](std::span<const BasisId> args) {
        long i = args[0].index()[0], j = args[1].index()[0];
        if (i != j) return Scalar::zero(f);
        return Scalar::from_rational(f, Rat(factorial(i))) * al.pow(i);
    });
    return BilinearForm("tau_" + param, kX, kX, std::move(values));
}

BilinearForm kx_kz_pairing(HopfPtr kX, HopfPtr kZ) {
    Field f = kX->field;
    ScalarMap values = ScalarMap::rule(2, f, [f](std::span<const BasisId> args) {
        long m = args[0].index()[0], t = args[1].index()[0];
        if (m == 0) return Scalar::one(f);  // t^0 = 1 even at t = 0
        return Scalar::from_long(f, t).pow(m);
    });
    return BilinearForm("lambda", kX, kZ, std::move(values));
}

BilinearForm kz_kx_closed_sigma(ProductPtr prod, const std::string& alpha_param,
                                const std::string& q_param) {
    HopfPtr P = prod->hopf;
    Field f = P->field;
    Scalar al = Scalar::parameter(f, alpha_param);
    Scalar q = Scalar::parameter(f, q_param);
    ScalarMap values = ScalarMap::rule(2, f, [f, al, q](std::span<const BasisId> args) {
        long t = args[0].parts()[0].index()[0];
        long n = args[0].parts()[1].index()[0];
        long l = args[1].parts()[0].index()[0];
        long m = args[1].parts()[1].index()[0];
        Scalar acc = Scalar::zero(f);
        for (long k = 0; k <= m; ++k) {
            long r = m - k;
            if (r > n) continue;
            Rat coeff = Rat(binomial(m, k)) * Rat(binomial(n, r)) * Rat(factorial(r));
            if (k % 2 != 0) coeff = -coeff;
            Scalar tk = k == 0 ? Scalar::one(f) : Scalar::from_long(f, t).pow(k);
            Scalar ln = (n - r) == 0 ? Scalar::one(f) : Scalar::from_long(f, l).pow(n - r);
            acc = acc + Scalar::from_rational(f, coeff) * tk * q.pow(t * l) * ln * al.pow(r);
        }
        return acc;
    });
    return BilinearForm("sigma-closed", P, P, std::move(values));
}

// ---------------------------------------------------------------------------
// Fixtures

std::vector<std::string> fixture_names() {
    return {"kZ",       "kX",       "kZ-bowtie-kX", "H4",       "H4-double",
            "Utilde(1)", "Utilde(2)", "Borel(1)",     "Borel(2)", "Borel-double(1)",
            "Borel-double(2)", "Z2-toys"};
}

namespace {

int parse_rank(const std::string& name, const std::string& prefix) {
    // "prefix(n)" -> n
    std::string tail = name.substr(prefix.size());
    if (tail.size() < 3 || tail.front() != '(' || tail.back() != ')')
        fail(Error::Kind::Parse, "bad fixture name: " + name);
    int n = std::atoi(tail.substr(1, tail.size() - 2).c_str());
    if (n < 1 || n > 3) fail(Error::Kind::Bound, "rank out of range in " + name);
    return n;
}

std::vector<std::string> borel_params(int n) {
    std::vector<std::string> params;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            params.push_back("alpha_" + std::to_string(i) + std::to_string(j));
            params.push_back("beta_" + std::to_string(i) + std::to_string(j));
        }
    return params;
}

Fixture make_borel_fixture(int n) {
    Fixture fx;
    fx.name = "Borel(" + std::to_string(n) + ")";
    Field f = Field::rational_functions(borel_params(n));
    HopfPtr bp = make_borel_plus(f, n);
    HopfPtr bm = make_borel_minus(f, n);
    fx.algebras.emplace("B+", bp);
    fx.algebras.emplace("B-", bm);
    fx.forms.emplace("p", borel_plus_braiding(bp, n));
    fx.forms.emplace("tau", borel_minus_braiding(bm, n));
    fx.forms.emplace("lambda", borel_pairing(bm, bp, n));
    return fx;
}

Fixture make_borel_double_fixture(int n) {
    Fixture fx = make_borel_fixture(n);
    fx.name = "Borel-double(" + std::to_string(n) + ")";
    HopfPtr bp = fx.algebra("B+");
    HopfPtr bm = fx.algebra("B-");
    fx.products.emplace("double", build_gqd(bp, bm, fx.form("lambda")));

    if (n == 2) {
        // The sixteen-sector table of the canonical braiding; rows are
        // (a |><| h), columns (b |><| g). Zero sectors are spelled out too.
        std::vector<Fixture::ExpectedEntry> table;
        auto id = [](const std::string& a, const std::string& h) {
            return BasisId::pair(BasisId(a), BasisId(h));
        };
        auto add = [&](const BasisId& l, const BasisId& r, const std::string& lit,
                       const std::string& note) {
            table.push_back({l, r, lit, note});
        };
        std::vector<std::string> xs = {"x1", "x2"}, ys = {"y1", "y2"};
        add(id("c", "c"), id("c", "c"), "1", "corner");
        for (const auto& yi : ys) add(id("c", "c"), id("c", yi), "0", "row c|c");
        for (const auto& xj : xs) add(id("c", "c"), id(xj, "c"), "0", "row c|c");
        for (const auto& xk : xs)
            for (const auto& yl : ys) add(id("c", "c"), id(xk, yl), "0", "row c|c");
        for (int s = 1; s <= 2; ++s) {
            add(id("c", ys[s - 1]), id("c", "c"), "0", "col c|c");
            for (int i = 1; i <= 2; ++i)
                add(id("c", ys[s - 1]), id("c", ys[i - 1]),
                    "alpha_" + std::to_string(s) + std::to_string(i), "alpha sector");
            for (int j = 1; j <= 2; ++j)
                add(id("c", ys[s - 1]), id(xs[j - 1], "c"), s == j ? "1" : "0", "delta sector");
            for (const auto& xk : xs)
                for (const auto& yl : ys) add(id("c", ys[s - 1]), id(xk, yl), "0", "zero sector");
        }
        for (int m = 1; m <= 2; ++m) {
            add(id(xs[m - 1], "c"), id("c", "c"), "0", "col c|c");
            for (int i = 1; i <= 2; ++i)
                add(id(xs[m - 1], "c"), id("c", ys[i - 1]), m == i ? "-1" : "0",
                    "negative delta sector (index corrected)");
            for (int j = 1; j <= 2; ++j)
                add(id(xs[m - 1], "c"), id(xs[j - 1], "c"),
                    "beta_" + std::to_string(m) + std::to_string(j), "beta sector");
            for (const auto& xk : xs)
                for (const auto& yl : ys) add(id(xs[m - 1], "c"), id(xk, yl), "0", "zero sector");
        }
        for (int nn = 1; nn <= 2; ++nn)
            for (int r = 1; r <= 2; ++r) {
                add(id(xs[nn - 1], ys[r - 1]), id("c", "c"), "0", "col c|c");
                for (const auto& yi : ys) add(id(xs[nn - 1], ys[r - 1]), id("c", yi), "0", "zero");
                for (const auto& xj : xs) add(id(xs[nn - 1], ys[r - 1]), id(xj, "c"), "0", "zero");
                for (int kk = 1; kk <= 2; ++kk)
                    for (int ll = 1; ll <= 2; ++ll) {
                        std::string lit = "alpha_" + std::to_string(r) + std::to_string(ll) +
                                          "*beta_" + std::to_string(nn) + std::to_string(kk);
                        if (r == kk && ll == nn) lit += "-1";
                        add(id(xs[nn - 1], ys[r - 1]), id(xs[kk - 1], ys[ll - 1]), lit,
                            "mixed sector");
                    }
            }
        fx.expected.emplace("sigma", std::move(table));
    }
    return fx;
}

}  // namespace

namespace {

Fixture build_fixture(const std::string& name) {
    if (name == "kZ") {
        Fixture fx;
        fx.name = name;
        Field f = Field::rational_functions({"q"});
        HopfPtr kz = make_group_algebra_kZ(f);
        fx.algebras.emplace("kZ", kz);
        fx.forms.emplace("p", kz_power_braiding(kz, "q"));
        fx.expected.emplace(
            "p", std::vector<Fixture::ExpectedEntry>{
                     {BasisId("g", {2}), BasisId("g", {3}), "q^6", "power rule"},
                     {BasisId("g", {-1}), BasisId("g", {1}), "(1)/(q)", "negative exponent"},
                     {BasisId("g", {0}), BasisId("g", {5}), "1", "unit row"},
                 });
        return fx;
    }
    if (name == "kX") {
        Fixture fx;
        fx.name = name;
        Field f = Field::rational_functions({"alpha"});
        HopfPtr kx = make_binomial_kX(f);
        fx.algebras.emplace("kX", kx);
        fx.forms.emplace("tau", kx_diagonal_braiding(kx, "alpha"));
        fx.expected.emplace(
            "tau", std::vector<Fixture::ExpectedEntry>{
                       {BasisId("X", {1}), BasisId("X", {1}), "alpha", "diagonal"},
                       {BasisId("X", {2}), BasisId("X", {3}), "0", "off diagonal"},
                       {BasisId("X", {3}), BasisId("X", {3}), "6*alpha^3", "3! alpha^3"},
                   });
        return fx;
    }
    if (name == "kZ-bowtie-kX") {
        Fixture fx;
        fx.name = name;
        Field f = Field::rational_functions({"alpha", "q"});
        HopfPtr kz = make_group_algebra_kZ(f);
        HopfPtr kx = make_binomial_kX(f);
        fx.algebras.emplace("kZ", kz);
        fx.algebras.emplace("kX", kx);
        BilinearForm lambda = kx_kz_pairing(kx, kz);
        fx.forms.emplace("p", kz_power_braiding(kz, "q"));
        fx.forms.emplace("tau", kx_diagonal_braiding(kx, "alpha"));
        fx.forms.emplace("lambda", lambda);
        // Rule-backed components: validate on the bounded window the worked
        // example uses instead of the full default product window.
        CheckOptions bounded;
        bounded.window_bound = 5;
        VerificationReport lr = check_skew_pairing(lambda, bounded);
        if (!lr.all_pass())
            fail(Error::Kind::Validation, "fixture pairing rejected:\n" + lr.to_text());
        ProductPtr dbl = build_gqd(kz, kx, lambda, /*force=*/true);
        VerificationReport dr = check_extending_structure(*dbl->datum, bounded);
        if (!dr.all_pass())
            fail(Error::Kind::Validation, "fixture datum rejected:\n" + dr.to_text());
        fx.forms.emplace("sigma-closed", kz_kx_closed_sigma(dbl, "alpha", "q"));
        fx.products.emplace("double", std::move(dbl));
        return fx;
    }
    if (name == "H4") {
        Fixture fx;
        fx.name = name;
        Field f = Field::rational_functions({"alpha"});
        HopfPtr h4 = make_sweedler_h4(f);
        fx.algebras.emplace("H4", h4);
        fx.forms.emplace("p", h4_braiding(h4, "alpha"));
        std::vector<Fixture::ExpectedEntry> table;
        const char* names[4] = {"1", "g", "x", "gx"};
        const char* lits[4][4] = {{"1", "1", "0", "0"},
                                  {"1", "-1", "0", "0"},
                                  {"0", "0", "alpha", "-alpha"},
                                  {"0", "0", "alpha", "alpha"}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                table.push_back({BasisId(names[i]), BasisId(names[j]), lits[i][j],
                                 i == 2 && j == 3 ? "sign forced by the pairing laws" : "family table"});
        fx.expected.emplace("p", std::move(table));
        return fx;
    }
    if (name == "H4-double") {
        Fixture fx;
        fx.name = name;
        Field f = Field::rational_functions({"alpha", "beta", "gamma"});
        HopfPtr h4 = make_sweedler_h4(f);
        fx.algebras.emplace("H4", h4);
        fx.forms.emplace("p", h4_braiding(h4, "alpha"));
        fx.forms.emplace("tau", h4_braiding(h4, "beta"));
        fx.forms.emplace("lambda", h4_braiding(h4, "gamma"));
        fx.products.emplace("double", build_gqd(h4, h4, fx.form("lambda")));
        return fx;
    }
    if (name.rfind("Utilde", 0) == 0) {
        int n = parse_rank(name, "Utilde");
        Fixture fx;
        fx.name = name;
        fx.algebras.emplace("Utilde", make_utilde(Field::rationals(), n));
        return fx;
    }
    if (name.rfind("Borel-double", 0) == 0) return make_borel_double_fixture(parse_rank(name, "Borel-double"));
    if (name.rfind("Borel", 0) == 0) return make_borel_fixture(parse_rank(name, "Borel"));
    if (name == "Z2-toys") {
        Fixture fx;
        fx.name = name;
        Field q = Field::rationals();
        HopfPtr kz2 = make_cyclic_group_algebra(q, 2);
        fx.algebras.emplace("kZ2", kz2);
        fx.algebras.emplace("kZ2-dual", dual(kz2));
        fx.algebras.emplace("toy3", make_left_zero_monoid_toy(Field::prime(3)));
        fx.products.emplace("D(kZ2)", coadjoint_double(kz2));

        // Z4 presented as a crossed product: base and H-part are order-two
        // group algebras with distinct generator names, trivial actions and
        // the cocycle f(h, h) = a.
        std::vector<BasisId> abasis = {BasisId("1"), BasisId("a")};
        std::vector<BasisId> hbasis = {BasisId("1"), BasisId("h")};
        auto mk2 = [&](const std::vector<BasisId>& basis, const std::string& nm) {
            std::map<std::vector<BasisId>, LinComb> mult;
            mult.emplace(std::vector<BasisId>{basis[0], basis[0]}, LinComb::basis(q, basis[0]));
            mult.emplace(std::vector<BasisId>{basis[0], basis[1]}, LinComb::basis(q, basis[1]));
            mult.emplace(std::vector<BasisId>{basis[1], basis[0]}, LinComb::basis(q, basis[1]));
            mult.emplace(std::vector<BasisId>{basis[1], basis[1]}, LinComb::basis(q, basis[0]));
            std::map<std::vector<BasisId>, LinComb> comult;
            std::map<std::vector<BasisId>, Scalar> counit;
            std::map<std::vector<BasisId>, LinComb> antipode;
            for (const auto& b : basis) {
                comult.emplace(std::vector<BasisId>{b}, LinComb::basis(q, BasisId::pair(b, b)));
                counit.emplace(std::vector<BasisId>{b}, Scalar::one(q));
                antipode.emplace(std::vector<BasisId>{b}, LinComb::basis(q, b));
            }
            return std::make_shared<HopfData>(nm, q, BasisDesc::finite(basis),
                                              LinMap::table(2, q, std::move(mult)),
                                              LinComb::basis(q, basis[0]),
                                              LinMap::table(1, q, std::move(comult)),
                                              ScalarMap::table(1, q, std::move(counit)),
                                              LinMap::table(1, q, std::move(antipode)));
        };
        HopfPtr A2 = mk2(abasis, "kZ2a");
        HopfPtr H2 = mk2(hbasis, "kZ2h");
        fx.algebras.emplace("kZ2a", A2);
        fx.algebras.emplace("kZ2h", H2);
        std::map<std::vector<BasisId>, LinComb> coc;
        coc.emplace(std::vector<BasisId>{hbasis[0], hbasis[0]}, LinComb::basis(q, abasis[0]));
        coc.emplace(std::vector<BasisId>{hbasis[0], hbasis[1]}, LinComb::basis(q, abasis[0]));
        coc.emplace(std::vector<BasisId>{hbasis[1], hbasis[0]}, LinComb::basis(q, abasis[0]));
        coc.emplace(std::vector<BasisId>{hbasis[1], hbasis[1]}, LinComb::basis(q, abasis[1]));
        fx.products.emplace("Z4-crossed",
                            build_crossed_product(A2, H2, trivial_lact(A2, H2),
                                                  LinMap::table(2, q, std::move(coc))));
        return fx;
    }
    fail(Error::Kind::Domain, "unknown fixture: " + name);
}

}  // namespace

Fixture load_fixture(const std::string& name) {
    // Fixtures are immutable once built and expensive to validate, so one
    // registry per process serves every caller.
    static std::mutex mutex;
    static std::map<std::string, Fixture> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    Fixture fx = build_fixture(name);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(name, std::move(fx)).first->second;
}

VerificationReport verify_fixture(const std::string& name, const CheckOptions& opts) {
    Fixture fx = load_fixture(name);
    VerificationReport all;
    all.subject = "fixture " + name;
    all.window_note = "fixture defaults";

    auto absorb = [&all](VerificationReport r, const std::string& prefix) {
        for (auto& item : r.items) {
            item.axiom = prefix + "/" + item.axiom;
            all.items.push_back(std::move(item));
        }
    };

    for (const auto& [key, alg] : fx.algebras) absorb(check_hopf(*alg, opts), key);
    for (const auto& [key, prod] : fx.products) absorb(check_hopf(*prod->hopf, opts), key);

    if (fx.forms.count("p") && name != "kZ-bowtie-kX")
        absorb(check_braiding(fx.form("p"), opts), "p");
    if (fx.forms.count("tau")) absorb(check_braiding(fx.form("tau"), opts), "tau");
    if (fx.forms.count("lambda")) absorb(check_skew_pairing(fx.form("lambda"), opts), "lambda");

    // Expected tables, entrywise.
    for (const auto& [form_name, entries] : fx.expected) {
        const BilinearForm* form = nullptr;
        BilinearForm sigma = [&]() -> BilinearForm {
            if (form_name == "sigma") {
                const ProductPtr& prod = fx.product();
                return canonical_gqd_sigma(fx.form("p"), fx.form("tau"), *prod->pairing, *prod);
            }
            return fx.form(form_name);
        }();
        form = &sigma;
        CheckItem item;
        item.axiom = form_name + "/expected-table";
        for (const auto& e : entries) {
            Scalar got = (*form)(e.left, e.right);
            Scalar want = Scalar::parse(form->field(), e.literal);
            if (!(got == want)) {
                item.status = CheckStatus::Fail;
                item.witness = {e.left, e.right};
                item.lhs = got.to_string();
                item.rhs = e.literal;
                break;
            }
        }
        all.items.push_back(std::move(item));
    }

    // The closed-form braiding must match the canonical double braiding on
    // the acceptance window.
    if (name == "kZ-bowtie-kX") {
        const ProductPtr& prod = fx.product();
        BilinearForm canonical =
            canonical_gqd_sigma(fx.form("p"), fx.form("tau"), *prod->pairing, *prod);
        std::vector<BasisId> window;
        for (long t = -3; t <= 3; ++t)
            for (long nn = 0; nn <= 5; ++nn)
                window.push_back(BasisId::pair(BasisId("g", {t}), BasisId("X", {nn})));
        absorb(forms_equal(fx.form("sigma-closed"), canonical, window, window, opts), "sigma");
    }

    return all;
}

}  // namespace hopf
