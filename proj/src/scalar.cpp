#include "hopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hopf {

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
    static const auto d = std::make_shared<const Desc>(Desc{FieldKind::Rational, 0, {}});
    return Field(d);
}

Field Field::prime(long p) {
    if (p < 2) fail(Error::Kind::Domain, "prime field modulus must be >= 2");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) fail(Error::Kind::Domain, "modulus " + std::to_string(p) + " is not prime");
    auto d = std::make_shared<const Desc>(Desc{FieldKind::Prime, p, {}});
    return Field(d);
}

Field Field::rational_functions(std::vector<std::string> params) {
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (const auto& p : params) {
        if (p.empty() || !(std::isalpha(static_cast<unsigned char>(p[0])) || p[0] == '_'))
            fail(Error::Kind::Domain, "bad parameter name: " + p);
        for (char c : p)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                fail(Error::Kind::Domain, "bad parameter name: " + p);
    }
    auto d = std::make_shared<const Desc>(Desc{FieldKind::RationalFunc, 0, std::move(params)});
    return Field(d);
}

std::optional<std::size_t> Field::param_index(std::string_view name) const {
    const auto& ps = d_->params;
    auto it = std::lower_bound(ps.begin(), ps.end(), name);
    if (it != ps.end() && *it == name) return static_cast<std::size_t>(it - ps.begin());
    return std::nullopt;
}

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    return d_->kind == o.d_->kind && d_->p == o.d_->p && d_->params == o.d_->params;
}

std::string Field::to_string() const {
    switch (d_->kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Prime: return "Fp:" + std::to_string(d_->p);
        case FieldKind::RationalFunc: return "Qfunc:[" + util::join(d_->params, ",") + "]";
    }
    return "?";
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        long p = std::strtol(s.c_str() + 3, nullptr, 10);
        return prime(p);
    }
    if (s.rfind("Qfunc:[", 0) == 0 && s.back() == ']') {
        std::vector<std::string> params;
        std::string body = s.substr(7, s.size() - 8);
        std::string cur;
        for (char c : body) {
            if (c == ',') {
                if (!cur.empty()) params.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) params.push_back(cur);
        return rational_functions(std::move(params));
    }
    fail(Error::Kind::Parse, "unrecognized field tag: " + s);
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > m.exp[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        r.exp[i] -= m.exp[i];
        if (r.exp[i] < 0) fail(Error::Kind::Domain, "monomial division underflow");
    }
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::zero(std::size_t nvars) {
    Poly p;
    p.nvars_ = nvars;
    return p;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    Poly p;
    p.nvars_ = nvars;
    if (c != 0) p.terms_.push_back({Monomial{std::vector<int>(nvars, 0)}, c});
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t which) {
    Poly p;
    p.nvars_ = nvars;
    Monomial m{std::vector<int>(nvars, 0)};
    m.exp[which] = 1;
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    Poly p;
    p.nvars_ = nvars;
    for (auto& t : terms) {
        if (t.second == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) fail(Error::Kind::Domain, "leading coefficient of zero polynomial");
    return terms_.front().second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) fail(Error::Kind::Domain, "leading monomial of zero polynomial");
    return terms_.front().first;
}

int Poly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exp[var]);
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].first, terms_[i].first))) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || grlex_less(terms_[i].first, o.terms_[j].first)) {
            out.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    Poly p;
    p.nvars_ = nvars_;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return zero(nvars_);
    Poly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(nvars_);
    std::map<std::vector<int>, Rat> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.first * b.first;
            acc[std::move(m.exp)] += a.second * b.second;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back({Monomial{e}, c});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    Poly p;
    p.nvars_ = nvars_;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) fail(Error::Kind::DivisionByZero, "polynomial division by zero");
    Poly rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!divisor.leading_monomial().divides(lm))
            fail(Error::Kind::Domain, "polynomial division is not exact");
        Monomial qm = lm / divisor.leading_monomial();
        Rat qc = rem.leading_coeff() / divisor.leading_coeff();
        Poly qt;
        qt.nvars_ = nvars_;
        qt.terms_.push_back({qm, qc});
        quot.push_back({std::move(qm), std::move(qc)});
        rem = rem - qt * divisor;
    }
    return from_terms(nvars_, std::move(quot));
}

namespace {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [m, c] = terms_[i];
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (i == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        std::string ms = monomial_to_string(m, names);
        if (ms.empty()) {
            s += rat_to_string(a);
        } else if (a == 1) {
            s += ms;
        } else {
            s += rat_to_string(a) + "*" + ms;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive pseudo-remainder sequence)

namespace {

int lowest_var_present(const Poly& p) {
    int best = -1;
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < t.first.exp.size(); ++v)
            if (t.first.exp[v] > 0) {
                if (best < 0 || static_cast<int>(v) < best) best = static_cast<int>(v);
                break;
            }
    return best;
}

// Coefficients of p viewed as univariate in `var`, index = degree.
std::vector<Poly> to_univariate(const Poly& p, std::size_t var) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(p.degree_in(var)) + 1, Poly::zero(p.nvars()));
    std::vector<std::vector<Poly::Term>> buckets(coeffs.size());
    for (const auto& t : p.terms()) {
        int d = t.first.exp[var];
        Monomial m = t.first;
        m.exp[var] = 0;
        buckets[static_cast<std::size_t>(d)].push_back({std::move(m), t.second});
    }
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        coeffs[d] = Poly::from_terms(p.nvars(), std::move(buckets[d]));
    return coeffs;
}

Poly from_univariate(const std::vector<Poly>& coeffs, std::size_t var, std::size_t nvars) {
    std::vector<Poly::Term> ts;
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        for (const auto& t : coeffs[d].terms()) {
            Monomial m = t.first;
            m.exp[var] += static_cast<int>(d);
            ts.push_back({std::move(m), t.second});
        }
    return Poly::from_terms(nvars, std::move(ts));
}

int uni_degree(const std::vector<Poly>& u) {
    for (std::size_t d = u.size(); d-- > 0;)
        if (!u[d].is_zero()) return static_cast<int>(d);
    return -1;
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p.leading_coeff());
}

// gcd of the univariate coefficient list (recursive multivariate gcd).
Poly content_of(const std::vector<Poly>& coeffs) {
    Poly c = Poly::zero(coeffs.empty() ? 0 : coeffs[0].nvars());
    for (const auto& q : coeffs) {
        if (q.is_zero()) continue;
        c = c.is_zero() ? make_monic(q) : poly_gcd(c, q);
        if (c.is_constant() && !c.is_zero()) return Poly::constant(c.nvars(), Rat(1));
    }
    return c;
}

// Pseudo-remainder of a by b in variable var: lc(b)^(da-db+1) * a mod b.
std::vector<Poly> pseudo_rem(std::vector<Poly> a, const std::vector<Poly>& b, std::size_t nvars) {
    int db = uni_degree(b);
    const Poly& lcb = b[static_cast<std::size_t>(db)];
    int da = uni_degree(a);
    while (da >= db && da >= 0) {
        Poly lca = a[static_cast<std::size_t>(da)];
        // a := lcb * a - lca * x^(da-db) * b
        for (auto& c : a) c = c * lcb;
        for (int i = 0; i <= db; ++i) {
            std::size_t k = static_cast<std::size_t>(da - db + i);
            a[k] = a[k] - lca * b[static_cast<std::size_t>(i)];
        }
        int nda = -1;
        for (int d = da - 1; d >= 0; --d)
            if (!a[static_cast<std::size_t>(d)].is_zero()) {
                nda = d;
                break;
            }
        a.resize(static_cast<std::size_t>(std::max(nda, 0)) + 1, Poly::zero(nvars));
        if (nda < 0) {
            a.clear();
            break;
        }
        da = nda;
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), Rat(1));

    int va = lowest_var_present(a), vb = lowest_var_present(b);
    if (va != vb) {
        // gcd lives in the variables common to both; strip the extra variable
        // through its content.
        if (va < vb) {
            Poly ca = content_of(to_univariate(a, static_cast<std::size_t>(va)));
            return poly_gcd(ca, b);
        }
        Poly cb = content_of(to_univariate(b, static_cast<std::size_t>(vb)));
        return poly_gcd(a, cb);
    }

    std::size_t var = static_cast<std::size_t>(va);
    auto ua = to_univariate(a, var);
    auto ub = to_univariate(b, var);
    Poly ca = content_of(ua);
    Poly cb = content_of(ub);
    for (auto& c : ua) c = c.divide_exact(ca);
    for (auto& c : ub) c = c.divide_exact(cb);
    if (uni_degree(ua) < uni_degree(ub)) std::swap(ua, ub);

    std::size_t nv = a.nvars();
    while (!ub.empty() && uni_degree(ub) >= 0) {
        auto r = pseudo_rem(ua, ub, nv);
        if (!r.empty()) {
            Poly cr = content_of(r);
            for (auto& c : r) c = c.divide_exact(cr);
            // Keep the top coefficient's rational lead at 1 to tame growth.
            int dr = uni_degree(r);
            Rat lead = r[static_cast<std::size_t>(dr)].leading_coeff();
            for (auto& c : r) c = c.scaled(Rat(1) / lead);
        }
        ua = std::move(ub);
        ub = std::move(r);
    }

    Poly g = from_univariate(ua, var, nv);
    Poly cg = content_of(to_univariate(g, var));
    g = g.divide_exact(cg);
    Poly cont = poly_gcd(ca, cb);
    return make_monic(g * cont);
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

long mod_pos(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) fail(Error::Kind::DivisionByZero, "no inverse mod " + std::to_string(p));
    return mod_pos(t, p);
}

long rat_mod_p(const Rat& v, long p) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    Int pp(p);
    long n = static_cast<long>(num % pp);
    long d = static_cast<long>(den % pp);
    n = mod_pos(n, p);
    d = mod_pos(d, p);
    if (d == 0) fail(Error::Kind::DivisionByZero, "denominator divisible by " + std::to_string(p));
    return (n * mod_inverse(d, p)) % p;
}

RatFunc reduce_fraction(Poly num, Poly den) {
    if (den.is_zero()) fail(Error::Kind::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) return {Poly::zero(num.nvars()), Poly::constant(num.nvars(), Rat(1))};
    Poly g = poly_gcd(num, den);
    if (!g.is_constant()) {  // gcd is monic, so a constant gcd is 1
        num = num.divide_exact(g);
        den = den.divide_exact(g);
    }
    Rat lead = den.leading_coeff();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return {std::move(num), std::move(den)};
}

}  // namespace

Scalar Scalar::zero(const Field& f) {
    Scalar s(f);
    switch (f.kind()) {
        case FieldKind::Rational: s.rat_ = 0; break;
        case FieldKind::Prime: s.res_ = 0; break;
        case FieldKind::RationalFunc:
            s.fn_ = std::make_shared<RatFunc>(
                RatFunc{Poly::zero(f.nvars()), Poly::constant(f.nvars(), Rat(1))});
            break;
    }
    return s;
}

Scalar Scalar::one(const Field& f) { return from_long(f, 1); }

Scalar Scalar::from_long(const Field& f, long v) { return from_rational(f, Rat(v)); }

Scalar Scalar::from_rational(const Field& f, const Rat& v) {
    Scalar s(f);
    switch (f.kind()) {
        case FieldKind::Rational: s.rat_ = v; break;
        case FieldKind::Prime: s.res_ = rat_mod_p(v, f.prime_modulus()); break;
        case FieldKind::RationalFunc:
            s.fn_ = std::make_shared<RatFunc>(
                RatFunc{Poly::constant(f.nvars(), v), Poly::constant(f.nvars(), Rat(1))});
            break;
    }
    return s;
}

Scalar Scalar::parameter(const Field& f, std::string_view name) {
    auto idx = f.param_index(name);
    if (!idx)
        fail(Error::Kind::Domain,
             "parameter '" + std::string(name) + "' not declared in field " + f.to_string());
    Scalar s(f);
    s.fn_ = std::make_shared<RatFunc>(
        RatFunc{Poly::variable(f.nvars(), *idx), Poly::constant(f.nvars(), Rat(1))});
    return s;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        fail(Error::Kind::FieldMismatch,
             "field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ == 0;
        case FieldKind::Prime: return res_ == 0;
        case FieldKind::RationalFunc: return fn_->num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ == 1;
        case FieldKind::Prime: return res_ == 1 % field_.prime_modulus();
        case FieldKind::RationalFunc:
            return fn_->den.is_constant() && !fn_->den.is_zero() && fn_->den.leading_coeff() == 1 &&
                   fn_->num.is_constant() && !fn_->num.is_zero() && fn_->num.leading_coeff() == 1;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar s(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: s.rat_ = rat_ + o.rat_; break;
        case FieldKind::Prime: s.res_ = (res_ + o.res_) % field_.prime_modulus(); break;
        case FieldKind::RationalFunc:
            s.fn_ = std::make_shared<RatFunc>(reduce_fraction(
                fn_->num * o.fn_->den + o.fn_->num * fn_->den, fn_->den * o.fn_->den));
            break;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: s.rat_ = -rat_; break;
        case FieldKind::Prime: s.res_ = mod_pos(-res_, field_.prime_modulus()); break;
        case FieldKind::RationalFunc: s.fn_ = std::make_shared<RatFunc>(RatFunc{-fn_->num, fn_->den}); break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar s(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: s.rat_ = rat_ * o.rat_; break;
        case FieldKind::Prime: s.res_ = (res_ * o.res_) % field_.prime_modulus(); break;
        case FieldKind::RationalFunc:
            if (is_zero() || o.is_zero()) return zero(field_);
            s.fn_ = std::make_shared<RatFunc>(
                reduce_fraction(fn_->num * o.fn_->num, fn_->den * o.fn_->den));
            break;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(Error::Kind::DivisionByZero, "inverse of zero");
    Scalar s(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: s.rat_ = Rat(1) / rat_; break;
        case FieldKind::Prime: s.res_ = mod_inverse(res_, field_.prime_modulus()); break;
        case FieldKind::RationalFunc:
            s.fn_ = std::make_shared<RatFunc>(reduce_fraction(fn_->den, fn_->num));
            break;
    }
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ == o.rat_;
        case FieldKind::Prime: return res_ == o.res_;
        case FieldKind::RationalFunc: return fn_->num == o.fn_->num && fn_->den == o.fn_->den;
    }
    return false;
}

bool Scalar::operator<(const Scalar& o) const {
    if (field_.kind() != o.field_.kind()) return field_.kind() < o.field_.kind();
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ < o.rat_;
        case FieldKind::Prime: return res_ < o.res_;
        case FieldKind::RationalFunc: return to_string() < o.to_string();
    }
    return false;
}

const Rat& Scalar::rational_value() const {
    if (field_.kind() != FieldKind::Rational) fail(Error::Kind::Domain, "not a rational scalar");
    return rat_;
}

long Scalar::residue() const {
    if (field_.kind() != FieldKind::Prime) fail(Error::Kind::Domain, "not a prime-field scalar");
    return res_;
}

const RatFunc& Scalar::func_value() const {
    if (field_.kind() != FieldKind::RationalFunc) fail(Error::Kind::Domain, "not a rational function");
    return *fn_;
}

std::string Scalar::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_to_string(rat_);
        case FieldKind::Prime: return std::to_string(res_);
        case FieldKind::RationalFunc: {
            const auto& names = field_.params();
            bool trivial_den = fn_->den.is_constant() && !fn_->den.is_zero() && fn_->den.leading_coeff() == 1;
            if (trivial_den) return fn_->num.to_string(names);
            return "(" + fn_->num.to_string(names) + ")/(" + fn_->den.to_string(names) + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Literal parser

namespace {

class LiteralParser {
public:
    LiteralParser(const Field& f, std::string_view text) : field_(f), text_(text) {}

    Scalar parse() {
        Scalar v = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail(Error::Kind::Parse, "trailing characters in scalar literal: " + std::string(text_));
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Scalar expression() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        Scalar v = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer_literal();
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(Error::Kind::Parse, "expected integer in scalar literal");
        return std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail(Error::Kind::Parse, "unexpected end of scalar literal");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expression();
            if (!eat(')')) fail(Error::Kind::Parse, "missing ')' in scalar literal");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Int n(std::string(text_.substr(start, pos_ - start)));
            return Scalar::from_rational(field_, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Scalar::parameter(field_, text_.substr(start, pos_ - start));
        }
        fail(Error::Kind::Parse, std::string("unexpected character '") + c + "' in scalar literal");
    }

    const Field& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const Field& f, std::string_view text) {
    return LiteralParser(f, text).parse();
}

Scalar Scalar::convert_to(const Field& target, const std::vector<Scalar>& param_values) const {
    switch (field_.kind()) {
        case FieldKind::Rational:
            return Scalar::from_rational(target, rat_);
        case FieldKind::Prime:
            if (target == field_) return *this;
            fail(Error::Kind::FieldMismatch, "cannot convert out of a prime field");
        case FieldKind::RationalFunc: {
            if (param_values.size() != field_.nvars())
                fail(Error::Kind::Domain, "parameter assignment count mismatch");
            auto eval_poly = [&](const Poly& p) {
                Scalar acc = Scalar::zero(target);
                for (const auto& [m, c] : p.terms()) {
                    Scalar term = Scalar::from_rational(target, c);
                    for (std::size_t v = 0; v < m.exp.size(); ++v)
                        if (m.exp[v] != 0) term = term * param_values[v].pow(m.exp[v]);
                    acc = acc + term;
                }
                return acc;
            };
            Scalar num = eval_poly(fn_->num);
            Scalar den = eval_poly(fn_->den);
            return num / den;
        }
    }
    fail(Error::Kind::Domain, "unreachable");
}

}  // namespace hopf
