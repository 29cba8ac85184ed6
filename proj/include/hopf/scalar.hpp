#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/util.hpp"

namespace hopf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Prime, RationalFunc };

// Coefficient field descriptor: Q, F_p, or Q(params...) with a fixed, sorted
// parameter list. Scalars carry a shared handle; mixing tags is an error.
class Field {
public:
    static Field rationals();
    static Field prime(long p);
    static Field rational_functions(std::vector<std::string> params);

    FieldKind kind() const { return d_->kind; }
    long prime_modulus() const { return d_->p; }
    const std::vector<std::string>& params() const { return d_->params; }
    std::size_t nvars() const { return d_->params.size(); }
    std::optional<std::size_t> param_index(std::string_view name) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // "Q" | "Fp:7" | "Qfunc:[alpha,q]"
    std::string to_string() const;
    static Field parse(const std::string& s);

private:
    struct Desc {
        FieldKind kind;
        long p = 0;
        std::vector<std::string> params;
    };
    explicit Field(std::shared_ptr<const Desc> d) : d_(std::move(d)) {}
    std::shared_ptr<const Desc> d_;
};

// Exponent vector aligned with the field's sorted parameter list.
struct Monomial {
    std::vector<int> exp;

    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool is_one() const {
        for (int e : exp)
            if (e) return false;
        return true;
    }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial operator/(const Monomial& m) const;  // requires divisibility
    bool operator==(const Monomial& m) const { return exp == m.exp; }
};

// Graded lexicographic order; ties broken lexicographically on exponents.
bool grlex_less(const Monomial& a, const Monomial& b);

// Multivariate polynomial over Q with terms sorted grlex-descending and no
// zero coefficients.
class Poly {
public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    static Poly zero(std::size_t nvars);
    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly variable(std::size_t nvars, std::size_t which);
    static Poly from_terms(std::size_t nvars, std::vector<Term> terms);  // normalizes

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    const Rat& leading_coeff() const;  // grlex-leading; poly must be nonzero
    const Monomial& leading_monomial() const;
    int degree_in(std::size_t var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Exact division; throws Error::Kind::Domain when not divisible.
    Poly divide_exact(const Poly& divisor) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

// gcd over Q[x1..xn], normalized monic in grlex-leading coefficient.
Poly poly_gcd(const Poly& a, const Poly& b);

// Reduced fraction of polynomials; denominator monic under grlex.
struct RatFunc {
    Poly num;
    Poly den;
};

// Element of one of the supported exact fields, always in canonical form.
class Scalar {
public:
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_long(const Field& f, long v);
    static Scalar from_rational(const Field& f, const Rat& v);  // Fp: reduces, rejects p | den
    static Scalar parameter(const Field& f, std::string_view name);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar pow(long e) const;  // negative exponents via inverse

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order for deterministic containers/reports (not a field order).
    bool operator<(const Scalar& o) const;

    // Rational payload access (Rational kind), residue (Prime kind).
    const Rat& rational_value() const;
    long residue() const;
    const RatFunc& func_value() const;

    // Canonical literal; parseable by Scalar::parse.
    std::string to_string() const;

    // Literal grammar: signed rationals `-3/4`, parameters `q`, `a_11`,
    // products/powers `2*q^3`, sums `q^2+1`, quotients `(q+1)/(q-1)`.
    static Scalar parse(const Field& f, std::string_view text);

    // Map this scalar into another field: Q -> Fp (rejecting p | den),
    // Qfunc -> any field via parameter assignments.
    Scalar convert_to(const Field& target,
                      const std::vector<Scalar>& param_values = {}) const;

private:
    Scalar(Field f) : field_(std::move(f)) {}
    void require_same_field(const Scalar& o) const;

    Field field_;
    Rat rat_;                             // Rational kind
    long res_ = 0;                        // Prime kind, in [0, p)
    std::shared_ptr<const RatFunc> fn_;   // RationalFunc kind
};

}  // namespace hopf
