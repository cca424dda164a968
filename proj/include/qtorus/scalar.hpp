#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

#include "qtorus/poly.hpp"

namespace qtorus {

/// Reduced fraction of ParamPolys: an element of Q(q, mu, b).
/// Canonical: gcd(num, den) = 1, den's lex-leading coefficient positive,
/// zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(ParamPoly::constant(1)) {}
    RatFunc(ParamPoly num, ParamPoly den);

    static RatFunc from_rational(const mpq_class& r);
    static RatFunc symbol(int var);

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_integer() const;
    /// Only valid when is_constant().
    mpq_class constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const RatFunc& o) const;

    mpq_class evaluate(const mpq_class& q, const mpq_class& mu, const mpq_class& b) const;

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

private:
    ParamPoly num_, den_;
};

/// Exact field element: either a rational (specialized backend) or a
/// rational function in q, mu, b (symbolic backend). Mixed arithmetic
/// promotes rationals into the symbolic field.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(long n) : v_(mpq_class(n)) {}  // NOLINT: implicit by design
    explicit Scalar(mpq_class r) : v_(std::move(r)) {}
    explicit Scalar(RatFunc f);

    static Scalar rational(long num, long den);
    static Scalar sym_q() { return Scalar(RatFunc::symbol(0)); }
    static Scalar sym_mu() { return Scalar(RatFunc::symbol(1)); }
    static Scalar sym_b() { return Scalar(RatFunc::symbol(2)); }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    bool is_symbolic() const { return std::holds_alternative<RatFunc>(v_); }
    /// Integer-valued rationals count as integers (4/2 is an integer).
    bool is_integer() const;
    /// True when the value is a concrete rational (possibly a constant
    /// rational function).
    bool is_rational_constant() const;
    mpq_class rational_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;

    /// Integer power; negative k divides (throws on zero base).
    Scalar pow(long long k) const;

    /// Substitute rational parameter values; result is a rational Scalar.
    Scalar evaluate(const mpq_class& q, const mpq_class& mu, const mpq_class& b) const;

    std::string str() const;

private:
    const RatFunc as_func() const;

    std::variant<mpq_class, RatFunc> v_;
};

Scalar operator*(long c, const Scalar& s);

/// Falling-factorial binomial b(b-1)...(b-j+1)/j! for any Scalar b.
Scalar binom(const Scalar& b, long long j);

/// The parameter environment: q (nonzero), mu, and optionally b.
/// Fully concrete parameters select the rational backend; any symbolic
/// parameter switches computations into Q(q, mu, b).
class ParamEnv {
public:
    ParamEnv(Scalar q, Scalar mu, std::optional<Scalar> b = std::nullopt);

    static ParamEnv specialized(const mpq_class& q, const mpq_class& mu);
    static ParamEnv specialized(const mpq_class& q, const mpq_class& mu, const mpq_class& b);
    static ParamEnv symbolic(bool with_b);

    const Scalar& q() const { return q_; }
    const Scalar& mu() const { return mu_; }
    bool has_b() const { return b_.has_value(); }
    const Scalar& b() const;
    ParamEnv with_b(Scalar b) const { return ParamEnv(q_, mu_, std::move(b)); }
    ParamEnv without_b() const { return ParamEnv(q_, mu_); }

    Scalar q_power(long long k) const { return q_.pow(k); }

private:
    Scalar q_, mu_;
    std::optional<Scalar> b_;
};

}  // namespace qtorus
