#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

/// Exponents of the three parameter symbols q, mu, b. Always nonnegative;
/// negative powers live in the fraction layer (RatFunc).
struct ParamExp {
    int q = 0;
    int mu = 0;
    int b = 0;

    auto operator<=>(const ParamExp&) const = default;
    bool is_unit() const { return q == 0 && mu == 0 && b == 0; }
};

/// Sparse polynomial in Z[q, mu, b], the coefficient workhorse of the
/// symbolic scalar backend. Canonical: no zero coefficients stored.
class ParamPoly {
public:
    using TermMap = std::map<ParamExp, mpz_class>;

    ParamPoly() = default;

    static ParamPoly constant(mpz_class c);
    static ParamPoly constant(long c) { return constant(mpz_class(c)); }
    /// var: 0 = q, 1 = mu, 2 = b; power must be >= 0.
    static ParamPoly symbol(int var, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    const mpz_class& constant_value() const;

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator-() const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    std::strong_ordering operator<=>(const ParamPoly& o) const;

    /// Highest symbol index occurring with positive exponent, or -1.
    int max_var() const;
    int degree_in(int var) const;

    /// Leading coefficient in the lex term order (zero poly -> 0).
    const mpz_class& lex_leading_coeff() const;

    /// Exact division; throws Error if o does not divide *this.
    ParamPoly divide_exact(const ParamPoly& o) const;

    /// Polynomial gcd over Z[q,mu,b], integer content included, normalized
    /// so the lex-leading coefficient is positive. gcd(0,0) = 0.
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    ParamPoly pow(unsigned k) const;

    mpq_class evaluate(const mpq_class& qv, const mpq_class& muv, const mpq_class& bv) const;

    /// Deterministic rendering, lex-descending terms: "2*q^2*mu - 1".
    std::string str() const;

    const TermMap& terms() const { return terms_; }

private:
    void add_term(const ParamExp& e, const mpz_class& c);

    TermMap terms_;
};

}  // namespace qtorus
