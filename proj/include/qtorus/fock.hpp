#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/errors.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// A point of Z^2 indexing the variable x_m and the graded generators X(m).
struct GridIndex {
    long long m1 = 0;
    long long m2 = 0;

    auto operator<=>(const GridIndex&) const = default;
    GridIndex operator+(const GridIndex& o) const { return {m1 + o.m1, m2 + o.m2}; }
    GridIndex operator-() const { return {-m1, -m2}; }
    bool is_zero() const { return m1 == 0 && m2 == 0; }
    std::string str() const { return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")"; }
};

/// Laurent monomial in the variables {x_n : n in Z^2}. Immutable; no zero
/// exponents stored; the empty map is the monomial 1. The hash is cached so
/// vectors can treat monomials as cheap keys.
class Monomial {
public:
    using Exps = std::vector<std::pair<GridIndex, long long>>;  // sorted by index

    Monomial() { rehash(); }
    static const Monomial& one();
    static Monomial variable(GridIndex n, long long exp = 1);

    bool is_one() const { return exps_.empty(); }
    long long exponent_of(GridIndex n) const;
    long long total_degree() const;
    const Exps& exps() const { return exps_; }
    std::size_t hash() const { return hash_; }

    /// Exponent-wise sum with another monomial.
    Monomial times(const Monomial& o) const;
    /// This monomial with `delta` added to the exponent at n.
    Monomial shifted(GridIndex n, long long delta) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    std::strong_ordering operator<=>(const Monomial& o) const;

    /// "x[1,0]^2*x[0,-1]"; the unit monomial renders as "1".
    std::string str() const;

private:
    void rehash();

    Exps exps_;
    std::size_t hash_ = 0;
};

/// Finite formal sum of monomials with Scalar coefficients. Canonical:
/// no zero coefficients; structural equality.
class MVector {
public:
    using Terms = std::map<Monomial, Scalar>;

    MVector() = default;
    static MVector zero() { return {}; }
    static MVector unit(Monomial m, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;  // max in monomial order

    void add_term(const Monomial& m, const Scalar& c);

    MVector operator+(const MVector& o) const;
    MVector operator-(const MVector& o) const;
    MVector operator-() const;
    bool operator==(const MVector& o) const { return terms_ == o.terms_; }

    MVector scaled(const Scalar& c) const;
    MVector mono_mul(const Monomial& m) const;

    std::string str() const;

private:
    Terms terms_;
};

MVector operator*(const Scalar& c, const MVector& v);

enum class SpaceKind { Plain, Localized, Twisted, QuotientView };

std::string to_string(SpaceKind k);

/// Selects the representation the operators act on: the polynomial module,
/// its localization at x_m, the twisted localization, or the quotient of the
/// localization by the polynomial part.
class ModuleSpace {
public:
    static ModuleSpace plain(ParamEnv env);
    static ModuleSpace localized(ParamEnv env, GridIndex m);
    static ModuleSpace twisted(ParamEnv env, GridIndex m);  // env must carry b
    static ModuleSpace quotient(ParamEnv env, GridIndex m);

    SpaceKind kind() const { return kind_; }
    const ParamEnv& env() const { return env_; }
    bool has_distinguished() const { return m_.has_value(); }
    GridIndex distinguished() const;

    /// Throws SpaceValidityError naming the offending index.
    void validate(const Monomial& m) const;
    void validate(const MVector& v) const;

private:
    ModuleSpace(SpaceKind kind, ParamEnv env, std::optional<GridIndex> m);

    SpaceKind kind_;
    ParamEnv env_;
    std::optional<GridIndex> m_;
};

/// Max over monomials of the signed exponent sum. Throws on the zero vector.
long long total_degree(const MVector& v);

/// d - z for a homogeneous element of degree d whose minimal x_m-exponent
/// is z (the hatted-degree used by the twisted reduction).
long long xm_hat_degree(const MVector& v, GridIndex m);

/// Split by total degree; keys are the degrees.
std::map<long long, MVector> homogeneous_components(const MVector& v);

/// Canonical coset representative modulo the polynomial submodule: drops
/// every monomial whose x_m-exponent is >= 0.
MVector project_mod_M(const MVector& v, GridIndex m);

/// Formal partial derivative with respect to x_n (Laurent exponents allowed).
MVector partial_derivative(const MVector& v, GridIndex n);

}  // namespace qtorus
