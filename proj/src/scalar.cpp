#include "qtorus/scalar.hpp"

#include <sstream>

#include "qtorus/errors.hpp"

namespace qtorus {

RatFunc::RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError();
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(1);
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
    if (den_.lex_leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::from_rational(const mpq_class& r) {
    return RatFunc(ParamPoly::constant(mpz_class(r.get_num())),
                   ParamPoly::constant(mpz_class(r.get_den())));
}

RatFunc RatFunc::symbol(int var) {
    return RatFunc(ParamPoly::symbol(var), ParamPoly::constant(1));
}

bool RatFunc::is_integer() const {
    return num_.is_constant() && den_ == ParamPoly::constant(1);
}

mpq_class RatFunc::constant_value() const {
    if (!is_constant()) throw Error("RatFunc: not a constant");
    mpq_class r(num_.constant_value(), den_.constant_value());
    r.canonicalize();
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZeroError();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering RatFunc::operator<=>(const RatFunc& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
}

mpq_class RatFunc::evaluate(const mpq_class& q, const mpq_class& mu, const mpq_class& b) const {
    mpq_class d = den_.evaluate(q, mu, b);
    if (d == 0) throw DivisionByZeroError();
    return num_.evaluate(q, mu, b) / d;
}

Scalar::Scalar(RatFunc f) : v_(std::move(f)) {}

Scalar Scalar::rational(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return Scalar(r);
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return *r == 0;
    return std::get<RatFunc>(v_).is_zero();
}

bool Scalar::is_integer() const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return r->get_den() == 1;
    return std::get<RatFunc>(v_).is_integer();
}

bool Scalar::is_rational_constant() const {
    if (std::holds_alternative<mpq_class>(v_)) return true;
    return std::get<RatFunc>(v_).is_constant();
}

mpq_class Scalar::rational_value() const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return *r;
    return std::get<RatFunc>(v_).constant_value();
}

const RatFunc Scalar::as_func() const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return RatFunc::from_rational(*r);
    return std::get<RatFunc>(v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (auto* a = std::get_if<mpq_class>(&v_))
        if (auto* b = std::get_if<mpq_class>(&o.v_)) return Scalar(mpq_class(*a + *b));
    return Scalar(as_func() + o.as_func());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (auto* a = std::get_if<mpq_class>(&v_))
        if (auto* b = std::get_if<mpq_class>(&o.v_)) return Scalar(mpq_class(*a - *b));
    return Scalar(as_func() - o.as_func());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (auto* a = std::get_if<mpq_class>(&v_))
        if (auto* b = std::get_if<mpq_class>(&o.v_)) return Scalar(mpq_class(*a * *b));
    return Scalar(as_func() * o.as_func());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZeroError();
    if (auto* a = std::get_if<mpq_class>(&v_))
        if (auto* b = std::get_if<mpq_class>(&o.v_)) return Scalar(mpq_class(*a / *b));
    return Scalar(as_func() / o.as_func());
}

Scalar Scalar::operator-() const {
    if (auto* a = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*a));
    return Scalar(-std::get<RatFunc>(v_));
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_symbolic() == o.is_symbolic()) return v_ == o.v_;
    return as_func() == o.as_func();
}

Scalar Scalar::pow(long long k) const {
    if (k == 0) return Scalar(1);
    Scalar base = *this;
    if (k < 0) {
        base = Scalar(1) / base;
        k = -k;
    }
    Scalar r(1);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Scalar Scalar::evaluate(const mpq_class& q, const mpq_class& mu, const mpq_class& b) const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return Scalar(*r);
    return Scalar(std::get<RatFunc>(v_).evaluate(q, mu, b));
}

std::string Scalar::str() const {
    if (auto* r = std::get_if<mpq_class>(&v_)) return r->get_str();
    const RatFunc& f = std::get<RatFunc>(v_);
    std::ostringstream os;
    bool composite_num = f.num().terms().size() > 1;
    bool trivial_den = f.den() == ParamPoly::constant(1);
    if (composite_num || !trivial_den)
        os << "(" << f.num().str() << ")";
    else
        os << f.num().str();
    if (!trivial_den) os << "/(" << f.den().str() << ")";
    return os.str();
}

Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

Scalar binom(const Scalar& b, long long j) {
    if (j < 0) throw PreconditionError("binom: j must be nonnegative");
    Scalar num(1);
    mpz_class fact = 1;
    for (long long t = 0; t < j; ++t) {
        num = num * (b - Scalar(t));
        fact *= static_cast<long>(t + 1);
    }
    return num / Scalar(mpq_class(fact));
}

ParamEnv::ParamEnv(Scalar q, Scalar mu, std::optional<Scalar> b)
    : q_(std::move(q)), mu_(std::move(mu)), b_(std::move(b)) {
    if (q_.is_zero()) throw PreconditionError("q must be nonzero");
}

ParamEnv ParamEnv::specialized(const mpq_class& q, const mpq_class& mu) {
    return ParamEnv(Scalar(q), Scalar(mu));
}

ParamEnv ParamEnv::specialized(const mpq_class& q, const mpq_class& mu, const mpq_class& b) {
    return ParamEnv(Scalar(q), Scalar(mu), Scalar(b));
}

ParamEnv ParamEnv::symbolic(bool with_b) {
    if (with_b) return ParamEnv(Scalar::sym_q(), Scalar::sym_mu(), Scalar::sym_b());
    return ParamEnv(Scalar::sym_q(), Scalar::sym_mu());
}

const Scalar& ParamEnv::b() const {
    if (!b_) throw PreconditionError("parameter b is not set in this environment");
    return *b_;
}

}  // namespace qtorus
