#include "qtorus/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qtorus {

namespace {

const mpz_class kZero = 0;

mpq_class mpq_pow_nonneg(const mpq_class& x, unsigned k) {
    mpq_class r = 1;
    mpq_class base = x;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

int exp_of(const ParamExp& e, int var) {
    switch (var) {
        case 0: return e.q;
        case 1: return e.mu;
        case 2: return e.b;
        default: return 0;
    }
}

ParamExp with_exp(ParamExp e, int var, int value) {
    switch (var) {
        case 0: e.q = value; break;
        case 1: e.mu = value; break;
        case 2: e.b = value; break;
    }
    return e;
}

}  // namespace

void ParamPoly::add_term(const ParamExp& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::constant(mpz_class c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace(ParamExp{}, std::move(c));
    return p;
}

ParamPoly ParamPoly::symbol(int var, int power) {
    if (power < 0) throw Error("ParamPoly::symbol: negative power");
    if (power == 0) return constant(1);
    ParamPoly p;
    p.terms_.emplace(with_exp(ParamExp{}, var, power), mpz_class(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

const mpz_class& ParamPoly::constant_value() const {
    if (terms_.empty()) return kZero;
    if (!is_constant()) throw Error("ParamPoly: not a constant");
    return terms_.begin()->second;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ParamExp e{e1.q + e2.q, e1.mu + e2.mu, e1.b + e2.b};
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

std::strong_ordering ParamPoly::operator<=>(const ParamPoly& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (int c = cmp(it->second, jt->second); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (it != terms_.end()) return std::strong_ordering::greater;
    if (jt != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

int ParamPoly::max_var() const {
    int v = -1;
    for (const auto& [e, c] : terms_) {
        if (e.b > 0) v = std::max(v, 2);
        else if (e.mu > 0) v = std::max(v, 1);
        else if (e.q > 0) v = std::max(v, 0);
    }
    return v;
}

int ParamPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_of(e, var));
    return d;
}

const mpz_class& ParamPoly::lex_leading_coeff() const {
    if (terms_.empty()) return kZero;
    return terms_.rbegin()->second;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& o) const {
    if (o.is_zero()) throw Error("ParamPoly: division by zero polynomial");
    ParamPoly rem = *this;
    ParamPoly quot;
    const auto& [le, lc] = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        ParamExp te{re.q - le.q, re.mu - le.mu, re.b - le.b};
        if (te.q < 0 || te.mu < 0 || te.b < 0 || rc % lc != 0)
            throw Error("ParamPoly: inexact division");
        mpz_class tc = rc / lc;
        ParamPoly t;
        t.terms_.emplace(te, tc);
        quot = quot + t;
        rem = rem - t * o;
    }
    return quot;
}

namespace {

// Univariate view in var: exponent -> coefficient free of var.
std::map<int, ParamPoly> univariate(const ParamPoly& p, int var) {
    std::map<int, ParamPoly> out;
    for (const auto& [e, c] : p.terms()) {
        int d = exp_of(e, var);
        ParamPoly t;
        ParamExp rest = with_exp(e, var, 0);
        t = t + ParamPoly::constant(c) *
                    ParamPoly::symbol(0, rest.q) * ParamPoly::symbol(1, rest.mu) *
                    ParamPoly::symbol(2, rest.b);
        out[d] = out[d] + t;
    }
    return out;
}

ParamPoly var_power(int var, int k) { return ParamPoly::symbol(var, k); }

ParamPoly content_in(const ParamPoly& p, int var) {
    ParamPoly c;
    for (const auto& [d, coef] : univariate(p, var)) c = ParamPoly::gcd(c, coef);
    return c;
}

ParamPoly primitive_part_in(const ParamPoly& p, int var) {
    if (p.is_zero()) return p;
    return p.divide_exact(content_in(p, var));
}

// Pseudo-remainder of f by g in var (deg_v g >= 1); result content is
// irrelevant to the caller, which takes primitive parts.
ParamPoly pseudo_rem(ParamPoly f, const ParamPoly& g, int var) {
    auto gu = univariate(g, var);
    const int dg = gu.rbegin()->first;
    const ParamPoly lg = gu.rbegin()->second;
    while (!f.is_zero()) {
        auto fu = univariate(f, var);
        const int df = fu.rbegin()->first;
        if (df < dg) break;
        const ParamPoly lf = fu.rbegin()->second;
        f = f * lg - g * lf * var_power(var, df - dg);
    }
    return f;
}

ParamPoly normalize_sign(ParamPoly p) {
    if (p.lex_leading_coeff() < 0) return -p;
    return p;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.is_constant() && b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return constant(g);
    }
    const int var = std::max(a.max_var(), b.max_var());
    const ParamPoly ca = content_in(a, var);
    const ParamPoly cb = content_in(b, var);
    const ParamPoly c = gcd(ca, cb);
    ParamPoly f = a.divide_exact(ca);
    ParamPoly g = b.divide_exact(cb);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    ParamPoly h;
    while (true) {
        if (g.degree_in(var) == 0) {
            // primitive and var-free => a unit
            h = constant(1);
            break;
        }
        ParamPoly r = pseudo_rem(f, g, var);
        if (r.is_zero()) {
            h = primitive_part_in(g, var);
            break;
        }
        if (r.degree_in(var) == 0) {
            h = constant(1);
            break;
        }
        f = g;
        g = primitive_part_in(r, var);
    }
    return normalize_sign(c * h);
}

ParamPoly ParamPoly::pow(unsigned k) const {
    ParamPoly r = constant(1);
    ParamPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

mpq_class ParamPoly::evaluate(const mpq_class& qv, const mpq_class& muv,
                              const mpq_class& bv) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t(c);
        t *= mpq_pow_nonneg(qv, static_cast<unsigned>(e.q));
        t *= mpq_pow_nonneg(muv, static_cast<unsigned>(e.mu));
        t *= mpq_pow_nonneg(bv, static_cast<unsigned>(e.b));
        acc += t;
    }
    return acc;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // lex-descending for a stable, human-friendly leading term
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = e.is_unit();
        if (mag != 1 || unit) {
            os << mag.get_str();
            if (!unit) os << "*";
        }
        bool star = false;
        auto emit = [&](const char* name, int k) {
            if (k == 0) return;
            if (star) os << "*";
            os << name;
            if (k != 1) os << "^" << k;
            star = true;
        };
        emit("q", e.q);
        emit("mu", e.mu);
        emit("b", e.b);
    }
    return os.str();
}

}  // namespace qtorus
