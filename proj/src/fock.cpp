#include "qtorus/fock.hpp"

#include <algorithm>
#include <sstream>

namespace qtorus {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

const Monomial& Monomial::one() {
    static const Monomial m;
    return m;
}

Monomial Monomial::variable(GridIndex n, long long exp) {
    Monomial m;
    if (exp != 0) m.exps_.emplace_back(n, exp);
    m.rehash();
    return m;
}

void Monomial::rehash() {
    std::uint64_t h = 0x51ed270b0a9f1dbULL;
    for (const auto& [n, e] : exps_) {
        h ^= splitmix64(static_cast<std::uint64_t>(n.m1) * 0x100000001b3ULL +
                        static_cast<std::uint64_t>(n.m2));
        h = splitmix64(h + static_cast<std::uint64_t>(e));
    }
    hash_ = static_cast<std::size_t>(h);
}

long long Monomial::exponent_of(GridIndex n) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), n,
                               [](const auto& p, const GridIndex& k) { return p.first < k; });
    if (it != exps_.end() && it->first == n) return it->second;
    return 0;
}

long long Monomial::total_degree() const {
    long long d = 0;
    for (const auto& [n, e] : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            r.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            r.exps_.push_back(*b++);
        } else {
            long long e = a->second + b->second;
            if (e != 0) r.exps_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    r.rehash();
    return r;
}

Monomial Monomial::shifted(GridIndex n, long long delta) const {
    return times(variable(n, delta));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    for (; a != exps_.end() && b != o.exps_.end(); ++a, ++b) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (auto c = a->second <=> b->second; c != 0) return c;
    }
    if (a != exps_.end()) return std::strong_ordering::greater;
    if (b != o.exps_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << "x[" << n.m1 << "," << n.m2 << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

MVector MVector::unit(Monomial m, Scalar c) {
    MVector v;
    v.add_term(m, c);
    return v;
}

Scalar MVector::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& MVector::leading_monomial() const {
    if (terms_.empty()) throw PreconditionError("leading_monomial of the zero vector");
    return terms_.rbegin()->first;
}

void MVector::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MVector MVector::operator+(const MVector& o) const {
    MVector r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MVector MVector::operator-(const MVector& o) const {
    MVector r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MVector MVector::operator-() const {
    MVector r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MVector MVector::scaled(const Scalar& c) const {
    MVector r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

MVector MVector::mono_mul(const Monomial& m) const {
    MVector r;
    for (const auto& [k, c] : terms_) r.add_term(k.times(m), c);
    return r;
}

MVector operator*(const Scalar& c, const MVector& v) { return v.scaled(c); }

std::string MVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        if (m.is_one()) {
            os << cs;
        } else if (cs == "1") {
            os << m.str();
        } else {
            os << cs << "*" << m.str();
        }
    }
    return os.str();
}

std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::Plain: return "plain";
        case SpaceKind::Localized: return "localized";
        case SpaceKind::Twisted: return "twisted";
        case SpaceKind::QuotientView: return "quotient";
    }
    return "?";
}

ModuleSpace::ModuleSpace(SpaceKind kind, ParamEnv env, std::optional<GridIndex> m)
    : kind_(kind), env_(std::move(env)), m_(m) {
    if (kind_ != SpaceKind::Plain && !m_)
        throw PreconditionError("space " + to_string(kind_) + " requires a distinguished index m");
    if (kind_ == SpaceKind::Twisted && !env_.has_b())
        throw PreconditionError("twisted space requires parameter b");
}

ModuleSpace ModuleSpace::plain(ParamEnv env) {
    return ModuleSpace(SpaceKind::Plain, std::move(env), std::nullopt);
}

ModuleSpace ModuleSpace::localized(ParamEnv env, GridIndex m) {
    return ModuleSpace(SpaceKind::Localized, std::move(env), m);
}

ModuleSpace ModuleSpace::twisted(ParamEnv env, GridIndex m) {
    return ModuleSpace(SpaceKind::Twisted, std::move(env), m);
}

ModuleSpace ModuleSpace::quotient(ParamEnv env, GridIndex m) {
    return ModuleSpace(SpaceKind::QuotientView, std::move(env), m);
}

GridIndex ModuleSpace::distinguished() const {
    if (!m_) throw PreconditionError("plain space has no distinguished index");
    return *m_;
}

void ModuleSpace::validate(const Monomial& mono) const {
    for (const auto& [n, e] : mono.exps()) {
        if (e >= 1) continue;
        if (kind_ != SpaceKind::Plain && n == *m_) continue;
        throw SpaceValidityError("monomial " + mono.str() + " invalid in " + to_string(kind_) +
                                 " space: negative exponent at index " + n.str());
    }
}

void ModuleSpace::validate(const MVector& v) const {
    for (const auto& [m, c] : v.terms()) validate(m);
}

long long total_degree(const MVector& v) {
    if (v.is_zero()) throw PreconditionError("degree of the zero vector");
    bool first = true;
    long long d = 0;
    for (const auto& [m, c] : v.terms()) {
        long long t = m.total_degree();
        if (first || t > d) d = t;
        first = false;
    }
    return d;
}

long long xm_hat_degree(const MVector& v, GridIndex m) {
    if (v.is_zero()) throw PreconditionError("degree of the zero vector");
    long long d = total_degree(v);
    bool first = true;
    long long z = 0;
    for (const auto& [mono, c] : v.terms()) {
        long long e = mono.exponent_of(m);
        if (first || e < z) z = e;
        first = false;
    }
    return d - z;
}

std::map<long long, MVector> homogeneous_components(const MVector& v) {
    std::map<long long, MVector> out;
    for (const auto& [m, c] : v.terms()) out[m.total_degree()].add_term(m, c);
    return out;
}

MVector project_mod_M(const MVector& v, GridIndex m) {
    MVector r;
    for (const auto& [mono, c] : v.terms())
        if (mono.exponent_of(m) < 0) r.add_term(mono, c);
    return r;
}

MVector partial_derivative(const MVector& v, GridIndex n) {
    MVector r;
    for (const auto& [mono, c] : v.terms()) {
        long long e = mono.exponent_of(n);
        if (e == 0) continue;
        r.add_term(mono.shifted(n, -1), c * Scalar(e));
    }
    return r;
}

}  // namespace qtorus
