#include "qtorus/algebra.hpp"

#include <sstream>

namespace qtorus {

std::string to_string(GenKind k) {
    switch (k) {
        case GenKind::E11: return "E11";
        case GenKind::E12: return "E12";
        case GenKind::E21: return "E21";
        case GenKind::E22: return "E22";
        case GenKind::D1: return "D1";
        case GenKind::D2: return "D2";
    }
    return "?";
}

bool is_graded(GenKind k) { return k != GenKind::D1 && k != GenKind::D2; }

std::string Generator::str() const {
    if (!is_graded(kind)) return to_string(kind);
    return to_string(kind) + "(" + std::to_string(n.m1) + "," + std::to_string(n.m2) + ")";
}

std::string Atom::str() const {
    if (inverse) return gen.str() + "^-1";
    return gen.str();
}

namespace {

// Cancel adjacent e21(m)*e21(m)^{-1} / e21(m)^{-1}*e21(m) pairs (same m).
Word reduce_word(Word w) {
    Word out;
    out.reserve(w.size());
    for (const Atom& a : w) {
        if (!out.empty() && a.gen.kind == GenKind::E21 && out.back().gen.kind == GenKind::E21 &&
            a.gen.n == out.back().gen.n && a.inverse != out.back().inverse) {
            out.pop_back();
        } else {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace

AlgElement AlgElement::identity() { return word(Word{}); }

AlgElement AlgElement::gen(Generator g, Scalar c) { return word(Word{Atom::of(g)}, std::move(c)); }

AlgElement AlgElement::word(Word w, Scalar c) {
    AlgElement u;
    u.add_word(std::move(w), c);
    return u;
}

AlgElement AlgElement::scalar(Scalar c) { return word(Word{}, std::move(c)); }

void AlgElement::add_word(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    Word r = reduce_word(std::move(w));
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        terms_.emplace(std::move(r), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    AlgElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_word(w, c);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    AlgElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_word(w, -c);
    return r;
}

AlgElement AlgElement::operator-() const {
    AlgElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    AlgElement r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_word(std::move(w), c1 * c2);
        }
    }
    return r;
}

AlgElement AlgElement::scaled(const Scalar& c) const {
    AlgElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

AlgElement operator*(const Scalar& c, const AlgElement& u) { return u.scaled(c); }

std::string AlgElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
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
        std::ostringstream ws;
        // group runs of an identical atom into powers
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            long long run = static_cast<long long>(j - i);
            if (ws.tellp() > 0) ws << "*";
            ws << w[i].gen.str();
            if (w[i].inverse)
                ws << "^-" << run;
            else if (run > 1)
                ws << "^" << run;
            i = j;
        }
        std::string wstr = ws.str();
        if (wstr.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << wstr;
        } else {
            os << cs << "*" << wstr;
        }
    }
    return os.str();
}

AlgElement bracket(const Generator& g, const Generator& h, const ParamEnv& env) {
    const bool gg = is_graded(g.kind);
    const bool hg = is_graded(h.kind);
    if (!gg && !hg) return AlgElement::zero();  // [D_i, D_j] = 0
    if (!gg) {
        // [D_i, X(n)] = n_i X(n)
        long long ni = (g.kind == GenKind::D1) ? h.n.m1 : h.n.m2;
        return AlgElement::gen(h, Scalar(ni));
    }
    if (!hg) return -bracket(h, g, env);
    // [e_ij(m), e_kl(n)] = d_jk q^{m2 n1} e_il(m+n) - d_il q^{n2 m1} e_kj(m+n)
    auto ij = [](GenKind k) -> std::pair<int, int> {
        switch (k) {
            case GenKind::E11: return {1, 1};
            case GenKind::E12: return {1, 2};
            case GenKind::E21: return {2, 1};
            default: return {2, 2};
        }
    };
    auto mk = [](int i, int j) {
        if (i == 1 && j == 1) return GenKind::E11;
        if (i == 1 && j == 2) return GenKind::E12;
        if (i == 2 && j == 1) return GenKind::E21;
        return GenKind::E22;
    };
    auto [i, j] = ij(g.kind);
    auto [k, l] = ij(h.kind);
    const GridIndex m = g.n, n = h.n;
    AlgElement r;
    if (j == k)
        r = r + AlgElement::gen(Generator{mk(i, l), m + n}, env.q_power(m.m2 * n.m1));
    if (i == l)
        r = r - AlgElement::gen(Generator{mk(k, j), m + n}, env.q_power(n.m2 * m.m1));
    return r;
}

AlgElement bracket(const AlgElement& u, const AlgElement& v, const ParamEnv& env) {
    AlgElement r;
    for (const auto& [wu, cu] : u.terms()) {
        if (wu.size() != 1 || wu[0].inverse)
            throw PreconditionError("bracket: operands must be combinations of single generators");
        for (const auto& [wv, cv] : v.terms()) {
            if (wv.size() != 1 || wv[0].inverse)
                throw PreconditionError(
                    "bracket: operands must be combinations of single generators");
            r = r + bracket(wu[0].gen, wv[0].gen, env).scaled(cu * cv);
        }
    }
    return r;
}

AlgElement ad_e21(GridIndex m, const AlgElement& u, const ParamEnv& env) {
    const Generator e = Generator::e21(m);
    AlgElement r;
    for (const auto& [w, c] : u.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Atom& a = w[i];
            if (a.inverse) {
                if (a.gen.n != m)
                    throw InverseMismatchError("ad_e21 at " + m.str() +
                                               " met inverse at " + a.gen.n.str());
                continue;  // [e21(m), e21(m)^{-1}] = 0
            }
            AlgElement br = bracket(e, a.gen, env);
            for (const auto& [bw, bc] : br.terms()) {
                Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                nw.insert(nw.end(), bw.begin(), bw.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                r.add_word(std::move(nw), c * bc);
            }
        }
    }
    return r;
}

AlgElement twist_series(const AlgElement& u, const Scalar& b, GridIndex m, const ParamEnv& env) {
    AlgElement total;
    std::size_t max_len = 1;
    for (const auto& [w, c] : u.terms()) max_len = std::max(max_len, w.size());
    const std::size_t bound = 3 * max_len + 1;
    AlgElement cur = u;  // (ad e21(m))^j (u)
    AlgElement inv_pow = AlgElement::identity();
    for (std::size_t j = 0; ; ++j) {
        if (cur.is_zero()) break;
        if (j > bound)
            throw NilpotencyBoundError("twist series did not terminate within 3*len+1 steps");
        total = total + binom(b, static_cast<long long>(j)) * (cur * inv_pow);
        cur = ad_e21(m, cur, env);
        inv_pow = inv_pow * AlgElement::word(Word{Atom::inv_e21(m)});
    }
    return total;
}

AlgElement twist_closed(const Generator& g, const Scalar& b, GridIndex m, const ParamEnv& env) {
    const AlgElement inv = AlgElement::word(Word{Atom::inv_e21(m)});
    const GridIndex n = g.n;
    switch (g.kind) {
        case GenKind::E21:
            return AlgElement::gen(g);
        case GenKind::E11:
            return AlgElement::gen(g) +
                   (b * env.q_power(m.m2 * n.m1)) *
                       (AlgElement::gen(Generator::e21(m + n)) * inv);
        case GenKind::E22:
            return AlgElement::gen(g) -
                   (b * env.q_power(m.m1 * n.m2)) *
                       (AlgElement::gen(Generator::e21(m + n)) * inv);
        case GenKind::E12: {
            AlgElement mid =
                (env.q_power(m.m2 * n.m1) * AlgElement::gen(Generator::e22(m + n)) -
                 env.q_power(m.m1 * n.m2) * AlgElement::gen(Generator::e11(m + n))) *
                inv;
            AlgElement tail = AlgElement::gen(Generator::e21(GridIndex{2 * m.m1 + n.m1,
                                                                       2 * m.m2 + n.m2})) *
                              inv * inv;
            return AlgElement::gen(g) + b * mid -
                   (b * (b - Scalar(1)) *
                    env.q_power(m.m2 * n.m1 + m.m2 * m.m1 + m.m1 * n.m2)) *
                       tail;
        }
        case GenKind::D1:
            return AlgElement::gen(g) - AlgElement::scalar(b * Scalar(m.m1));
        case GenKind::D2:
            return AlgElement::gen(g) - AlgElement::scalar(b * Scalar(m.m2));
    }
    return AlgElement::zero();
}

}  // namespace qtorus
