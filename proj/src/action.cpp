#include "qtorus/action.hpp"

namespace qtorus {

namespace {

// e21(n): multiplication by x_n.
// e11(n): mu d_{n,0} - sum_s q^{s2 n1} x_{n+s} d/dx_s
// e22(n): sum_s q^{s1 n2} x_{n+s} d/dx_s
// e12(n): q^{-n1 n2} mu d/dx_{-n}
//         - sum_{s,r} q^{n2 r1 + s2 n1 + s2 r1} x_{n+s+r} d/dx_s d/dx_r
// D1/D2 : eigen-action by the index sums.
// On a monomial every sum collapses to the support; Laurent exponents at
// the distinguished index derive formally.
MVector act_monomial(const Generator& g, const Monomial& mono, const ParamEnv& env) {
    MVector out;
    const GridIndex n = g.n;
    switch (g.kind) {
        case GenKind::E21:
            out.add_term(mono.shifted(n, 1), Scalar(1));
            break;
        case GenKind::E11: {
            if (n.is_zero()) out.add_term(mono, env.mu());
            for (const auto& [s, ks] : mono.exps()) {
                Scalar c = -Scalar(ks) * env.q_power(s.m2 * n.m1);
                out.add_term(mono.shifted(s, -1).shifted(n + s, 1), c);
            }
            break;
        }
        case GenKind::E22: {
            for (const auto& [s, ks] : mono.exps()) {
                Scalar c = Scalar(ks) * env.q_power(s.m1 * n.m2);
                out.add_term(mono.shifted(s, -1).shifted(n + s, 1), c);
            }
            break;
        }
        case GenKind::E12: {
            long long e = mono.exponent_of(-n);
            if (e != 0) {
                Scalar c = env.q_power(-n.m1 * n.m2) * env.mu() * Scalar(e);
                out.add_term(mono.shifted(-n, -1), c);
            }
            for (const auto& [s, ks] : mono.exps()) {
                for (const auto& [r, kr] : mono.exps()) {
                    long long factor = (s == r) ? ks * (ks - 1) : ks * kr;
                    if (factor == 0) continue;
                    Scalar c = -Scalar(factor) *
                               env.q_power(n.m2 * r.m1 + s.m2 * n.m1 + s.m2 * r.m1);
                    out.add_term(mono.shifted(s, -1).shifted(r, -1).shifted(n + s + r, 1), c);
                }
            }
            break;
        }
        case GenKind::D1:
        case GenKind::D2: {
            long long acc = 0;
            for (const auto& [s, ks] : mono.exps())
                acc += ks * (g.kind == GenKind::D1 ? s.m1 : s.m2);
            out.add_term(mono, Scalar(acc));
            break;
        }
    }
    return out;
}

MVector act_gen_local(const Generator& g, const MVector& v, const ParamEnv& env) {
    MVector out;
    for (const auto& [m, c] : v.terms()) out = out + act_monomial(g, m, env).scaled(c);
    return out;
}

MVector mul_inv_xm(const ModuleSpace& space, GridIndex m, const MVector& v) {
    if (space.kind() == SpaceKind::Plain)
        throw InverseMismatchError("inverse generator is not defined on the plain module");
    if (space.kind() == SpaceKind::QuotientView)
        throw InverseMismatchError("inverse generator is not defined on the quotient view");
    if (space.distinguished() != m)
        throw InverseMismatchError("inverse at " + m.str() + " in a space localized at " +
                                   space.distinguished().str());
    return v.mono_mul(Monomial::variable(m, -1));
}

}  // namespace

MVector act_generator(const ModuleSpace& space, const Generator& g, const MVector& v) {
    space.validate(v);
    switch (space.kind()) {
        case SpaceKind::Plain:
        case SpaceKind::Localized:
            return act_gen_local(g, v, space.env());
        case SpaceKind::QuotientView: {
            GridIndex m = space.distinguished();
            MVector rep = project_mod_M(v, m);
            return project_mod_M(act_gen_local(g, rep, space.env()), m);
        }
        case SpaceKind::Twisted: {
            const GridIndex m = space.distinguished();
            const AlgElement tw = twist_closed(g, space.env().b(), m, space.env());
            MVector out;
            for (const auto& [w, c] : tw.terms()) {
                MVector cur = v;
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    if (it->inverse)
                        cur = cur.mono_mul(Monomial::variable(m, -1));
                    else
                        cur = act_gen_local(it->gen, cur, space.env());
                }
                out = out + cur.scaled(c);
            }
            return out;
        }
    }
    return MVector::zero();
}

MVector act_element(const ModuleSpace& space, const AlgElement& u, const MVector& v) {
    space.validate(v);
    MVector out;
    for (const auto& [w, c] : u.terms()) {
        MVector cur = v;
        for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
            if (it->inverse)
                cur = mul_inv_xm(space, it->gen.n, cur);
            else
                cur = act_generator(space, it->gen, cur);
        }
        out = out + cur.scaled(c);
    }
    if (space.kind() == SpaceKind::QuotientView)
        out = project_mod_M(out, space.distinguished());
    return out;
}

MVector apply_lowering(GridIndex m, const MVector& v, const ParamEnv& env) {
    MVector out;
    for (const auto& [mono, coef] : v.terms()) {
        for (const auto& [s, ks] : mono.exps()) {
            for (const auto& [r, kr] : mono.exps()) {
                long long factor = (s == r) ? ks * (ks - 1) : ks * kr;
                if (factor == 0) continue;
                Scalar c = Scalar(factor) *
                           env.q_power(-m.m2 * r.m1 - s.m2 * m.m1 + s.m2 * r.m1);
                out.add_term(mono.shifted(s, -1).shifted(r, -1).shifted(-m + s + r, 1),
                             coef * c);
            }
        }
    }
    return out;
}

std::string WeightValue::str() const {
    return "(e11=" + e11.str() + ", e22=" + e22.str() + ", d1=" + d1.str() +
           ", d2=" + d2.str() + ")";
}

WeightValue weight_of(const ModuleSpace& space, const MVector& v) {
    if (v.is_zero()) throw PreconditionError("weight_of: zero vector");
    const Generator cartan[4] = {Generator::e11({0, 0}), Generator::e22({0, 0}),
                                 Generator::d1(), Generator::d2()};
    Scalar vals[4];
    for (int i = 0; i < 4; ++i) {
        MVector w = act_generator(space, cartan[i], v);
        Scalar c(0);
        if (!w.is_zero()) {
            const Monomial& lead = v.leading_monomial();
            Scalar top = w.coeff(lead);
            if (top.is_zero())
                throw NotWeightVectorError("not a weight vector: fails for " + cartan[i].str());
            c = top / v.coeff(lead);
        }
        if (!(w == v.scaled(c)))
            throw NotWeightVectorError("not a weight vector: fails for " + cartan[i].str());
        vals[i] = c;
    }
    return WeightValue{vals[0], vals[1], vals[2], vals[3]};
}

}  // namespace qtorus
