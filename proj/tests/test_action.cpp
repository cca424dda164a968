#include <doctest.h>

#include "qtorus/action.hpp"
#include "qtorus/rng.hpp"

using namespace qtorus;

namespace {

MVector xv(GridIndex n, long long e = 1) { return MVector::unit(Monomial::variable(n, e)); }
const MVector kOne = MVector::unit(Monomial::one());

ModuleSpace space_of(SpaceKind kind, const ParamEnv& env, GridIndex m) {
    switch (kind) {
        case SpaceKind::Plain: return ModuleSpace::plain(env);
        case SpaceKind::Localized: return ModuleSpace::localized(env, m);
        case SpaceKind::Twisted: return ModuleSpace::twisted(env, m);
        default: return ModuleSpace::quotient(env, m);
    }
}

}  // namespace

TEST_CASE("highest weight vector") {
    ParamEnv env = ParamEnv::symbolic(false);
    ModuleSpace plain = ModuleSpace::plain(env);
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            CHECK(act_generator(plain, Generator::e12({a, b}), kOne).is_zero());
    CHECK(act_generator(plain, Generator::e11({0, 0}), kOne) == kOne.scaled(env.mu()));
    CHECK(act_generator(plain, Generator::e22({0, 0}), kOne).is_zero());
    CHECK(act_generator(plain, Generator::d1(), kOne).is_zero());
    CHECK(act_generator(plain, Generator::d2(), kOne).is_zero());
}

TEST_CASE("single-term shift actions") {
    ParamEnv env = ParamEnv::symbolic(false);
    ModuleSpace plain = ModuleSpace::plain(env);
    // e22(n) x_s = q^{s1 n2} x_{n+s}, n=(0,1), s=(1,0)
    CHECK(act_generator(plain, Generator::e22({0, 1}), xv({1, 0})) ==
          xv({1, 1}).scaled(Scalar::sym_q()));
    // e12(0) x_{(1,0)}^2 = -2 x_{(2,0)}
    CHECK(act_generator(plain, Generator::e12({0, 0}), xv({1, 0}, 2)) ==
          xv({2, 0}).scaled(Scalar(-2)));
    // e21(n) multiplies
    CHECK(act_generator(plain, Generator::e21({2, 2}), xv({1, 0})) ==
          MVector::unit(Monomial::variable({2, 2}).times(Monomial::variable({1, 0}))));
}

TEST_CASE("localized single step") {
    // e12(-m) x_m^{-1} = -(mu+2) q^{-m1 m2} x_m^{-2}
    ParamEnv env = ParamEnv::symbolic(false);
    GridIndex m{1, 1};
    ModuleSpace loc = ModuleSpace::localized(env, m);
    MVector got = act_generator(loc, Generator::e12(-m), xv(m, -1));
    MVector expected =
        xv(m, -2).scaled(-(env.mu() + Scalar(2)) * env.q_power(-1));
    CHECK(got == expected);
}

TEST_CASE("twisted single step") {
    // e12(-m) x_m^j = -(j-b)(j-b-1-mu) q^{-m1 m2} x_m^{j-1}
    ParamEnv env = ParamEnv::symbolic(true);
    GridIndex m{1, 1};
    ModuleSpace tw = ModuleSpace::twisted(env, m);
    const Scalar b = env.b();
    const Scalar mu = env.mu();
    for (long long j : {-2LL, 0LL, 1LL, 3LL}) {
        MVector v = j == 0 ? kOne : xv(m, j);
        MVector got = act_generator(tw, Generator::e12(-m), v);
        Scalar c = -(Scalar(j) - b) * (Scalar(j) - b - Scalar(1) - mu) * env.q_power(-1);
        MVector expected = (j == 1 ? kOne : xv(m, j - 1)).scaled(c);
        CHECK(got == expected);
    }
}

TEST_CASE("lowering operator") {
    ParamEnv env = ParamEnv::symbolic(false);
    GridIndex m{1, 0};
    // L_m x_{(0,1)}^2 = 2 q^{-1} x_{(-1,2)}
    CHECK(apply_lowering(m, xv({0, 1}, 2), env) ==
          xv({-1, 2}).scaled(Scalar(2) * env.q_power(-1)));
    CHECK(apply_lowering(m, kOne, env).is_zero());

    // degree-d polynomial dies after d+1 applications
    Rng rng(31);
    ParamEnv envr = ParamEnv::specialized(mpq_class(3, 2), mpq_class(1, 3));
    for (int t = 0; t < 30; ++t) {
        MVector v = rng.vector(2, 3, 3, 2);
        long long d = total_degree(v);
        MVector w = v;
        for (long long i = 0; i <= d; ++i) w = apply_lowering(m, w, envr);
        CHECK(w.is_zero());
    }
}

TEST_CASE("operator split of e12(-m)") {
    Rng rng(37);
    GridIndex m{2, 1};
    for (int t = 0; t < 50; ++t) {
        ParamEnv env = ParamEnv::specialized(rng.rational_nonzero(), rng.rational());
        ModuleSpace loc = ModuleSpace::localized(env, m);
        MVector v = rng.vector_in(loc, 2, 3, 2, 2);
        MVector lhs = act_generator(loc, Generator::e12(-m), v);
        MVector rhs = partial_derivative(v, m).scaled(env.q_power(-2) * env.mu()) -
                      apply_lowering(m, v, env);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("act_element folds words") {
    ParamEnv env = ParamEnv::symbolic(false);
    GridIndex m{1, 0};
    ModuleSpace loc = ModuleSpace::localized(env, m);
    MVector v = xv(m, -1);
    CHECK(act_element(loc, AlgElement::identity(), v) == v);
    AlgElement pair = AlgElement::gen(Generator::e21(m)) *
                      AlgElement::word(Word{Atom::inv_e21(m)});
    CHECK(act_element(loc, pair, v) == v);
    // e12(-m) e21(m) on x_m^{-1} = e12(-m) on 1 = 0
    AlgElement comp = AlgElement::gen(Generator::e12(-m)) *
                      AlgElement::gen(Generator::e21(m));
    CHECK(act_element(loc, comp, v).is_zero());
    CHECK(act_element(loc, comp, v) ==
          act_generator(loc, Generator::e12(-m), act_generator(loc, Generator::e21(m), v)));
}

TEST_CASE("act_element is compatible with the word product") {
    Rng rng(59);
    for (int t = 0; t < 40; ++t) {
        GridIndex m = rng.index(2);
        bool twisted = t % 2 == 0;
        ParamEnv env = twisted ? ParamEnv::specialized(rng.rational_nonzero(), rng.rational(),
                                                       rng.rational())
                               : ParamEnv::specialized(rng.rational_nonzero(), rng.rational());
        ModuleSpace space =
            twisted ? ModuleSpace::twisted(env, m) : ModuleSpace::quotient(env, m);
        AlgElement u = AlgElement::gen(rng.generator(2), Scalar(rng.rational())) +
                       AlgElement::gen(rng.generator(2));
        AlgElement w = AlgElement::gen(rng.generator(2)) * AlgElement::gen(rng.generator(2));
        MVector v = rng.vector_in(space, 2, 2, 2, 2);
        CHECK(act_element(space, u * w, v) == act_element(space, u, act_element(space, w, v)));
    }
}

TEST_CASE("inverse letter requires a matching localized space") {
    ParamEnv envb = ParamEnv::symbolic(true);
    ParamEnv env = envb.without_b();
    GridIndex m{1, 0};
    AlgElement inv = AlgElement::word(Word{Atom::inv_e21({0, 1})});
    CHECK_THROWS_AS(act_element(ModuleSpace::plain(env), inv, kOne), InverseMismatchError);
    CHECK_THROWS_AS(act_element(ModuleSpace::localized(env, m), inv, xv(m, -1)),
                    InverseMismatchError);
    CHECK_THROWS_AS(act_element(ModuleSpace::quotient(env, m),
                                AlgElement::word(Word{Atom::inv_e21(m)}), xv(m, -1)),
                    InverseMismatchError);
    // matching index works in localized and twisted spaces
    CHECK(act_element(ModuleSpace::localized(env, m),
                      AlgElement::word(Word{Atom::inv_e21(m)}), xv(m, 2)) == xv(m, 1));
    CHECK(act_element(ModuleSpace::twisted(envb, m),
                      AlgElement::word(Word{Atom::inv_e21(m)}), xv(m, 2)) == xv(m, 1));
}

TEST_CASE("plain space rejects Laurent input") {
    ParamEnv env = ParamEnv::symbolic(false);
    CHECK_THROWS_AS(act_generator(ModuleSpace::plain(env), Generator::d1(), xv({1, 0}, -1)),
                    SpaceValidityError);
}

TEST_CASE("weights") {
    ParamEnv env = ParamEnv::symbolic(false);
    ModuleSpace plain = ModuleSpace::plain(env);
    WeightValue w = weight_of(plain, xv({1, 0}));
    CHECK(w.e11 == env.mu() - Scalar(1));
    CHECK(w.e22 == Scalar(1));
    CHECK(w.d1 == Scalar(1));
    CHECK(w.d2 == Scalar(0));
    WeightValue w1 = weight_of(plain, kOne);
    CHECK(w1.e11 == env.mu());
    CHECK(w1.e22 == Scalar(0));
    CHECK(w1.d1 == Scalar(0));
    CHECK(w1.d2 == Scalar(0));

    // twisted x_m^d: (e11 - e22)-weight is mu - 2d + 2b
    ParamEnv envb = ParamEnv::symbolic(true);
    GridIndex m{2, 1};
    ModuleSpace tw = ModuleSpace::twisted(envb, m);
    for (long long d : {1LL, 3LL}) {
        WeightValue wt = weight_of(tw, xv(m, d));
        CHECK(wt.e11 - wt.e22 == envb.mu() - Scalar(2 * d) + Scalar(2) * envb.b());
        CHECK(wt.d1 == Scalar(d * m.m1) - envb.b() * Scalar(m.m1));
        CHECK(wt.d2 == Scalar(d * m.m2) - envb.b() * Scalar(m.m2));
    }

    CHECK_THROWS_AS(weight_of(plain, xv({1, 0}) + kOne), NotWeightVectorError);
    CHECK_THROWS_AS(weight_of(plain, MVector::zero()), PreconditionError);
}

TEST_CASE("weight additivity under graded generators") {
    Rng rng(41);
    GridIndex m{1, 0};
    for (int t = 0; t < 40; ++t) {
        ParamEnv env = ParamEnv::specialized(rng.rational_nonzero(), rng.rational());
        ModuleSpace loc = ModuleSpace::localized(env, m);
        Monomial mono = rng.monomial(2, 2, 2, {m}).shifted(m, rng.range(-2, 2));
        MVector v = MVector::unit(mono);
        Generator g = rng.graded_generator(2);
        MVector w = act_generator(loc, g, v);
        if (w.is_zero()) continue;
        WeightValue before = weight_of(loc, v);
        WeightValue after = weight_of(loc, w);
        CHECK(after.d1 == before.d1 + Scalar(g.grade().m1));
        CHECK(after.d2 == before.d2 + Scalar(g.grade().m2));
    }
}

TEST_CASE("homomorphism property sampled") {
    Rng rng(43);
    const SpaceKind kinds[4] = {SpaceKind::Plain, SpaceKind::Localized, SpaceKind::Twisted,
                                SpaceKind::QuotientView};
    for (int t = 0; t < 60; ++t) {
        SpaceKind kind = kinds[t % 4];
        GridIndex m = rng.index(2);
        ParamEnv env = kind == SpaceKind::Twisted
                           ? ParamEnv::specialized(rng.rational_nonzero(), rng.rational(),
                                                   rng.rational())
                           : ParamEnv::specialized(rng.rational_nonzero(), rng.rational());
        ModuleSpace space = space_of(kind, env, m);
        Generator x = rng.generator(2), y = rng.generator(2);
        MVector v = rng.vector_in(space, 2, 3, 2, 2);
        MVector lhs = act_generator(space, x, act_generator(space, y, v)) -
                      act_generator(space, y, act_generator(space, x, v));
        CHECK(lhs == act_element(space, bracket(x, y, env), v));
    }
}

TEST_CASE("twisted at integer b is conjugation by x_m^k") {
    Rng rng(47);
    GridIndex m{1, 1};
    for (long k = -2; k <= 2; ++k) {
        ParamEnv env =
            ParamEnv::specialized(rng.rational_nonzero(), rng.rational(), mpq_class(k));
        ModuleSpace tw = ModuleSpace::twisted(env, m);
        ModuleSpace loc = ModuleSpace::localized(env, m);
        for (int t = 0; t < 10; ++t) {
            Generator g = rng.generator(2);
            MVector v = rng.vector_in(loc, 2, 2, 2, 2);
            // rho(v) = x_m^k v intertwines: u . rho(v) = rho(u v)
            MVector lhs = act_generator(tw, g, v.mono_mul(Monomial::variable(m, k)));
            MVector rhs = act_generator(loc, g, v).mono_mul(Monomial::variable(m, k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("quotient view projects eagerly") {
    ParamEnv env = ParamEnv::symbolic(false);
    GridIndex m{1, 0};
    ModuleSpace qv = ModuleSpace::quotient(env, m);
    // e21(m) x_m^{-1} = 1 which lies in the polynomial part
    CHECK(act_generator(qv, Generator::e21(m), xv(m, -1)).is_zero());
    // consistency with the localized action followed by projection
    Rng rng(53);
    ParamEnv envr = ParamEnv::specialized(mpq_class(5, 2), mpq_class(2, 7));
    ModuleSpace qvr = ModuleSpace::quotient(envr, m);
    ModuleSpace locr = ModuleSpace::localized(envr, m);
    for (int t = 0; t < 40; ++t) {
        Generator g = rng.generator(2);
        MVector v = rng.vector_in(qvr, 2, 3, 2, 2);
        CHECK(act_generator(qvr, g, v) ==
              project_mod_M(act_generator(locr, g, v), m));
    }
}
