#include <doctest.h>

#include "qtorus/fock.hpp"
#include "qtorus/rng.hpp"

using namespace qtorus;

namespace {

const GridIndex kM{1, 0};
const GridIndex kN{0, 1};

MVector xv(GridIndex n, long long e = 1) { return MVector::unit(Monomial::variable(n, e)); }

}  // namespace

TEST_CASE("vector arithmetic cancels") {
    MVector v = xv(kM) - xv(kM);
    CHECK(v.is_zero());
    CHECK((xv(kM) + xv(kN)) - xv(kN) == xv(kM));
}

TEST_CASE("mono_mul adds exponents") {
    Monomial m2n = Monomial::variable(kM, 2).times(Monomial::variable(kN));
    MVector v = MVector::unit(m2n);
    CHECK(v.mono_mul(Monomial::variable(kM)) ==
          MVector::unit(Monomial::variable(kM, 3).times(Monomial::variable(kN))));
    // localized inverse pair collapses to 1
    CHECK(xv(kM).mono_mul(Monomial::variable(kM, -1)) == MVector::unit(Monomial::one()));
}

TEST_CASE("space validity") {
    ParamEnv env = ParamEnv::specialized(2, 1);
    ModuleSpace plain = ModuleSpace::plain(env);
    ModuleSpace loc = ModuleSpace::localized(env, kM);
    Monomial bad = Monomial::variable(kN, -2);
    CHECK_THROWS_AS(plain.validate(bad), SpaceValidityError);
    CHECK_THROWS_AS(loc.validate(bad), SpaceValidityError);
    loc.validate(Monomial::variable(kM, -5));
    try {
        loc.validate(bad);
    } catch (const SpaceValidityError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    CHECK_THROWS_AS(ModuleSpace::twisted(env, kM), PreconditionError);  // b missing
}

TEST_CASE("degrees") {
    // v = x_m^{-1} x_n^2: total degree 1, hatted degree 2
    MVector v = MVector::unit(Monomial::variable(kM, -1).times(Monomial::variable(kN, 2)));
    CHECK(total_degree(v) == 1);
    CHECK(xm_hat_degree(v, kM) == 2);
    CHECK(total_degree(MVector::unit(Monomial::one())) == 0);
    CHECK_THROWS_AS(total_degree(MVector::zero()), PreconditionError);

    MVector w = xv(kN, 2) + MVector::unit(Monomial::variable(kN).times(
                                Monomial::variable({1, 1})));
    auto comps = homogeneous_components(w);
    CHECK(comps.size() == 1);
    CHECK(comps.begin()->first == 2);
}

TEST_CASE("project_mod_M") {
    MVector v = xv(kM, -1) + xv(kN);
    CHECK(project_mod_M(v, kM) == xv(kM, -1));
    CHECK(project_mod_M(xv(kN, 2), kM).is_zero());
    MVector rep = MVector::unit(Monomial::variable(kM, -2).times(Monomial::variable(kN)));
    CHECK(project_mod_M(rep, kM) == rep);
}

TEST_CASE("projection is linear and idempotent") {
    Rng rng(11);
    ParamEnv env = ParamEnv::specialized(2, 1);
    ModuleSpace loc = ModuleSpace::localized(env, kM);
    for (int t = 0; t < 50; ++t) {
        MVector a = rng.vector_in(loc, 2, 3, 2, 3);
        MVector b = rng.vector_in(loc, 2, 3, 2, 3);
        MVector pa = project_mod_M(a, kM);
        CHECK(project_mod_M(pa, kM) == pa);
        CHECK(project_mod_M(a + b, kM) == pa + project_mod_M(b, kM));
        bool all_nonneg = true;
        for (const auto& [mono, c] : a.terms())
            if (mono.exponent_of(kM) < 0) all_nonneg = false;
        CHECK(pa.is_zero() == all_nonneg);
    }
}

TEST_CASE("mono_mul distributes and scaling composes") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        MVector a = rng.vector(2, 3, 2, 3);
        MVector b = rng.vector(2, 3, 2, 3);
        Monomial m = rng.monomial(2, 2, 3);
        CHECK((a + b).mono_mul(m) == a.mono_mul(m) + b.mono_mul(m));
        Scalar c1(rng.rational()), c2(rng.rational());
        CHECK(a.scaled(c1 * c2) == a.scaled(c2).scaled(c1));
    }
}

TEST_CASE("partial derivative is formal on Laurent exponents") {
    // d/dx_m x_m^{-2} = -2 x_m^{-3}
    CHECK(partial_derivative(xv(kM, -2), kM) == xv(kM, -3).scaled(Scalar(-2)));
    CHECK(partial_derivative(xv(kN, 3), kN) == xv(kN, 2).scaled(Scalar(3)));
    CHECK(partial_derivative(xv(kN), kM).is_zero());
}
