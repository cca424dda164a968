#include <doctest.h>

#include "qtorus/algebra.hpp"
#include "qtorus/rng.hpp"

using namespace qtorus;

namespace {

const ParamEnv kSym = ParamEnv::symbolic(false);
const Scalar kQ = Scalar::sym_q();

}  // namespace

TEST_CASE("bracket of matrix units") {
    // [e12((1,0)), e21((0,1))] = e11((1,1)) - q e22((1,1))
    AlgElement got = bracket(Generator::e12({1, 0}), Generator::e21({0, 1}), kSym);
    AlgElement expected = AlgElement::gen(Generator::e11({1, 1})) -
                          kQ * AlgElement::gen(Generator::e22({1, 1}));
    CHECK(got == expected);
}

TEST_CASE("bracket with derivations") {
    CHECK(bracket(Generator::d1(), Generator::e12({3, -2}), kSym) ==
          AlgElement::gen(Generator::e12({3, -2}), Scalar(3)));
    CHECK(bracket(Generator::d2(), Generator::e12({3, -2}), kSym) ==
          AlgElement::gen(Generator::e12({3, -2}), Scalar(-2)));
    CHECK(bracket(Generator::d1(), Generator::d2(), kSym).is_zero());
}

TEST_CASE("e21 family commutes") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        GridIndex n = rng.index(3), k = rng.index(3);
        CHECK(bracket(Generator::e21(n), Generator::e21(k), kSym).is_zero());
    }
}

TEST_CASE("antisymmetry and jacobi") {
    Rng rng(5);
    ParamEnv env = ParamEnv::specialized(mpq_class(5, 3), 0);
    for (int t = 0; t < 200; ++t) {
        Generator x = rng.generator(3), y = rng.generator(3), z = rng.generator(3);
        CHECK((bracket(x, y, env) + bracket(y, x, env)).is_zero());
        AlgElement jac = bracket(AlgElement::gen(x), bracket(y, z, env), env) +
                         bracket(AlgElement::gen(y), bracket(z, x, env), env) +
                         bracket(AlgElement::gen(z), bracket(x, y, env), env);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("adjoint action of e21") {
    GridIndex m{2, -1};
    CHECK(ad_e21(m, AlgElement::gen(Generator::e21({0, 1})), kSym).is_zero());
    // ad(D1) = -m1 e21(m)
    CHECK(ad_e21(m, AlgElement::gen(Generator::d1()), kSym) ==
          AlgElement::gen(Generator::e21(m), Scalar(-2)));
    // (ad)^3 kills e12(n)
    AlgElement u = AlgElement::gen(Generator::e12({1, 1}));
    for (int i = 0; i < 3; ++i) u = ad_e21(m, u, kSym);
    CHECK(u.is_zero());
    // inverse at a different index is a mismatch
    AlgElement bad = AlgElement::word(Word{Atom::inv_e21({0, 0})});
    CHECK_THROWS_AS(ad_e21(m, bad, kSym), InverseMismatchError);
}

TEST_CASE("adjacent inverse pairs cancel in words") {
    GridIndex m{1, 0};
    AlgElement w =
        AlgElement::word(Word{Atom::of(Generator::e21(m)), Atom::inv_e21(m)});
    CHECK(w == AlgElement::identity());
    AlgElement w2 =
        AlgElement::word(Word{Atom::inv_e21(m), Atom::of(Generator::e21(m))});
    CHECK(w2 == AlgElement::identity());
}

TEST_CASE("twist series closed values") {
    GridIndex m{2, 3};
    Scalar b = Scalar::sym_b();
    ParamEnv env = ParamEnv::symbolic(true);
    // e21(n) is fixed
    AlgElement e21n = AlgElement::gen(Generator::e21({0, 1}));
    CHECK(twist_series(e21n, b, m, env) == e21n);
    // D1 -> D1 - b m1 with the inverse pair collapsed to the empty word
    CHECK(twist_series(AlgElement::gen(Generator::d1()), b, m, env) ==
          AlgElement::gen(Generator::d1()) - AlgElement::scalar(b * Scalar(2)));
    // b = 0 fixes everything
    AlgElement u = AlgElement::gen(Generator::e12({1, -1})) *
                   AlgElement::gen(Generator::e11({0, 2}));
    CHECK(twist_series(u, Scalar(0), m, env) == u);
}

TEST_CASE("twist closed equals series word-for-word") {
    ParamEnv env = ParamEnv::symbolic(true);
    Scalar b = Scalar::sym_b();
    Rng rng(17);
    for (int t = 0; t < 12; ++t) {
        GridIndex m = rng.index(2);
        GridIndex n = rng.index(2);
        for (Generator g : {Generator::e11(n), Generator::e12(n), Generator::e21(n),
                            Generator::e22(n), Generator::d1(), Generator::d2()}) {
            CHECK(twist_closed(g, b, m, env) == twist_series(AlgElement::gen(g), b, m, env));
        }
    }
}

TEST_CASE("word product is bilinear with identity") {
    Rng rng(23);
    AlgElement u = AlgElement::gen(rng.generator(2));
    AlgElement v = AlgElement::gen(rng.generator(2));
    AlgElement w = AlgElement::gen(rng.generator(2));
    CHECK(AlgElement::identity() * u == u);
    CHECK(u * AlgElement::identity() == u);
    CHECK((u + v) * w == u * w + v * w);
    CHECK(w * (u + v) == w * u + w * v);
    CHECK((u * v) * w == u * (v * w));
}
