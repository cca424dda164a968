#include <doctest.h>

#include "qtorus/parser.hpp"
#include "qtorus/rng.hpp"

using namespace qtorus;

namespace {

const ParamEnv kEnv = ParamEnv::specialized(2, mpq_class(1, 3), mpq_class(1, 5));
const ParamEnv kSym = ParamEnv::symbolic(true);

}  // namespace

TEST_CASE("vector literals") {
    MVector v = parse_vector("x[1,0]^2 - 3/2*x[0,-1]", kEnv);
    MVector expected = MVector::unit(Monomial::variable({1, 0}, 2));
    expected.add_term(Monomial::variable({0, -1}), Scalar::rational(-3, 2));
    CHECK(v == expected);
    CHECK(parse_vector("  x[ 1 , 0 ]^2-3/2 * x[0,-1] ", kEnv) == v);
    CHECK(parse_vector(v.str(), kEnv) == v);
    CHECK(parse_vector("0", kEnv).is_zero());
    CHECK(parse_vector("1", kEnv) == MVector::unit(Monomial::one()));
    CHECK(parse_vector("x[1,0]/2", kEnv) ==
          MVector::unit(Monomial::variable({1, 0}), Scalar::rational(1, 2)));
}

TEST_CASE("word literals") {
    AlgElement w = parse_word("E12(0,0)*E21(1,0)", kEnv);
    AlgElement expected = AlgElement::gen(Generator::e12({0, 0})) *
                          AlgElement::gen(Generator::e21({1, 0}));
    CHECK(w == expected);
    CHECK(parse_word(w.str(), kEnv) == w);
    // inverse powers and grouping
    AlgElement inv2 = parse_word("E21(0,-1)^-2", kEnv);
    CHECK(inv2 == AlgElement::word(Word{Atom::inv_e21({0, -1}), Atom::inv_e21({0, -1})}));
    CHECK(parse_word(inv2.str(), kEnv) == inv2);
    AlgElement mixed = parse_word("3*D1*E11(2,-2) - mu*D2^2", kEnv);
    CHECK(parse_word(mixed.str(), kEnv) == mixed);
}

TEST_CASE("scalar evaluation inside expressions") {
    CHECK(parse_vector("q*x[1,0]", kEnv) ==
          MVector::unit(Monomial::variable({1, 0}), Scalar(2)));
    CHECK(parse_vector("(1/2*mu + 1)*x[1,0]", kSym) ==
          MVector::unit(Monomial::variable({1, 0}),
                        Scalar::rational(1, 2) * Scalar::sym_mu() + Scalar(1)));
    CHECK(parse_scalar("q^-2*b", kSym) == Scalar::sym_b() / (Scalar::sym_q().pow(2)));
    CHECK(parse_scalar("(q+1)/(q-1)", kSym) ==
          (Scalar::sym_q() + Scalar(1)) / (Scalar::sym_q() - Scalar(1)));
}

TEST_CASE("syntax errors carry position and expectation") {
    CHECK_THROWS_AS(parse_vector("x[1,0]^0", kEnv), ParseError);
    try {
        parse_vector("x[1,0]^0", kEnv);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
        CHECK(std::string(e.what()).find("zero exponent") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_vector("x[1,0", kEnv), ParseError);
    CHECK_THROWS_AS(parse_vector("x[1,0] +", kEnv), ParseError);
    CHECK_THROWS_AS(parse_vector("y[1,0]", kEnv), ParseError);
    CHECK_THROWS_AS(parse_vector("x[1,0] x[0,1]", kEnv), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", kEnv), ParseError);
    CHECK_THROWS_AS(parse_vector("2/x[1,0]", kEnv), ParseError);
}

TEST_CASE("context separates atoms") {
    CHECK_THROWS_AS(parse_vector("E12(0,0)", kEnv), ParseError);
    CHECK_THROWS_AS(parse_word("x[1,0]", kEnv), ParseError);
    CHECK_THROWS_AS(parse_word("E12(0,0)^-1", kEnv), ParseError);  // only E21 inverts
    CHECK_THROWS_AS(parse_scalar("x[1,0]", kEnv), ParseError);
    CHECK_THROWS_AS(parse_vector("(x[1,0])", kEnv), ParseError);  // parens are scalar-only
    // b is rejected when the environment has none
    ParamEnv no_b = ParamEnv::specialized(2, 1);
    CHECK_THROWS_AS(parse_scalar("b", no_b), ParseError);
}

TEST_CASE("round-trip on random values") {
    Rng rng(61);
    ModuleSpace loc = ModuleSpace::localized(kEnv, {1, 0});
    for (int t = 0; t < 60; ++t) {
        MVector v = rng.vector_in(loc, 3, 4, 3, 3);
        CHECK(parse_vector(v.str(), kEnv) == v);
    }
    ModuleSpace locs = ModuleSpace::localized(kSym, {1, 0});
    for (int t = 0; t < 25; ++t) {
        // symbolic coefficients exercise the parenthesized scalar grammar
        MVector v = rng.vector_in(locs, 2, 3, 2, 2)
                        .scaled(Scalar::sym_mu() / (Scalar::sym_q() + Scalar(3)) +
                                Scalar(rng.rational()));
        CHECK(parse_vector(v.str(), kSym) == v);
    }
    for (int t = 0; t < 40; ++t) {
        AlgElement u = AlgElement::gen(rng.generator(3), Scalar(rng.rational())) *
                       AlgElement::gen(rng.generator(3));
        if (rng.flip()) u = u + AlgElement::gen(rng.generator(3), Scalar(rng.rational()));
        CHECK(parse_word(u.str(), kEnv) == u);
    }
}
