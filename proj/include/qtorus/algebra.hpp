#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtorus/fock.hpp"

namespace qtorus {

enum class GenKind { E11, E12, E21, E22, D1, D2 };

std::string to_string(GenKind k);
bool is_graded(GenKind k);  // the four matrix-unit families carry an index

/// One of the algebra generators e_ij(n), D1, D2.
struct Generator {
    GenKind kind = GenKind::D1;
    GridIndex n{};  // ignored for D1/D2

    static Generator e11(GridIndex n) { return {GenKind::E11, n}; }
    static Generator e12(GridIndex n) { return {GenKind::E12, n}; }
    static Generator e21(GridIndex n) { return {GenKind::E21, n}; }
    static Generator e22(GridIndex n) { return {GenKind::E22, n}; }
    static Generator d1() { return {GenKind::D1, {}}; }
    static Generator d2() { return {GenKind::D2, {}}; }

    /// The Z^2-degree: acting with this generator shifts d-weights by grade().
    GridIndex grade() const { return is_graded(kind) ? n : GridIndex{}; }

    auto operator<=>(const Generator&) const = default;
    std::string str() const;
};

/// Word letter: a generator, or the localized inverse e21(m)^{-1}.
struct Atom {
    Generator gen;
    bool inverse = false;  // only with gen.kind == E21

    static Atom of(Generator g) { return {g, false}; }
    static Atom inv_e21(GridIndex m) { return {Generator::e21(m), true}; }

    auto operator<=>(const Atom&) const = default;
    std::string str() const;
};

using Word = std::vector<Atom>;

/// Finite formal sum of words in the generators and e21(m)^{-1} with Scalar
/// coefficients: an element of the (localized) enveloping algebra. Words are
/// not normal-ordered; equality is word-level. Adjacent e21(m)*e21(m)^{-1}
/// pairs cancel during canonicalization.
class AlgElement {
public:
    using Terms = std::map<Word, Scalar>;

    AlgElement() = default;
    static AlgElement zero() { return {}; }
    static AlgElement identity();
    static AlgElement gen(Generator g, Scalar c = Scalar(1));
    static AlgElement word(Word w, Scalar c = Scalar(1));
    static AlgElement scalar(Scalar c);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_word(Word w, const Scalar& c);

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const;  // free word product
    AlgElement operator-() const;
    AlgElement scaled(const Scalar& c) const;
    bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

AlgElement operator*(const Scalar& c, const AlgElement& u);

/// Lie bracket of two generators as a Scalar-combination of generators.
AlgElement bracket(const Generator& g, const Generator& h, const ParamEnv& env);

/// Bilinear extension of the bracket to combinations of single generators.
AlgElement bracket(const AlgElement& u, const AlgElement& v, const ParamEnv& env);

/// Adjoint action of e21(m), extended to words by the Leibniz rule.
/// [e21(m), e21(m)^{-1}] = 0; an inverse at a different index is an error.
AlgElement ad_e21(GridIndex m, const AlgElement& u, const ParamEnv& env);

/// The twisting automorphism as its defining series
///   sum_j binom(b,j) (ad e21(m))^j(u) e21(m)^{-j},
/// which terminates by ad-nilpotency.
AlgElement twist_series(const AlgElement& u, const Scalar& b, GridIndex m, const ParamEnv& env);

/// Closed forms of the twisting automorphism on single generators.
AlgElement twist_closed(const Generator& g, const Scalar& b, GridIndex m, const ParamEnv& env);

}  // namespace qtorus
