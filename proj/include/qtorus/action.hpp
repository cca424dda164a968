#pragma once

#include "qtorus/algebra.hpp"
#include "qtorus/fock.hpp"

namespace qtorus {

/// Eigenvalues of the four Cartan operators on a weight vector.
struct WeightValue {
    Scalar e11, e22, d1, d2;

    bool operator==(const WeightValue&) const = default;
    std::string str() const;
};

/// Action of a single generator on v in the given space. Plain and
/// Localized use the defining differential-operator formulas (finite
/// closed forms per monomial); Twisted acts through the closed-form
/// twist of the generator; QuotientView projects modulo the polynomial
/// submodule after the application.
MVector act_generator(const ModuleSpace& space, const Generator& g, const MVector& v);

/// Action of an enveloping-algebra element: words fold right-to-left over
/// act_generator; the inverse letter multiplies by x_m^{-1} and requires a
/// Localized or Twisted space with matching m.
MVector act_element(const ModuleSpace& space, const AlgElement& u, const MVector& v);

/// The second-order lowering operator L_m with
///   act(e12(-m)) = q^{-m1 m2} mu d/dx_m - L_m
/// on Plain/Localized vectors.
MVector apply_lowering(GridIndex m, const MVector& v, const ParamEnv& env);

/// Simultaneous eigenvalues of E11(0), E22(0), D1, D2 on v. Throws
/// NotWeightVectorError (naming the first failing operator) if v is not a
/// weight vector, and PreconditionError if v = 0.
WeightValue weight_of(const ModuleSpace& space, const MVector& v);

}  // namespace qtorus
