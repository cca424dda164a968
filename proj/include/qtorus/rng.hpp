#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include "qtorus/algebra.hpp"
#include "qtorus/fock.hpp"

namespace qtorus {

/// Deterministic random source for the verification suites. All mapping
/// from raw 64-bit output to values is done here (not via std distributions)
/// so identical seeds give identical streams everywhere. Trial i of a suite
/// uses Rng(seed, i), independent of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : eng_(mix(mix(seed) + stream)) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform on [lo, hi], inclusive.
    long long range(long long lo, long long hi);
    bool flip() { return next() & 1; }

    /// Numerator and denominator drawn from [-50,50]\{0}, canonicalized.
    mpq_class rational();
    mpq_class rational_nonzero();
    mpq_class rational_noninteger();
    /// Uniform integer in [lo, hi] as a rational.
    mpq_class integer(long long lo, long long hi) {
        return mpq_class(static_cast<long>(range(lo, hi)));
    }

    GridIndex index(int window);
    GridIndex index_nonzero(int window);
    /// Any generator with index inside the window.
    Generator generator(int window);
    /// A graded generator (E11/E12/E21/E22) with index inside the window.
    Generator graded_generator(int window);

    /// Monomial with 1..max_vars variables inside the window, exponents in
    /// [1, max_exp]; indices in `avoid` are never used.
    Monomial monomial(int window, int max_vars, long long max_exp,
                      const std::vector<GridIndex>& avoid = {});
    /// Vector with 1..max_terms monomial terms and rational coefficients.
    MVector vector(int window, int max_terms, int max_vars, long long max_exp,
                   const std::vector<GridIndex>& avoid = {});
    /// Valid vector in the given space; localized kinds may carry negative
    /// powers of the distinguished variable.
    MVector vector_in(const ModuleSpace& space, int window, int max_terms, int max_vars,
                      long long max_exp);

private:
    static std::uint64_t mix(std::uint64_t x);

    std::mt19937_64 eng_;
};

}  // namespace qtorus
