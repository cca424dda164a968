#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/action.hpp"

namespace qtorus {

struct ProbeWitness {
    std::string inputs;
    std::string expected;
    std::string got;
};

/// Outcome of a finite certificate or randomized battery. Counterexample
/// reports always carry a reproducible witness. The measured runtime is for
/// human output only; it is not serialized, so reports with equal
/// (command, seed) are byte-identical.
struct ProbeReport {
    enum class Verdict { Verified, Counterexample, InconclusiveBudget };

    std::string suite;
    Verdict verdict = Verdict::Verified;
    long long trials = 0;
    std::uint64_t seed = 0;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<ProbeWitness> witness;
    std::vector<std::string> chain;
    std::optional<long long> dimension;
    long long runtime_ms = 0;

    static std::string verdict_name(Verdict v);
    nlohmann::ordered_json to_json() const;
    std::string text() const;

    void fail(std::string inputs, std::string expected, std::string got) {
        verdict = Verdict::Counterexample;
        witness = ProbeWitness{std::move(inputs), std::move(expected), std::move(got)};
    }
    bool ok() const { return verdict == Verdict::Verified; }
};

/// Row-reduced family of vectors over the exact scalar field. Every row has
/// coefficient 1 at its pivot monomial and 0 at the pivots of all other rows.
class SpanBasis {
public:
    /// Reduce against the basis and insert; returns the surviving reduced
    /// row when the dimension grew, nullopt when v was already in the span.
    std::optional<MVector> insert(const MVector& v);
    MVector reduce(MVector v) const;
    bool contains(const MVector& v) const { return reduce(v).is_zero(); }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<MVector>& rows() const { return rows_; }

private:
    std::vector<MVector> rows_;  // sorted by pivot (leading monomial) descending
};

/// The explicit vector annihilated by e12(-m) in the localized module, built
/// from the lowering-operator ladder on x_n^d. Requires integer mu with
/// -d + mu + 1 < 0 and n1*m2 - n2*m1 != 0.
MVector singular_vector(const ParamEnv& env, GridIndex m, GridIndex n, long long d);

/// One degree-reduction step on v = x_m^{-1} f (f homogeneous of degree
/// d >= 1, free of x_m) in the quotient view; requires mu not an integer.
/// Returns the reduced vector x_m^{-1} f' (deg f' = d-1, nonzero) and the
/// variable index the step eliminated against.
std::pair<MVector, GridIndex> reduce_step(const MVector& v, const ParamEnv& env, GridIndex m);

/// Drives reduce_step from an arbitrary nonzero element of the quotient down
/// to a nonzero multiple of x_m^{-1}, handling homogeneous components
/// separately. Verified when every component lands within max_steps total.
ProbeReport cyclicity_run(const MVector& v, const ParamEnv& env, GridIndex m,
                          long long max_steps);

/// Exact check of the iterated-action closed forms on x_m^{-1} (i = 1..i_max)
/// and on x_m^{-j} for sampled j (the torsion witness). Any mu.
ProbeReport quotient_ladder_check(const ParamEnv& env, GridIndex m, long long i_max);

/// Twisted-module ladder: the commutator identity for e21(m)^{-1}, the
/// eigen-relation for w = x_m^d (p = d), the single-step recursion B_k and
/// the k-fold product formula. env must carry b.
ProbeReport twisted_ladder_check(const ParamEnv& env, GridIndex m, long long d,
                                 long long k_max);

/// Iterates g on v; verified with the minimal k <= max_iter such that
/// g^k v = 0, else inconclusive with the surviving degree profile.
ProbeReport nilpotency_probe(const ModuleSpace& space, const Generator& g, const MVector& v,
                             long long max_iter);

struct SpanProbeOptions {
    int gen_window = 1;
    long long degree_cap = 4;
    long long support_cap = 0;  // 0: derived as gen_window * (degree_cap + 1)
    std::size_t max_dim = 200;
};

/// Breadth-first closure of the seed under the window-restricted generator
/// set, maintaining an exact row-reduced basis. Verified when the target
/// enters the span; otherwise inconclusive (budget or closure) with the
/// final dimension. Non-membership is evidence only.
ProbeReport span_probe(const MVector& seed, const ModuleSpace& space, const MVector& target,
                       const SpanProbeOptions& opt);

enum class Suite { Bracket, Theta, Lemmas, Homomorphism, All };

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);

/// Seeded randomized identity batteries. Each sampled identity instance is
/// re-checked at 3 independently drawn parameter points.
ProbeReport run_suite(Suite suite, long long trials, std::uint64_t seed);

}  // namespace qtorus
