#include "qtorus/verify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qtorus/rng.hpp"

namespace qtorus {

std::string ProbeReport::verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::InconclusiveBudget: return "inconclusive-budget";
    }
    return "?";
}

nlohmann::ordered_json ProbeReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["verdict"] = verdict_name(verdict);
    j["trials"] = trials;
    j["seed"] = seed;
    j["params"] = params;
    if (witness) {
        j["witness"] = {{"inputs", witness->inputs},
                        {"expected", witness->expected},
                        {"got", witness->got}};
    }
    if (!chain.empty()) j["chain"] = chain;
    if (dimension) j["dimension"] = *dimension;
    return j;
}

std::string ProbeReport::text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    os << "verdict: " << verdict_name(verdict) << "\n";
    os << "trials: " << trials << "  seed: " << seed << "\n";
    if (!params.empty()) os << "params: " << params.dump() << "\n";
    if (witness) {
        os << "witness.inputs: " << witness->inputs << "\n";
        os << "witness.expected: " << witness->expected << "\n";
        os << "witness.got: " << witness->got << "\n";
    }
    for (const auto& line : chain) os << "  " << line << "\n";
    if (dimension) os << "dimension: " << *dimension << "\n";
    os << "runtime: " << runtime_ms << " ms\n";
    return os.str();
}

std::optional<MVector> SpanBasis::insert(const MVector& v) {
    MVector r = reduce(v);
    if (r.is_zero()) return std::nullopt;
    r = r.scaled(Scalar(1) / r.coeff(r.leading_monomial()));
    for (auto& row : rows_) {
        Scalar c = row.coeff(r.leading_monomial());
        if (!c.is_zero()) row = row - r.scaled(c);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), r,
                                [](const MVector& a, const MVector& b) {
                                    return b.leading_monomial() < a.leading_monomial();
                                });
    rows_.insert(pos, r);
    return r;
}

MVector SpanBasis::reduce(MVector v) const {
    // Rows are mutually reduced, so one pass per row suffices.
    for (const auto& row : rows_) {
        Scalar c = v.coeff(row.leading_monomial());
        if (!c.is_zero()) v = v - row.scaled(c);
    }
    return v;
}

namespace {

long long small_integer_value(const Scalar& s, const char* what) {
    if (!s.is_integer()) throw PreconditionError(std::string(what) + " must be an integer");
    mpq_class r = s.rational_value();
    if (!r.get_num().fits_slong_p())
        throw PreconditionError(std::string(what) + " is out of range");
    return r.get_num().get_si();
}

long long min_exponent_at(const MVector& v, GridIndex m) {
    bool first = true;
    long long z = 0;
    for (const auto& [mono, c] : v.terms()) {
        long long e = mono.exponent_of(m);
        if (first || e < z) z = e;
        first = false;
    }
    return z;
}

}  // namespace

MVector singular_vector(const ParamEnv& env, GridIndex m, GridIndex n, long long d) {
    const long long mu = small_integer_value(env.mu(), "mu");
    if (d < 1 || -d + mu + 1 >= 0)
        throw PreconditionError("d must be a positive integer with -d + mu + 1 < 0");
    if (n.m1 * m.m2 - n.m2 * m.m1 == 0)
        throw PreconditionError("n must satisfy n1*m2 - n2*m1 != 0");

    const long long l = 2 * d - mu - 1;
    const Scalar qm = env.q_power(-m.m1 * m.m2);
    MVector w;
    MVector wj = MVector::unit(Monomial::variable(n, d));
    for (long long j = 0; j <= d; ++j) {
        if (!partial_derivative(wj, m).is_zero())
            throw Error("singular_vector: ladder element depends on x_m");
        w = w + wj.mono_mul(Monomial::variable(m, j - l));
        if (j < d) {
            // a_{j+1} = q^{-m1 m2} (mu + (j+1) + l + 1 - 2d) ((j+1) - l)
            Scalar a = qm * Scalar(mu + (j + 1) + l + 1 - 2 * d) * Scalar((j + 1) - l);
            if (a.is_zero()) throw Error("singular_vector: vanishing ladder coefficient");
            wj = apply_lowering(m, wj, env).scaled(Scalar(1) / a);
        }
    }
    ModuleSpace space = ModuleSpace::localized(env, m);
    space.validate(w);
    if (w.is_zero()) throw Error("singular_vector: construction produced zero");
    if (!act_generator(space, Generator::e12(-m), w).is_zero())
        throw Error("singular_vector: annihilation check failed");
    return w;
}

std::pair<MVector, GridIndex> reduce_step(const MVector& v, const ParamEnv& env, GridIndex m) {
    if (env.mu().is_integer())
        throw PreconditionError("reduce_step: mu must not be an integer");
    if (v.is_zero()) throw PreconditionError("reduce_step: zero vector");
    for (const auto& [mono, c] : v.terms())
        if (mono.exponent_of(m) != -1)
            throw PreconditionError("reduce_step: vector is not of the shape x_m^{-1} f");
    const MVector f = v.mono_mul(Monomial::variable(m, 1));
    if (homogeneous_components(f).size() != 1)
        throw PreconditionError("reduce_step: f is not homogeneous");
    const long long d = total_degree(f);
    if (d < 1) throw PreconditionError("reduce_step: f must have degree >= 1");

    // Head variable: maximal exponent in f, ties broken lexicographically.
    long long i1 = 0;
    GridIndex n1{};
    for (const auto& [mono, c] : f.terms()) {
        for (const auto& [idx, e] : mono.exps()) {
            if (e > i1 || (e == i1 && idx < n1)) {
                i1 = e;
                n1 = idx;
            }
        }
    }

    const Scalar qm = env.q_power(-m.m1 * m.m2);
    const Scalar two_d_mu = Scalar(2 * d) - env.mu();
    const Scalar A = Scalar(-2) * (two_d_mu - Scalar(1)) * qm;
    const Scalar B = -(two_d_mu - Scalar(2)) * qm;

    const AlgElement lower_raise =
        AlgElement::gen(Generator::e12(-m)) * AlgElement::gen(Generator::e21(m));
    const AlgElement op = (lower_raise + AlgElement::scalar(B)) *
                          (lower_raise + AlgElement::scalar(A)) *
                          AlgElement::gen(Generator::e12(-n1));

    ModuleSpace space = ModuleSpace::quotient(env, m);
    MVector out = act_element(space, op, v);
    if (out.is_zero()) throw Error("reduce_step: reduction produced zero");
    for (const auto& [mono, c] : out.terms())
        if (mono.exponent_of(m) != -1)
            throw Error("reduce_step: output is not of the shape x_m^{-1} f");
    const MVector f1 = out.mono_mul(Monomial::variable(m, 1));
    if (homogeneous_components(f1).size() != 1 || total_degree(f1) != d - 1)
        throw Error("reduce_step: output degree did not drop by one");
    return {out, n1};
}

ProbeReport cyclicity_run(const MVector& v, const ParamEnv& env, GridIndex m,
                          long long max_steps) {
    if (env.mu().is_integer())
        throw PreconditionError("cyclicity_run: mu must not be an integer");
    MVector rep = project_mod_M(v, m);
    if (rep.is_zero())
        throw PreconditionError("cyclicity_run: vector is zero in the quotient view");

    ProbeReport report;
    report.suite = "cyclicity";
    report.params["m"] = m.str();
    report.params["max_steps"] = max_steps;
    long long steps = 0;
    for (const auto& [deg, comp] : homogeneous_components(rep)) {
        const long long z = min_exponent_at(comp, m);
        const long long k = -1 - z;
        MVector w = project_mod_M(comp.mono_mul(Monomial::variable(m, k)), m);
        report.chain.push_back("component of degree " + std::to_string(deg) +
                               ": premultiplied by x_m^" + std::to_string(k));
        long long fdeg = total_degree(w) + 1;
        while (fdeg > 0) {
            if (steps >= max_steps) {
                report.verdict = ProbeReport::Verdict::InconclusiveBudget;
                report.trials = steps;
                report.chain.push_back("step budget exhausted at degree " +
                                       std::to_string(fdeg));
                return report;
            }
            auto [next, n1] = reduce_step(w, env, m);
            w = next;
            ++steps;
            --fdeg;
            report.chain.push_back("reduction step against x" + n1.str() +
                                   " -> degree " + std::to_string(fdeg));
        }
        report.chain.push_back("component reached a nonzero multiple of x_m^{-1}: " +
                               w.str());
    }
    report.trials = steps;
    return report;
}

ProbeReport quotient_ladder_check(const ParamEnv& env, GridIndex m, long long i_max) {
    ProbeReport report;
    report.suite = "quotient-ladder";
    report.params["m"] = m.str();
    report.params["i_max"] = i_max;
    const ModuleSpace space = ModuleSpace::localized(env, m);
    const Generator low = Generator::e12(-m);
    const Scalar mu = env.mu();

    // e12(-m)^i x_m^{-j} = (-1)^i q^{-i m1 m2} j...(j+i-1) (mu+j+1)...(mu+j+i) x_m^{-j-i}
    for (long long j : {1LL, 2LL, 3LL, 5LL}) {
        MVector w = MVector::unit(Monomial::variable(m, -j));
        Scalar coef(1);
        for (long long i = 1; i <= i_max; ++i) {
            w = act_generator(space, low, w);
            coef = coef * (-env.q_power(-m.m1 * m.m2)) * Scalar(j + i - 1) *
                   (mu + Scalar(j + i));
            MVector expected =
                MVector::unit(Monomial::variable(m, -j - i)).scaled(coef);
            ++report.trials;
            if (!(w == expected)) {
                report.fail("m=" + m.str() + " j=" + std::to_string(j) +
                                " i=" + std::to_string(i),
                            expected.str(), w.str());
                return report;
            }
        }
    }
    return report;
}

ProbeReport twisted_ladder_check(const ParamEnv& env, GridIndex m, long long d,
                                 long long k_max) {
    ProbeReport report;
    report.suite = "twisted-ladder";
    report.params["m"] = m.str();
    report.params["d"] = d;
    report.params["k_max"] = k_max;
    const ModuleSpace space = ModuleSpace::twisted(env, m);
    const Scalar b = env.b();
    const Scalar mu = env.mu();
    const Scalar qm = env.q_power(-m.m1 * m.m2);
    const AlgElement inv = AlgElement::word(Word{Atom::inv_e21(m)});
    const AlgElement low = AlgElement::gen(Generator::e12(-m));

    // e21(m)^{-1} e12(-m) - e12(-m) e21(m)^{-1}
    //   = q^{-m1 m2} e21(m)^{-1} (e11 - e22) e21(m)^{-1}
    const AlgElement lhs = inv * low - low * inv;
    const AlgElement rhs =
        qm * (inv * (AlgElement::gen(Generator::e11({0, 0})) -
                     AlgElement::gen(Generator::e22({0, 0}))) *
              inv);
    Rng rng(0x7f4a7c15u);
    for (int t = 0; t < 5; ++t) {
        MVector v = rng.vector_in(space, 2, 3, 2, 2);
        MVector a = act_element(space, lhs, v);
        MVector c = act_element(space, rhs, v);
        ++report.trials;
        if (!(a == c)) {
            report.fail("commutator identity on v=" + v.str(), c.str(), a.str());
            return report;
        }
    }

    // Ladder on w = x_m^d with p = d.
    const long long p = d;
    auto B = [&](long long i) {
        return (Scalar(i) + b - Scalar(p)) *
               (Scalar(2 * d) - b - mu - Scalar(1) - Scalar(i) - Scalar(p)) * qm;
    };
    const MVector w = MVector::unit(Monomial::variable(m, d));

    // Eigen relation (the p = d instance of the reduction claim).
    {
        MVector got = act_element(space, low, w);
        MVector expected = act_element(space, inv, w)
                               .scaled((b - Scalar(p)) *
                                       (Scalar(2 * d) - mu - b - Scalar(p) - Scalar(1)) * qm);
        ++report.trials;
        if (!(got == expected)) {
            report.fail("eigen relation on w=x_m^" + std::to_string(d), expected.str(),
                        got.str());
            return report;
        }
    }

    const bool nonvanishing = !env.b().is_integer() && !(b + mu).is_integer();
    AlgElement inv_k = AlgElement::identity();
    Scalar prod(1);
    for (long long k = 0; k <= k_max; ++k) {
        if (nonvanishing && B(k).is_zero()) {
            report.fail("B_" + std::to_string(k) + " with b+mu not an integer",
                        "nonzero", "0");
            return report;
        }
        // e12(-m) e21(m)^{-k} w = B_k e21(m)^{-k-1} w
        MVector got = act_element(space, low * inv_k, w);
        MVector expected = act_element(space, inv_k * inv, w).scaled(B(k));
        ++report.trials;
        if (!(got == expected)) {
            report.fail("single step k=" + std::to_string(k), expected.str(), got.str());
            return report;
        }
        inv_k = inv_k * inv;
        prod = prod * B(k);
        // e12(-m)^{k+1} w = B_0 ... B_k e21(m)^{-k-1} w
        AlgElement low_pow = AlgElement::identity();
        for (long long i = 0; i <= k; ++i) low_pow = low_pow * low;
        MVector got_pow = act_element(space, low_pow, w);
        MVector expected_pow = act_element(space, inv_k, w).scaled(prod);
        ++report.trials;
        if (!(got_pow == expected_pow)) {
            report.fail("product formula k=" + std::to_string(k + 1), expected_pow.str(),
                        got_pow.str());
            return report;
        }
    }
    return report;
}

ProbeReport nilpotency_probe(const ModuleSpace& space, const Generator& g, const MVector& v,
                             long long max_iter) {
    ProbeReport report;
    report.suite = "nilpotency";
    report.params["generator"] = g.str();
    report.params["space"] = to_string(space.kind());
    report.params["max_iter"] = max_iter;
    MVector w = v;
    if (space.kind() == SpaceKind::QuotientView)
        w = project_mod_M(w, space.distinguished());
    for (long long k = 1; k <= max_iter; ++k) {
        w = act_generator(space, g, w);
        ++report.trials;
        if (w.is_zero()) {
            report.params["nilpotency_index"] = k;
            report.chain.push_back("annihilated after " + std::to_string(k) +
                                   " applications");
            return report;
        }
    }
    report.verdict = ProbeReport::Verdict::InconclusiveBudget;
    std::ostringstream degs;
    bool first = true;
    for (const auto& [deg, comp] : homogeneous_components(w)) {
        if (!first) degs << ",";
        degs << deg;
        first = false;
    }
    report.chain.push_back("survived " + std::to_string(max_iter) +
                           " applications; surviving degrees [" + degs.str() + "]");
    return report;
}

namespace {

MVector truncate_vector(const MVector& v, long long degree_cap, long long support_cap) {
    MVector out;
    for (const auto& [mono, c] : v.terms()) {
        long long deg = mono.total_degree();
        if (deg > degree_cap || deg < -degree_cap) continue;
        bool inside = true;
        for (const auto& [idx, e] : mono.exps()) {
            if (std::llabs(idx.m1) > support_cap || std::llabs(idx.m2) > support_cap) {
                inside = false;
                break;
            }
        }
        if (inside) out.add_term(mono, c);
    }
    return out;
}

}  // namespace

ProbeReport span_probe(const MVector& seed, const ModuleSpace& space, const MVector& target,
                       const SpanProbeOptions& opt) {
    const long long support_cap =
        opt.support_cap > 0 ? opt.support_cap
                            : static_cast<long long>(opt.gen_window) * (opt.degree_cap + 1);
    ProbeReport report;
    report.suite = "span";
    report.params["gen_window"] = opt.gen_window;
    report.params["degree_cap"] = opt.degree_cap;
    report.params["support_cap"] = support_cap;
    report.params["max_dim"] = opt.max_dim;

    std::vector<Generator> gens = {Generator::d1(), Generator::d2()};
    for (long long a = -opt.gen_window; a <= opt.gen_window; ++a) {
        for (long long b = -opt.gen_window; b <= opt.gen_window; ++b) {
            gens.push_back(Generator::e11({a, b}));
            gens.push_back(Generator::e12({a, b}));
            gens.push_back(Generator::e21({a, b}));
            gens.push_back(Generator::e22({a, b}));
        }
    }

    MVector start = truncate_vector(seed, opt.degree_cap, support_cap);
    if (space.kind() == SpaceKind::QuotientView)
        start = project_mod_M(start, space.distinguished());
    if (start.is_zero())
        throw PreconditionError("span_probe: seed is zero after truncation");

    SpanBasis basis;
    std::deque<MVector> queue;
    if (auto row = basis.insert(start)) queue.push_back(*row);
    auto found = [&] { return basis.contains(target); };
    if (found()) {
        report.dimension = static_cast<long long>(basis.dimension());
        report.chain.push_back("target in span at dimension " +
                               std::to_string(basis.dimension()));
        return report;
    }
    while (!queue.empty()) {
        MVector v = queue.front();
        queue.pop_front();
        for (const Generator& g : gens) {
            MVector w = truncate_vector(act_generator(space, g, v), opt.degree_cap,
                                        support_cap);
            if (w.is_zero()) continue;
            auto row = basis.insert(w);
            if (!row) continue;
            if (basis.dimension() > opt.max_dim) {
                report.verdict = ProbeReport::Verdict::InconclusiveBudget;
                report.dimension = static_cast<long long>(basis.dimension());
                report.chain.push_back("dimension cap exceeded");
                return report;
            }
            if (found()) {
                report.dimension = static_cast<long long>(basis.dimension());
                report.chain.push_back("target in span at dimension " +
                                       std::to_string(basis.dimension()));
                return report;
            }
            queue.push_back(*row);
        }
    }
    // closure complete without reaching the target: evidence, not disproof
    report.verdict = ProbeReport::Verdict::InconclusiveBudget;
    report.params["closed"] = true;
    report.dimension = static_cast<long long>(basis.dimension());
    report.chain.push_back("closure complete; target not in span");
    return report;
}

std::optional<Suite> suite_from_name(const std::string& name) {
    if (name == "bracket") return Suite::Bracket;
    if (name == "theta") return Suite::Theta;
    if (name == "lemmas") return Suite::Lemmas;
    if (name == "homomorphism") return Suite::Homomorphism;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Bracket: return "bracket";
        case Suite::Theta: return "theta";
        case Suite::Lemmas: return "lemmas";
        case Suite::Homomorphism: return "homomorphism";
        case Suite::All: return "all";
    }
    return "?";
}

namespace {

ParamEnv sample_env(Rng& rng, bool with_b) {
    if (with_b)
        return ParamEnv::specialized(rng.rational_nonzero(), rng.rational(), rng.rational());
    return ParamEnv::specialized(rng.rational_nonzero(), rng.rational());
}

std::string describe_env(const ParamEnv& env) {
    std::string s = "q=" + env.q().str() + " mu=" + env.mu().str();
    if (env.has_b()) s += " b=" + env.b().str();
    return s;
}

ProbeReport suite_bracket(long long trials, std::uint64_t seed) {
    ProbeReport report;
    report.suite = "bracket";
    report.seed = seed;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        Generator x = rng.generator(3);
        Generator y = rng.generator(3);
        Generator z = rng.generator(3);
        for (int point = 0; point < 3; ++point) {
            ParamEnv env = sample_env(rng, false);
            AlgElement anti = bracket(x, y, env) + bracket(y, x, env);
            ++report.trials;
            if (!anti.is_zero()) {
                report.fail("antisymmetry x=" + x.str() + " y=" + y.str() + " " +
                                describe_env(env),
                            "0", anti.str());
                return report;
            }
            AlgElement jac =
                bracket(AlgElement::gen(x), bracket(y, z, env), env) +
                bracket(AlgElement::gen(y), bracket(z, x, env), env) +
                bracket(AlgElement::gen(z), bracket(x, y, env), env);
            ++report.trials;
            if (!jac.is_zero()) {
                report.fail("jacobi x=" + x.str() + " y=" + y.str() + " z=" + z.str() +
                                " " + describe_env(env),
                            "0", jac.str());
                return report;
            }
        }
    }
    return report;
}

ProbeReport suite_theta(long long trials, std::uint64_t seed) {
    ProbeReport report;
    report.suite = "theta";
    report.seed = seed;
    const GenKind kinds[6] = {GenKind::E11, GenKind::E12, GenKind::E21,
                              GenKind::E22, GenKind::D1, GenKind::D2};
    for (long long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        const GridIndex m = rng.index(2);
        const Generator g{kinds[t % 6], rng.index(2)};
        const Scalar b = Scalar(rng.rational());
        for (int point = 0; point < 3; ++point) {
            ParamEnv env = sample_env(rng, false);
            const ModuleSpace space = ModuleSpace::localized(env, m);
            const AlgElement closed = twist_closed(g, b, m, env);
            const AlgElement series = twist_series(AlgElement::gen(g), b, m, env);
            for (int i = 0; i < 20; ++i) {
                MVector v = rng.vector_in(space, 2, 3, 2, 2);
                MVector a = act_element(space, closed, v);
                MVector c = act_element(space, series, v);
                ++report.trials;
                if (!(a == c)) {
                    report.fail("closed vs series g=" + g.str() + " m=" + m.str() +
                                    " b=" + b.str() + " v=" + v.str() + " " +
                                    describe_env(env),
                                c.str(), a.str());
                    return report;
                }
            }

            // integer b: the twist is plain conjugation by x_m^k
            const long long k = rng.range(-3, 3);
            AlgElement u = AlgElement::gen(rng.generator(2)) * AlgElement::gen(rng.generator(2));
            MVector v = rng.vector_in(space, 2, 3, 2, 2);
            MVector conj = act_element(space, u, v.mono_mul(Monomial::variable(m, -k)))
                               .mono_mul(Monomial::variable(m, k));
            MVector tw = act_element(space, twist_series(u, Scalar(k), m, env), v);
            ++report.trials;
            if (!(tw == conj)) {
                report.fail("integer-b conjugation k=" + std::to_string(k) + " m=" +
                                m.str() + " u=" + u.str() + " v=" + v.str() + " " +
                                describe_env(env),
                            conj.str(), tw.str());
                return report;
            }

            // multiplicativity, sampled semantically
            AlgElement u1 = AlgElement::gen(rng.generator(2));
            AlgElement u2 = AlgElement::gen(rng.generator(2));
            MVector v2 = rng.vector_in(space, 2, 2, 2, 2);
            MVector lhs = act_element(space, twist_series(u1 * u2, b, m, env), v2);
            MVector rhs = act_element(
                space, twist_series(u1, b, m, env) * twist_series(u2, b, m, env), v2);
            ++report.trials;
            if (!(lhs == rhs)) {
                report.fail("multiplicativity u1=" + u1.str() + " u2=" + u2.str() +
                                " v=" + v2.str() + " " + describe_env(env),
                            rhs.str(), lhs.str());
                return report;
            }

            // b = 0 leaves every element unchanged
            AlgElement id0 = twist_series(u1, Scalar(0), m, env);
            ++report.trials;
            if (!(id0 == u1)) {
                report.fail("b=0 identity u=" + u1.str(), u1.str(), id0.str());
                return report;
            }
        }
    }
    return report;
}

ProbeReport suite_lemmas(long long trials, std::uint64_t seed) {
    ProbeReport report;
    report.suite = "lemmas";
    report.seed = seed;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        const GridIndex m = rng.index(2);
        const Monomial v0 = rng.monomial(2, 3, 3, {m});
        const long long i = rng.range(1, 4);
        const long long d = v0.total_degree();
        for (int point = 0; point < 3; ++point) {
            ParamEnv env = sample_env(rng, false);
            const ModuleSpace space = ModuleSpace::localized(env, m);
            const Scalar qm = env.q_power(-m.m1 * m.m2);
            const MVector base = MVector::unit(v0);

            // item (1)
            MVector lhs = act_generator(space, Generator::e12(-m),
                                        base.mono_mul(Monomial::variable(m, -i)));
            MVector rhs =
                -apply_lowering(m, base, env).mono_mul(Monomial::variable(m, -i)) +
                base.mono_mul(Monomial::variable(m, -i - 1))
                    .scaled((Scalar(2 * d) - env.mu() - Scalar(i) - Scalar(1)) * Scalar(i) *
                            qm);
            ++report.trials;
            if (!(lhs == rhs)) {
                report.fail("lemma item (1) m=" + m.str() + " i=" + std::to_string(i) +
                                " v0=" + v0.str() + " " + describe_env(env),
                            rhs.str(), lhs.str());
                return report;
            }

            // item (2)
            MVector lhs2 = act_generator(space, Generator::e12(-m),
                                         MVector::unit(Monomial::variable(m, -i)));
            MVector rhs2 = MVector::unit(Monomial::variable(m, -i - 1))
                               .scaled((-env.mu() - Scalar(i) - Scalar(1)) * Scalar(i) * qm);
            ++report.trials;
            if (!(lhs2 == rhs2)) {
                report.fail("lemma item (2) m=" + m.str() + " i=" + std::to_string(i) +
                                " " + describe_env(env),
                            rhs2.str(), lhs2.str());
                return report;
            }

            // item (3): the lowering operator kills degree-d monomials in d+1 steps
            MVector w = base;
            for (long long j = 0; j <= d; ++j) w = apply_lowering(m, w, env);
            ++report.trials;
            if (!w.is_zero()) {
                report.fail("lemma item (3) m=" + m.str() + " v0=" + v0.str() + " " +
                                describe_env(env),
                            "0", w.str());
                return report;
            }

            // operator split: act(e12(-m)) = q^{-m1 m2} mu d/dx_m - L_m
            MVector v = rng.vector_in(space, 2, 3, 2, 2);
            MVector a = act_generator(space, Generator::e12(-m), v);
            MVector c = partial_derivative(v, m).scaled(qm * env.mu()) -
                        apply_lowering(m, v, env);
            ++report.trials;
            if (!(a == c)) {
                report.fail("operator split m=" + m.str() + " v=" + v.str() + " " +
                                describe_env(env),
                            c.str(), a.str());
                return report;
            }

            ProbeReport ladder = quotient_ladder_check(env, m, 3);
            report.trials += ladder.trials;
            if (!ladder.ok()) {
                report.verdict = ladder.verdict;
                report.witness = ladder.witness;
                return report;
            }
        }
    }
    return report;
}

ProbeReport suite_homomorphism(long long trials, std::uint64_t seed) {
    ProbeReport report;
    report.suite = "homomorphism";
    report.seed = seed;
    const SpaceKind kinds[4] = {SpaceKind::Plain, SpaceKind::Localized, SpaceKind::Twisted,
                                SpaceKind::QuotientView};
    for (long long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        const SpaceKind kind = kinds[t % 4];
        const GridIndex m = rng.index(2);
        const Generator x = rng.generator(2);
        const Generator y = rng.generator(2);
        for (int point = 0; point < 3; ++point) {
            ParamEnv env = sample_env(rng, kind == SpaceKind::Twisted);
            ModuleSpace space = [&] {
                switch (kind) {
                    case SpaceKind::Plain: return ModuleSpace::plain(env);
                    case SpaceKind::Localized: return ModuleSpace::localized(env, m);
                    case SpaceKind::Twisted: return ModuleSpace::twisted(env, m);
                    default: return ModuleSpace::quotient(env, m);
                }
            }();
            MVector v = rng.vector_in(space, 2, 3, 2, 2);
            MVector lhs = act_generator(space, x, act_generator(space, y, v)) -
                          act_generator(space, y, act_generator(space, x, v));
            MVector rhs = act_element(space, bracket(x, y, env), v);
            ++report.trials;
            if (!(lhs == rhs)) {
                report.fail("homomorphism space=" + to_string(kind) + " m=" + m.str() +
                                " X=" + x.str() + " Y=" + y.str() + " v=" + v.str() +
                                " " + describe_env(env),
                            rhs.str(), lhs.str());
                return report;
            }
        }
    }
    return report;
}

}  // namespace

ProbeReport run_suite(Suite suite, long long trials, std::uint64_t seed) {
    switch (suite) {
        case Suite::Bracket: return suite_bracket(trials, seed);
        case Suite::Theta: return suite_theta(trials, seed);
        case Suite::Lemmas: return suite_lemmas(trials, seed);
        case Suite::Homomorphism: return suite_homomorphism(trials, seed);
        case Suite::All: break;
    }
    ProbeReport report;
    report.suite = "all";
    report.seed = seed;
    for (Suite s : {Suite::Bracket, Suite::Theta, Suite::Lemmas, Suite::Homomorphism}) {
        ProbeReport sub = run_suite(s, trials, seed);
        report.trials += sub.trials;
        report.chain.push_back(suite_name(s) + ": " +
                               ProbeReport::verdict_name(sub.verdict) + " (" +
                               std::to_string(sub.trials) + " checks)");
        if (!sub.ok()) {
            report.verdict = sub.verdict;
            report.witness = sub.witness;
            return report;
        }
    }
    return report;
}

}  // namespace qtorus
