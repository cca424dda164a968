#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qtorus/action.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/verify.hpp"

namespace {

using namespace qtorus;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

/// Parameter literal: a rational like "-3/2" or "7", or the bare symbol
/// name matching the parameter slot.
Scalar parse_param(const std::string& text, const std::string& slot) {
    if (text == "q" || text == "mu" || text == "b") {
        if (text != slot)
            throw PreconditionError("symbol '" + text + "' cannot be bound to --" + slot);
        if (slot == "q") return Scalar::sym_q();
        if (slot == "mu") return Scalar::sym_mu();
        return Scalar::sym_b();
    }
    try {
        mpq_class r(text);
        if (r.get_den() == 0)
            throw PreconditionError("invalid value for --" + slot + ": zero denominator");
        r.canonicalize();
        return Scalar(r);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("invalid value for --" + slot + ": '" + text + "'");
    }
}

GridIndex parse_index_pair(const std::string& text, const std::string& flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw PreconditionError("--" + flag + " expects two comma-separated integers");
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw PreconditionError("--" + flag + " expects two comma-separated integers");
    }
}

struct SpaceFlags {
    std::string space = "plain";
    std::string q = "1";
    std::string mu = "0";
    std::string b;
    std::string m;

    void attach(CLI::App* cmd, bool fixed_kind = false) {
        if (!fixed_kind)
            cmd->add_option("--space", space, "plain|localized|twisted|quotient");
        cmd->add_option("--q", q, "parameter q (rational or the symbol q)")->required();
        cmd->add_option("--mu", mu, "parameter mu (rational or the symbol mu)")->required();
        cmd->add_option("--b", b, "parameter b (rational or the symbol b)");
        cmd->add_option("--m", m, "distinguished index M1,M2");
    }

    ParamEnv env() const {
        std::optional<Scalar> bs;
        if (!b.empty()) bs = parse_param(b, "b");
        return ParamEnv(parse_param(q, "q"), parse_param(mu, "mu"), bs);
    }

    ModuleSpace make_space() const {
        ParamEnv e = env();
        if (space == "plain") return ModuleSpace::plain(e);
        if (m.empty())
            throw PreconditionError("--m is required for space '" + space + "'");
        GridIndex mi = parse_index_pair(m, "m");
        if (space == "localized") return ModuleSpace::localized(e, mi);
        if (space == "twisted") {
            if (b.empty()) throw PreconditionError("--b is required for the twisted space");
            return ModuleSpace::twisted(e, mi);
        }
        if (space == "quotient") return ModuleSpace::quotient(e, mi);
        throw PreconditionError("unknown space '" + space + "'");
    }
};

struct OutputFlags {
    bool json = false;
    std::string out;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--json", json, "print the JSON report to stdout");
        cmd->add_option("--out", out, "write the JSON report to a file");
    }

    void emit(const ordered_json& doc, const std::string& human) const {
        if (json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << human;
        if (!out.empty()) {
            std::ofstream f(out);
            f << doc.dump(2) << "\n";
        }
    }
};

int verdict_exit(const ProbeReport& r) {
    switch (r.verdict) {
        case ProbeReport::Verdict::Verified: return kExitOk;
        case ProbeReport::Verdict::Counterexample: return kExitCounterexample;
        case ProbeReport::Verdict::InconclusiveBudget: return kExitInconclusive;
    }
    return kExitUsage;
}

long long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run(int argc, char** argv) {
    CLI::App app{"exact engine for the localized free-field modules of gl2 over a quantum torus"};
    app.require_subcommand(1);

    // act
    auto* act_cmd = app.add_subcommand("act", "apply an algebra word to a vector");
    SpaceFlags act_space;
    act_space.attach(act_cmd);
    std::string act_op, act_vec;
    OutputFlags act_out;
    act_cmd->add_option("--op", act_op, "algebra word, e.g. \"E12(-1,0)\"")->required();
    act_cmd->add_option("--vec", act_vec, "module vector, e.g. \"x[1,0]^3\"")->required();
    act_out.attach(act_cmd);

    // weights
    auto* w_cmd = app.add_subcommand("weights", "Cartan eigenvalues of a weight vector");
    SpaceFlags w_space;
    w_space.attach(w_cmd);
    std::string w_vec;
    OutputFlags w_out;
    w_cmd->add_option("--vec", w_vec, "module vector")->required();
    w_out.attach(w_cmd);

    // singular
    auto* s_cmd = app.add_subcommand("singular", "construct the vector annihilated by e12(-m)");
    std::string s_q = "1", s_mu, s_m, s_n;
    long long s_d = 0;
    OutputFlags s_out;
    s_cmd->add_option("--q", s_q, "parameter q")->required();
    s_cmd->add_option("--mu", s_mu, "integer mu")->required();
    s_cmd->add_option("--m", s_m, "distinguished index M1,M2")->required();
    s_cmd->add_option("--n", s_n, "auxiliary index N1,N2")->required();
    s_cmd->add_option("--d", s_d, "ladder depth d")->required();
    s_out.attach(s_cmd);

    // reduce
    auto* r_cmd = app.add_subcommand("reduce", "drive a quotient vector down to x_m^{-1}");
    std::string r_q, r_mu, r_m, r_vec;
    long long r_budget = 64;
    OutputFlags r_out;
    r_cmd->add_option("--q", r_q, "parameter q")->required();
    r_cmd->add_option("--mu", r_mu, "non-integer mu")->required();
    r_cmd->add_option("--m", r_m, "distinguished index M1,M2")->required();
    r_cmd->add_option("--vec", r_vec, "vector in the quotient view")->required();
    r_cmd->add_option("--budget", r_budget, "maximum reduction steps");
    r_out.attach(r_cmd);

    // probe-span
    auto* ps_cmd = app.add_subcommand("probe-span", "breadth-first span probe");
    SpaceFlags ps_space;
    ps_space.attach(ps_cmd);
    std::string ps_vec, ps_target;
    SpanProbeOptions ps_opt;
    long long ps_max_dim = 200;
    OutputFlags ps_out;
    ps_cmd->add_option("--vec", ps_vec, "seed vector")->required();
    ps_cmd->add_option("--target", ps_target, "target vector")->required();
    ps_cmd->add_option("--window", ps_opt.gen_window, "generator index window");
    ps_cmd->add_option("--degree-cap", ps_opt.degree_cap, "total degree cap");
    ps_cmd->add_option("--support-cap", ps_opt.support_cap, "support window cap");
    ps_cmd->add_option("--max-dim", ps_max_dim, "dimension budget");
    ps_out.attach(ps_cmd);

    // probe-nilp
    auto* pn_cmd = app.add_subcommand("probe-nilp", "local nilpotency probe");
    SpaceFlags pn_space;
    pn_space.attach(pn_cmd);
    std::string pn_op, pn_vec;
    long long pn_budget = 16;
    OutputFlags pn_out;
    pn_cmd->add_option("--op", pn_op, "a single generator, e.g. \"E12(-1,0)\"")->required();
    pn_cmd->add_option("--vec", pn_vec, "start vector")->required();
    pn_cmd->add_option("--budget", pn_budget, "maximum iterations");
    pn_out.attach(pn_cmd);

    // verify
    auto* v_cmd = app.add_subcommand("verify", "seeded identity suites");
    std::string v_suite = "all";
    long long v_trials = 200;
    std::uint64_t v_seed = 0;
    OutputFlags v_out;
    v_cmd->add_option("--suite", v_suite, "bracket|theta|lemmas|homomorphism|all");
    v_cmd->add_option("--trials", v_trials, "trials per suite");
    v_cmd->add_option("--seed", v_seed, "random seed");
    v_out.attach(v_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();

    if (app.got_subcommand(act_cmd)) {
        ModuleSpace space = act_space.make_space();
        AlgElement op = parse_word(act_op, space.env());
        MVector vec = parse_vector(act_vec, space.env());
        MVector result = act_element(space, op, vec);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "act";
        doc["space"] = to_string(space.kind());
        doc["op"] = act_op;
        doc["vec"] = act_vec;
        doc["result"] = result.str();
        act_out.emit(doc, result.str() + "\n");
        return kExitOk;
    }

    if (app.got_subcommand(w_cmd)) {
        ModuleSpace space = w_space.make_space();
        MVector vec = parse_vector(w_vec, space.env());
        WeightValue wv = weight_of(space, vec);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "weights";
        doc["space"] = to_string(space.kind());
        doc["vec"] = w_vec;
        doc["e11"] = wv.e11.str();
        doc["e22"] = wv.e22.str();
        doc["d1"] = wv.d1.str();
        doc["d2"] = wv.d2.str();
        w_out.emit(doc, wv.str() + "\n");
        return kExitOk;
    }

    if (app.got_subcommand(s_cmd)) {
        ParamEnv env(parse_param(s_q, "q"), parse_param(s_mu, "mu"));
        GridIndex m = parse_index_pair(s_m, "m");
        GridIndex n = parse_index_pair(s_n, "n");
        MVector w = singular_vector(env, m, n, s_d);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "singular";
        doc["m"] = m.str();
        doc["n"] = n.str();
        doc["d"] = s_d;
        doc["result"] = w.str();
        doc["annihilation"] = "verified";
        s_out.emit(doc, w.str() + "\nannihilation: verified\n");
        return kExitOk;
    }

    if (app.got_subcommand(r_cmd)) {
        ParamEnv env(parse_param(r_q, "q"), parse_param(r_mu, "mu"));
        GridIndex m = parse_index_pair(r_m, "m");
        MVector vec = parse_vector(r_vec, env);
        ProbeReport report = cyclicity_run(vec, env, m, r_budget);
        report.runtime_ms = elapsed_ms(t0);
        r_out.emit(report.to_json(), report.text());
        return verdict_exit(report);
    }

    if (app.got_subcommand(ps_cmd)) {
        ModuleSpace space = ps_space.make_space();
        MVector seed = parse_vector(ps_vec, space.env());
        MVector target = parse_vector(ps_target, space.env());
        ps_opt.max_dim = static_cast<std::size_t>(ps_max_dim);
        ProbeReport report = span_probe(seed, space, target, ps_opt);
        report.runtime_ms = elapsed_ms(t0);
        ps_out.emit(report.to_json(), report.text());
        return verdict_exit(report);
    }

    if (app.got_subcommand(pn_cmd)) {
        ModuleSpace space = pn_space.make_space();
        AlgElement op = parse_word(pn_op, space.env());
        if (op.terms().size() != 1 || op.terms().begin()->first.size() != 1 ||
            op.terms().begin()->first[0].inverse ||
            !op.terms().begin()->second.is_one())
            throw PreconditionError("--op must be a single generator");
        Generator g = op.terms().begin()->first[0].gen;
        MVector vec = parse_vector(pn_vec, space.env());
        ProbeReport report = nilpotency_probe(space, g, vec, pn_budget);
        report.runtime_ms = elapsed_ms(t0);
        pn_out.emit(report.to_json(), report.text());
        return verdict_exit(report);
    }

    if (app.got_subcommand(v_cmd)) {
        auto suite = suite_from_name(v_suite);
        if (!suite) throw PreconditionError("unknown suite '" + v_suite + "'");
        ProbeReport report = run_suite(*suite, v_trials, v_seed);
        report.runtime_ms = elapsed_ms(t0);
        v_out.emit(report.to_json(), report.text());
        return verdict_exit(report);
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotWeightVectorError& e) {
        std::cerr << e.what() << "\n";
        return kExitCounterexample;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpaceValidityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InverseMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivisionByZeroError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitCounterexample;
    }
}
