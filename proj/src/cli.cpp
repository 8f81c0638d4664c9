#include "octaspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "octaspec/errors.hpp"
#include "octaspec/numeric.hpp"
#include "octaspec/simulation.hpp"

namespace octaspec {

namespace {

struct Options {
    std::optional<double> a, b;
    std::uint32_t n = 2000;
    std::uint64_t trials = 2000;
    std::optional<std::size_t> max_word_len;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    bool unconditioned = false;
    unsigned threads = 1;
    bool strict_trace = false;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::pair<double, double> interval(const Options& o) {
    if (!o.a || !o.b) throw std::invalid_argument("an interval is required: give a b or --min/--max");
    if (!(*o.a >= 0.0) || !(*o.b >= *o.a)) throw std::invalid_argument("interval needs 0 <= a <= b");
    return {*o.a, *o.b};
}

EnumerationOptions enumeration_options(const Options& o) {
    EnumerationOptions e;
    e.max_word_length = o.max_word_len;
    e.strict_trace = o.strict_trace;
    return e;
}

const char* const kLineHeader = "canonical,word_length,orbit_size,trace_re,trace_im,length,lambda\n";

std::string line_row(const SpectralLine& line) {
    const WordClass& wc = line.word_class;
    std::ostringstream s;
    s << to_string(wc.canonical) << ',' << wc.length << ',' << wc.orbit_size.get_str() << ',' << wc.trace.re.get_str()
      << ',' << wc.trace.im.get_str() << ',' << format_real(wc.translation_length) << ',' << format_real(line.intensity)
      << '\n';
    return s.str();
}

std::string matrices(const Options& o) {
    if (o.format == "csv") {
        std::string s = "letter,a,b,c,d,trace,kind\n";
        for (const Letter& l : kAllLetters) {
            const Mat2& m = letter_matrix(l);
            s += to_string(l) + ',' + to_string(m.a) + ',' + to_string(m.b) + ',' + to_string(m.c) + ',' +
                 to_string(m.d) + ',' + to_string(m.trace()) + ',' + std::string(to_string(classify_isometry(m))) + '\n';
        }
        return s;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const Letter& l : kAllLetters) {
        const Mat2& m = letter_matrix(l);
        arr.push_back({{"letter", to_string(l)},
                       {"matrix", {{to_string(m.a), to_string(m.b)}, {to_string(m.c), to_string(m.d)}}},
                       {"trace", to_string(m.trace())},
                       {"kind", std::string(to_string(classify_isometry(m)))},
                       {"length", round_significant(translation_length(m.trace()))}});
    }
    return dump({{"generators", std::move(arr)}});
}

std::string enumerate(const Options& o) {
    const auto [a, b] = interval(o);
    const IntensityReport r = interval_intensity(a, b, enumeration_options(o));
    if (o.format == "csv") {
        std::string s = kLineHeader;
        for (const SpectralLine& line : r.lines) s += line_row(line);
        return s;
    }
    nlohmann::json j = to_json(r);
    j.erase("total");
    return dump(j);
}

std::string intensity(const Options& o) {
    const auto [a, b] = interval(o);
    const IntensityReport r = interval_intensity(a, b, enumeration_options(o));
    if (o.format == "csv") {
        std::string s = kLineHeader;
        for (const SpectralLine& line : r.lines) s += line_row(line);
        s += "total,,,,,," + format_real(r.total_intensity) + "\n";
        return s;
    }
    return dump(to_json(r));
}

std::string simulate_cmd(const Options& o) {
    const auto [a, b] = interval(o);
    SimulationConfig cfg;
    cfg.n = o.n;
    cfg.trials = o.trials;
    cfg.master_seed = o.seed;
    cfg.conditioned = !o.unconditioned;
    cfg.threads = o.threads;
    for (const SpectralLine& line : interval_intensity(a, b, enumeration_options(o)).lines)
        cfg.classes.push_back(line.word_class.canonical);
    const TrialBatch batch = simulate(cfg);
    return o.format == "csv" ? to_csv(batch) : dump(to_json(batch));
}

std::string verify_cmd(const Options& o, bool& passed) {
    const auto [a, b] = interval(o);
    VerifyConfig cfg;
    cfg.a = a;
    cfg.b = b;
    cfg.n = o.n;
    cfg.trials = o.trials;
    cfg.master_seed = o.seed;
    cfg.conditioned = !o.unconditioned;
    cfg.threads = o.threads;
    cfg.enumeration = enumeration_options(o);
    const VerifyReport r = verify(cfg);
    passed = r.passed;
    return o.format == "csv" ? to_csv(r) : dump(to_json(r));
}

void add_interval(CLI::App* cmd, Options& o) {
    cmd->add_option("a", o.a, "Lower end of the length interval");
    cmd->add_option("b", o.b, "Upper end of the length interval");
    cmd->add_option("--min", o.a, "Lower end of the length interval");
    cmd->add_option("--max", o.b, "Upper end of the length interval");
    cmd->add_option("--max-word-len", o.max_word_len, "Cap on word length (never above the J(r) cap)");
    cmd->add_flag("--strict-trace", o.strict_trace, "Also require |trace| > 2");
}

void add_simulation(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "Number of octahedra")->check(CLI::Range(1u, 100000000u));
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--threads", o.threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);
    cmd->add_flag("--unconditioned", o.unconditioned, "Keep gluings whose dual graph has loops or double edges");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Length spectrum of random octahedral hyperbolic 3-manifolds"};
    app.require_subcommand(1);
    app.fallthrough();  // --out and --format may follow the subcommand
    Options o;
    app.add_option("--out", o.out, "Write the result to this file instead of stdout");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* matrices_cmd = app.add_subcommand("matrices", "The nine generators, their traces and types");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Word classes with length in [a, b]");
    auto* intensity_cmd = app.add_subcommand("intensity", "Poisson intensity of the spectrum on [a, b]");
    auto* simulate_sub = app.add_subcommand("simulate", "Cycle counts of the classes in [a, b] over random gluings");
    auto* verify_sub = app.add_subcommand("verify", "Compare simulated counts with the predicted Poisson laws");
    for (auto* cmd : {enumerate_cmd, intensity_cmd, simulate_sub, verify_sub}) add_interval(cmd, o);
    for (auto* cmd : {simulate_sub, verify_sub}) add_simulation(cmd, o);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    try {
        std::string text;
        bool passed = true;
        if (matrices_cmd->parsed()) text = matrices(o);
        else if (enumerate_cmd->parsed()) text = enumerate(o);
        else if (intensity_cmd->parsed()) text = intensity(o);
        else if (simulate_sub->parsed()) text = simulate_cmd(o);
        else text = verify_cmd(o, passed);

        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot write " + o.out);
            file << text;
        }
        if (!passed) {
            err << "verify: tolerance gates failed\n";
            return kExitVerifyFailed;
        }
        return kExitOk;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }
}

}  // namespace octaspec
