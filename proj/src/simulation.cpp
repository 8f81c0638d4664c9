#include "octaspec/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "octaspec/errors.hpp"
#include "octaspec/numeric.hpp"
#include "octaspec/randcomplex.hpp"

namespace octaspec {

namespace {

constexpr double kTvBound = 0.05;
constexpr double kSigmas = 4.0;

template <class F>
void parallel_for(std::uint64_t count, unsigned threads, F&& body) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

nlohmann::json real(double x) { return round_significant(x); }

// Var[(X)_2] under Poisson(lambda).
double poisson_fm2_se(double lambda, std::uint64_t trials) {
    return std::sqrt((4.0 * lambda * lambda * lambda + 2.0 * lambda * lambda) / static_cast<double>(trials));
}

}  // namespace

TrialBatch simulate(const SimulationConfig& config) {
    if (config.n == 0 || config.trials == 0) throw std::invalid_argument("simulate needs n >= 1 and trials >= 1");
    if (config.conditioned && config.n < 5) throw std::invalid_argument("conditioned sampling needs n >= 5");
    for (const Word& w : config.classes)
        if (w.size() > kMaxCycleLength) throw ResourceError("class longer than the cycle-length guard");

    TrialBatch batch;
    batch.n = config.n;
    batch.trials = config.trials;
    batch.master_seed = config.master_seed;
    batch.conditioned = config.conditioned;
    batch.classes = config.classes;
    batch.counts.assign(config.classes.size(), Counts(config.trials, 0));
    batch.attempts.assign(config.trials, 0);

    parallel_for(config.trials, config.threads, [&](std::uint64_t t) {
        const std::uint64_t seed = trial_seed(config.master_seed, t);
        Gluing g;
        if (config.conditioned) {
            ConditionedSample s = sample_simple_gluing(config.n, seed);
            batch.attempts[t] = s.attempts;
            g = std::move(s.gluing);
        } else {
            g = sample_gluing(config.n, seed);
            batch.attempts[t] = 1;
        }
        const auto counts = class_counts(g, config.classes);
        for (std::size_t c = 0; c < config.classes.size(); ++c) batch.counts[c][t] = counts.at(config.classes[c]);
    });
    return batch;
}

double finite_size_slack(std::uint32_t n) { return 10.0 / static_cast<double>(n); }

VerifyReport verify(const VerifyConfig& config) {
    VerifyReport r;
    r.config = config;
    r.intensity = interval_intensity(config.a, config.b, config.enumeration);
    if (r.intensity.lines.empty()) throw std::invalid_argument("verify: the interval holds no spectral lines");

    SimulationConfig sim;
    sim.n = config.n;
    sim.trials = config.trials;
    sim.master_seed = config.master_seed;
    sim.conditioned = config.conditioned;
    sim.threads = config.threads;
    std::vector<double> lambdas;
    for (const SpectralLine& line : r.intensity.lines) {
        sim.classes.push_back(line.word_class.canonical);
        lambdas.push_back(line.intensity);
    }
    r.batch = simulate(sim);
    r.fit = fit_report(r.batch, lambdas);

    Counts total(config.trials, 0);
    for (const Counts& col : r.batch.counts)
        for (std::uint64_t t = 0; t < config.trials; ++t) total[t] += col[t];
    r.total = poisson_fit(total, r.intensity.total_intensity);

    if (config.conditioned || config.n >= 5) {
        SimulationConfig other = sim;
        other.conditioned = !config.conditioned;
        const TrialBatch companion = simulate(other);
        for (const Counts& col : companion.counts) r.companion_means.push_back(poisson_fit(col, 0.0).mean);
    }

    const double slack = finite_size_slack(config.n);
    auto gate = [&](std::string name, double value, double bound) {
        r.gates.push_back({std::move(name), value, bound, value <= bound});
    };
    for (const ClassFit& c : r.fit.classes) {
        const std::string w = to_string(c.canonical);
        const PoissonFit& f = c.fit;
        gate("mean " + w, std::abs(f.mean - f.lambda), kSigmas * f.standard_error + slack);
        const double fm2_se = f.factorial_moment2_se > 0.0 ? f.factorial_moment2_se : poisson_fm2_se(f.lambda, config.trials);
        gate("fm2 " + w, std::abs(f.factorial_moment2 - f.lambda * f.lambda), kSigmas * fm2_se);
        r.gates.push_back({"tv " + w, f.tv, kTvBound, f.tv < kTvBound});
    }
    for (std::size_t i = 0; i < r.fit.classes.size(); ++i)
        for (std::size_t j = i + 1; j < r.fit.classes.size(); ++j)
            gate("cov " + to_string(r.fit.classes[i].canonical) + " " + to_string(r.fit.classes[j].canonical),
                 std::abs(r.fit.covariance[i][j]), kSigmas * r.fit.covariance_se[i][j]);
    gate("mean total", std::abs(r.total.mean - r.total.lambda), kSigmas * r.total.standard_error + slack);

    r.passed = true;
    for (const Gate& g : r.gates) r.passed = r.passed && g.passed;
    return r;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json fit = to_json(report.fit);
    for (std::size_t i = 0; i < report.companion_means.size(); ++i)
        fit["classes"][i][report.config.conditioned ? "unconditioned_mean" : "conditioned_mean"] =
            real(report.companion_means[i]);

    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : report.gates)
        gates.push_back({{"name", g.name}, {"value", real(g.value)}, {"bound", real(g.bound)}, {"passed", g.passed}});

    std::uint64_t attempts = 0;
    for (std::uint64_t a : report.batch.attempts) attempts += a;

    return {
        {"interval", {real(report.config.a), real(report.config.b)}},
        {"r_max", report.intensity.word_length_cap},
        {"n", report.config.n},
        {"trials", report.config.trials},
        {"master_seed", report.config.master_seed},
        {"conditioned", report.config.conditioned},
        {"acceptance_rate", real(static_cast<double>(report.config.trials) / static_cast<double>(attempts))},
        {"fit", std::move(fit)},
        {"total", {{"lambda", real(report.total.lambda)},
                   {"mean", real(report.total.mean)},
                   {"var", real(report.total.variance)},
                   {"z", real(report.total.z)},
                   {"tv", real(report.total.tv)}}},
        {"gates", std::move(gates)},
        {"passed", report.passed},
    };
}

std::string to_csv(const VerifyReport& report) { return to_csv(report.fit); }

}  // namespace octaspec
