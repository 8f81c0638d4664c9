#include "octaspec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "octaspec/numeric.hpp"

namespace octaspec {

namespace {

constexpr double kPmfFloor = 1e-12;

double mean_of(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value() / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs, double mean) {
    if (xs.size() < 2) return 0.0;
    CompensatedSum s;
    for (double x : xs) s.add((x - mean) * (x - mean));
    return s.value() / static_cast<double>(xs.size() - 1);
}

std::vector<double> as_doubles(std::span<const std::uint64_t> counts) {
    return {counts.begin(), counts.end()};
}

double falling(std::uint64_t x, unsigned m) {
    double p = 1.0;
    for (unsigned j = 0; j < m; ++j) {
        if (x <= j) return 0.0;
        p *= static_cast<double>(x - j);
    }
    return p;
}

nlohmann::json real(double x) { return round_significant(x); }

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (double x : row) r.push_back(real(x));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::map<unsigned, double> factorial_moments(std::span<const std::uint64_t> counts, std::span<const unsigned> orders) {
    std::map<unsigned, double> out;
    for (unsigned m : orders) {
        if (m < 1) throw std::invalid_argument("factorial_moments: order must be >= 1");
        std::vector<double> terms;
        terms.reserve(counts.size());
        for (std::uint64_t x : counts) terms.push_back(falling(x, m));
        out[m] = mean_of(terms);
    }
    return out;
}

double poisson_pmf(std::uint64_t k, double lambda) {
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    const auto kd = static_cast<double>(k);
    return std::exp(kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0));
}

double poisson_tv_distance(std::span<const std::uint64_t> counts, double lambda) {
    if (counts.empty()) return 0.0;
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t x : counts) ++hist[x];
    std::uint64_t top = hist.rbegin()->first;
    for (auto k = static_cast<std::uint64_t>(lambda) + 1; poisson_pmf(k, lambda) >= kPmfFloor; ++k) top = std::max(top, k);
    const auto total = static_cast<double>(counts.size());
    CompensatedSum diff;
    for (std::uint64_t k = 0; k <= top; ++k) {
        const auto it = hist.find(k);
        const double empirical = it == hist.end() ? 0.0 : static_cast<double>(it->second) / total;
        double p = poisson_pmf(k, lambda);
        if (p < kPmfFloor) p = 0.0;
        diff.add(std::abs(empirical - p));
    }
    return std::clamp(0.5 * diff.value(), 0.0, 1.0);
}

PoissonFit poisson_fit(std::span<const std::uint64_t> counts, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("poisson_fit: lambda must be >= 0");
    PoissonFit f;
    f.lambda = lambda;
    const std::vector<double> xs = as_doubles(counts);
    const auto trials = static_cast<double>(std::max<std::size_t>(xs.size(), 1));
    f.mean = mean_of(xs);
    f.variance = variance_of(xs, f.mean);
    f.standard_error = std::sqrt(f.variance / trials);
    const double se = f.standard_error > 0.0 ? f.standard_error : std::sqrt(std::max(lambda, f.mean) / trials);
    f.z = se > 0.0 ? (f.mean - lambda) / se : 0.0;
    f.tv = poisson_tv_distance(counts, lambda);

    std::vector<double> pairs;
    pairs.reserve(xs.size());
    for (std::uint64_t x : counts) pairs.push_back(falling(x, 2));
    f.factorial_moment2 = mean_of(pairs);
    f.factorial_moment2_se = std::sqrt(variance_of(pairs, f.factorial_moment2) / trials);
    return f;
}

Matrix cross_covariance(const TrialBatch& batch) {
    const std::size_t c = batch.counts.size();
    std::vector<std::vector<double>> xs;
    std::vector<double> means;
    for (const Counts& col : batch.counts) {
        xs.push_back(as_doubles(col));
        means.push_back(mean_of(xs.back()));
    }
    Matrix cov(c, std::vector<double>(c, 0.0));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const std::size_t t = xs[i].size();
            if (t < 2) continue;
            CompensatedSum s;
            for (std::size_t k = 0; k < t; ++k) s.add((xs[i][k] - means[i]) * (xs[j][k] - means[j]));
            cov[i][j] = s.value() / static_cast<double>(t - 1);
        }
    return cov;
}

Matrix covariance_standard_errors(const TrialBatch& batch) {
    const std::size_t c = batch.counts.size();
    std::vector<std::vector<double>> xs;
    std::vector<double> means;
    for (const Counts& col : batch.counts) {
        xs.push_back(as_doubles(col));
        means.push_back(mean_of(xs.back()));
    }
    Matrix se(c, std::vector<double>(c, 0.0));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<double> products;
            for (std::size_t k = 0; k < xs[i].size(); ++k) products.push_back((xs[i][k] - means[i]) * (xs[j][k] - means[j]));
            if (products.empty()) continue;
            se[i][j] = std::sqrt(variance_of(products, mean_of(products)) / static_cast<double>(products.size()));
        }
    return se;
}

FitReport fit_report(const TrialBatch& batch, std::span<const double> lambdas) {
    if (lambdas.size() != batch.classes.size() || batch.counts.size() != batch.classes.size())
        throw std::invalid_argument("fit_report: one lambda and one count column per class");
    FitReport r;
    for (std::size_t i = 0; i < batch.classes.size(); ++i)
        r.classes.push_back({batch.classes[i], poisson_fit(batch.counts[i], lambdas[i])});
    r.covariance = cross_covariance(batch);
    r.covariance_se = covariance_standard_errors(batch);
    return r;
}

nlohmann::json to_json(const TrialBatch& batch) {
    nlohmann::json classes = nlohmann::json::array();
    for (const Word& w : batch.classes) classes.push_back(to_string(w));
    return {
        {"n", batch.n},
        {"trials", batch.trials},
        {"master_seed", batch.master_seed},
        {"conditioned", batch.conditioned},
        {"classes", std::move(classes)},
        {"counts", batch.counts},
        {"attempts", batch.attempts},
    };
}

std::string to_csv(const TrialBatch& batch) {
    std::ostringstream out;
    out << "trial";
    for (const Word& w : batch.classes) out << ',' << to_string(w);
    out << ",attempts\n";
    for (std::uint64_t t = 0; t < batch.trials; ++t) {
        out << t;
        for (const Counts& col : batch.counts) out << ',' << col[t];
        out << ',' << (t < batch.attempts.size() ? batch.attempts[t] : 0) << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const FitReport& report) {
    nlohmann::json classes = nlohmann::json::array();
    for (const ClassFit& c : report.classes) {
        const PoissonFit& f = c.fit;
        classes.push_back({
            {"canonical", to_string(c.canonical)},
            {"word_length", c.canonical.size()},
            {"lambda", real(f.lambda)},
            {"mean", real(f.mean)},
            {"var", real(f.variance)},
            {"se", real(f.standard_error)},
            {"z", real(f.z)},
            {"tv", real(f.tv)},
            {"fm2", real(f.factorial_moment2)},
            {"fm2_se", real(f.factorial_moment2_se)},
        });
    }
    return {{"classes", std::move(classes)},
            {"covariance", matrix_json(report.covariance)},
            {"covariance_se", matrix_json(report.covariance_se)}};
}

std::string to_csv(const FitReport& report) {
    std::ostringstream out;
    out << "canonical,word_length,lambda,mean,var,z,tv\n";
    for (const ClassFit& c : report.classes) {
        const PoissonFit& f = c.fit;
        out << to_string(c.canonical) << ',' << c.canonical.size() << ',' << format_real(f.lambda) << ','
            << format_real(f.mean) << ',' << format_real(f.variance) << ',' << format_real(f.z) << ','
            << format_real(f.tv) << '\n';
    }
    return out.str();
}

}  // namespace octaspec
