#pragma once

// Poisson-limit diagnostics for Monte-Carlo cycle counts.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "octaspec/exactalg.hpp"

namespace octaspec {

using Counts = std::vector<std::uint64_t>;

// Sample mean of X(X-1)...(X-m+1) for each requested order m >= 1.
std::map<unsigned, double> factorial_moments(std::span<const std::uint64_t> counts, std::span<const unsigned> orders);

double poisson_pmf(std::uint64_t k, double lambda);

// Total variation distance between the empirical law of `counts` and
// Poisson(lambda), over the support where either is at least 1e-12.
double poisson_tv_distance(std::span<const std::uint64_t> counts, double lambda);

struct PoissonFit {
    double lambda = 0.0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    double standard_error = 0.0;
    double z = 0.0;
    double tv = 0.0;
    double factorial_moment2 = 0.0;
    double factorial_moment2_se = 0.0;
};

// z = (mean - lambda) / SE with SE = sqrt(variance / trials). When the
// sample variance is zero the Poisson value sqrt(max(lambda, mean) / trials)
// stands in; z is 0 when that is zero too.
PoissonFit poisson_fit(std::span<const std::uint64_t> counts, double lambda);

struct TrialBatch {
    std::uint32_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    bool conditioned = true;
    std::vector<Word> classes;          // canonical words
    std::vector<Counts> counts;         // counts[class][trial]
    std::vector<std::uint64_t> attempts;  // gluings drawn per trial
};

using Matrix = std::vector<std::vector<double>>;

// Sample covariance of the per-trial counts of every pair of classes.
Matrix cross_covariance(const TrialBatch& batch);
// Standard error of each entry, sqrt(Var[(X - mean X)(Y - mean Y)] / trials).
Matrix covariance_standard_errors(const TrialBatch& batch);

struct ClassFit {
    Word canonical;
    PoissonFit fit;
};

struct FitReport {
    std::vector<ClassFit> classes;
    Matrix covariance;
    Matrix covariance_se;
};

// `lambdas` is parallel to batch.classes.
FitReport fit_report(const TrialBatch& batch, std::span<const double> lambdas);

nlohmann::json to_json(const TrialBatch& batch);
std::string to_csv(const TrialBatch& batch);
nlohmann::json to_json(const FitReport& report);
// One row per class: canonical,word_length,lambda,mean,var,z,tv.
std::string to_csv(const FitReport& report);

}  // namespace octaspec
