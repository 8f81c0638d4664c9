#pragma once

// Monte-Carlo trials of the gluing model and the end-to-end check of the
// predicted Poisson intensities.

#include <optional>
#include <string>

#include "octaspec/intensity.hpp"
#include "octaspec/stats.hpp"

namespace octaspec {

struct SimulationConfig {
    std::uint32_t n = 2000;
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 1;
    bool conditioned = true;
    unsigned threads = 1;
    std::vector<Word> classes;  // canonical words
};

// Trial i uses trial_seed(master_seed, i) alone, so the batch does not
// depend on the thread count.
TrialBatch simulate(const SimulationConfig& config);

struct Gate {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool passed = false;
};

struct VerifyConfig {
    double a = 0.0;
    double b = 0.0;
    std::uint32_t n = 2000;
    std::uint64_t trials = 2000;
    std::uint64_t master_seed = 1;
    bool conditioned = true;
    unsigned threads = 1;
    EnumerationOptions enumeration;
};

struct VerifyReport {
    VerifyConfig config;
    IntensityReport intensity;
    TrialBatch batch;
    FitReport fit;
    PoissonFit total;  // summed counts of every class in the interval
    // Means from the same seeds in the other sampling mode (conditioned vs
    // not); empty when that mode is unavailable (n < 5).
    std::vector<double> companion_means;
    std::vector<Gate> gates;
    bool passed = false;
};

// Slack added to every mean comparison for finite-n bias.
double finite_size_slack(std::uint32_t n);

// Gates: per class mean within 4 SE + 10/n of lambda, second factorial
// moment within 4 SE of lambda^2, TV < 0.05; pairwise covariances within
// 4 SE of 0; the interval total's mean within 4 SE + 10/n.
VerifyReport verify(const VerifyConfig& config);

nlohmann::json to_json(const VerifyReport& report);
std::string to_csv(const VerifyReport& report);

}  // namespace octaspec
