#pragma once

// Poisson intensity of the limiting length spectrum over an interval.

#include <json.hpp>

#include "octaspec/words.hpp"

namespace octaspec {

struct IntensityReport {
    double a = 0.0;
    double b = 0.0;
    std::vector<SpectralLine> lines;  // ordered by (length, canonical word)
    double total_intensity = 0.0;
    std::size_t word_length_cap = 0;
};

// |[w]| / (2 |w| 3^|w|).
double class_intensity(const WordClass& wc);

IntensityReport interval_intensity(double a, double b, const EnumerationOptions& options = {});

nlohmann::json line_json(const SpectralLine& line);
nlohmann::json to_json(const IntensityReport& report);

}  // namespace octaspec
