#include "octaspec/intensity.hpp"

#include <gmpxx.h>

#include "octaspec/numeric.hpp"

namespace octaspec {

namespace {

// Plain JSON integers whenever they fit, decimal strings otherwise.
nlohmann::json integer_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace

double class_intensity(const WordClass& wc) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 3, wc.length);
    denom *= 2 * static_cast<unsigned long>(wc.length);
    return mpq_class(wc.orbit_size, denom).get_d();
}

IntensityReport interval_intensity(double a, double b, const EnumerationOptions& options) {
    Enumeration e = enumerate_classes(a, b, options);
    IntensityReport report;
    report.a = a;
    report.b = b;
    report.word_length_cap = e.word_length_cap;
    CompensatedSum total;
    for (SpectralLine& line : e.lines) {
        line.intensity = class_intensity(line.word_class);
        total.add(line.intensity);
    }
    report.lines = std::move(e.lines);
    report.total_intensity = total.value();
    return report;
}

nlohmann::json line_json(const SpectralLine& line) {
    const WordClass& wc = line.word_class;
    return {
        {"canonical", to_string(wc.canonical)},
        {"word_length", wc.length},
        {"orbit_size", integer_json(wc.orbit_size)},
        {"trace_re", integer_json(wc.trace.re)},
        {"trace_im", integer_json(wc.trace.im)},
        {"length", round_significant(wc.translation_length)},
        {"lambda", round_significant(line.intensity)},
    };
}

nlohmann::json to_json(const IntensityReport& report) {
    nlohmann::json lines = nlohmann::json::array();
    for (const SpectralLine& line : report.lines) lines.push_back(line_json(line));
    return {
        {"interval", {round_significant(report.a), round_significant(report.b)}},
        {"r_max", report.word_length_cap},
        {"lines", std::move(lines)},
        {"total", round_significant(report.total_intensity)},
    };
}

}  // namespace octaspec
