#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "chaoscrypt/pixel_lattice.hpp"

namespace chaoscrypt {

enum class Adjacency { Horizontal, Vertical, Diagonal };

using Histogram = std::array<std::uint64_t, 256>;

/// Pearson correlation over every adjacent pixel pair in one direction.
/// Throws UndefinedMetricError for fewer than two pairs or a zero-variance marginal.
double adjacent_correlation(const GrayImage& img, Adjacency direction);

/// Pearson correlation of the flattened pixel sequences.
double cross_correlation(const GrayImage& a, const GrayImage& b);

/// Percentage of positions where the images differ.
double npcr(const GrayImage& c1, const GrayImage& c2);

/// Mean absolute difference as a percentage of 255.
double uaci(const GrayImage& c1, const GrayImage& c2);

/// 10 log10(peak^2 / MSE) with peak the largest pixel of `plain`; +infinity if identical.
double psnr(const GrayImage& plain, const GrayImage& cipher);

Histogram histogram(const GrayImage& img);

/// Shannon entropy of the gray-level distribution, in bits.
double entropy(const GrayImage& img);

struct MetricsReport {
    double corr_h = 0.0;  // adjacent correlations of the cipher image; NaN when undefined
    double corr_v = 0.0;
    double corr_d = 0.0;
    double cross_corr = 0.0;  // plain vs cipher; NaN when undefined
    double entropy_bits = 0.0;
    double npcr_pct = 0.0;
    double uaci_pct = 0.0;
    double psnr_db = 0.0;
    Histogram histogram{};
};

MetricsReport analyze(const GrayImage& plain, const GrayImage& cipher);

/// One `name = value` line per metric. `aligned` pads names to a common column;
/// the histogram line is only emitted when `with_histogram` is set.
std::string format_report(const MetricsReport& report, bool aligned, bool with_histogram);

}  // namespace chaoscrypt
