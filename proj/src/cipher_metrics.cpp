#include "chaoscrypt/cipher_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <iomanip>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("images differ in size: " + std::to_string(width(a)) + "x" +
                             std::to_string(height(a)) + " vs " + std::to_string(width(b)) + "x" +
                             std::to_string(height(b)));
    }
}

// Two-pass Pearson correlation over paired samples.
template <typename PairFn>
double pearson(std::size_t n, PairFn pair) {
    if (n < 2) throw UndefinedMetricError("correlation needs at least two samples");
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [x, y] = pair(i);
        sum_x += x;
        sum_y += y;
    }
    const double mean_x = sum_x / static_cast<double>(n);
    const double mean_y = sum_y / static_cast<double>(n);
    double cov = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [x, y] = pair(i);
        const double dx = x - mean_x;
        const double dy = y - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0) {
        throw UndefinedMetricError("correlation is undefined for a constant sequence");
    }
    return std::clamp(cov / (std::sqrt(var_x) * std::sqrt(var_y)), -1.0, 1.0);
}

double or_nan(auto&& fn) {
    try {
        return fn();
    } catch (const UndefinedMetricError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

double adjacent_correlation(const GrayImage& img, Adjacency direction) {
    const std::size_t dr = direction == Adjacency::Horizontal ? 0 : 1;
    const std::size_t dc = direction == Adjacency::Vertical ? 0 : 1;
    if (img.rows() < dr + 1 || img.cols() < dc + 1) {
        throw UndefinedMetricError("image too small to form adjacent pairs");
    }
    const std::size_t rows = img.rows() - dr;
    const std::size_t cols = img.cols() - dc;
    return pearson(rows * cols, [&](std::size_t i) {
        const std::size_t r = i / cols;
        const std::size_t c = i % cols;
        return std::pair<double, double>{img(r, c), img(r + dr, c + dc)};
    });
}

double cross_correlation(const GrayImage& a, const GrayImage& b) {
    require_same_shape(a, b);
    return pearson(a.size(), [&](std::size_t i) {
        return std::pair<double, double>{a.cells()[i], b.cells()[i]};
    });
}

double npcr(const GrayImage& c1, const GrayImage& c2) {
    require_same_shape(c1, c2);
    if (c1.size() == 0) return 0.0;
    std::size_t differ = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) differ += c1.cells()[i] != c2.cells()[i];
    return 100.0 * static_cast<double>(differ) / static_cast<double>(c1.size());
}

double uaci(const GrayImage& c1, const GrayImage& c2) {
    require_same_shape(c1, c2);
    if (c1.size() == 0) return 0.0;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        total += static_cast<std::uint64_t>(std::abs(int{c1.cells()[i]} - int{c2.cells()[i]}));
    }
    return 100.0 * static_cast<double>(total) / (255.0 * static_cast<double>(c1.size()));
}

double psnr(const GrayImage& plain, const GrayImage& cipher) {
    require_same_shape(plain, cipher);
    std::uint64_t squared = 0;
    int peak = 0;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        const int d = int{plain.cells()[i]} - int{cipher.cells()[i]};
        squared += static_cast<std::uint64_t>(d * d);
        peak = std::max(peak, int{plain.cells()[i]});
    }
    if (squared == 0) return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(squared) / static_cast<double>(plain.size());
    return 10.0 * std::log10(static_cast<double>(peak) * peak / mse);
}

Histogram histogram(const GrayImage& img) {
    Histogram counts{};
    for (std::uint8_t v : img.cells()) ++counts[v];
    return counts;
}

double entropy(const GrayImage& img) {
    if (img.size() == 0) return 0.0;
    const Histogram counts = histogram(img);
    const double total = static_cast<double>(img.size());
    double bits = 0.0;
    for (std::uint64_t n : counts) {
        if (n == 0) continue;
        const double p = static_cast<double>(n) / total;
        bits -= p * std::log2(p);
    }
    return bits;
}

MetricsReport analyze(const GrayImage& plain, const GrayImage& cipher) {
    require_same_shape(plain, cipher);
    MetricsReport report;
    report.corr_h = or_nan([&] { return adjacent_correlation(cipher, Adjacency::Horizontal); });
    report.corr_v = or_nan([&] { return adjacent_correlation(cipher, Adjacency::Vertical); });
    report.corr_d = or_nan([&] { return adjacent_correlation(cipher, Adjacency::Diagonal); });
    report.cross_corr = or_nan([&] { return cross_correlation(plain, cipher); });
    report.entropy_bits = entropy(cipher);
    report.npcr_pct = npcr(plain, cipher);
    report.uaci_pct = uaci(plain, cipher);
    report.psnr_db = psnr(plain, cipher);
    report.histogram = histogram(cipher);
    return report;
}

std::string format_report(const MetricsReport& report, bool aligned, bool with_histogram) {
    std::ostringstream out;
    auto line = [&](const char* name, double value) {
        out << (aligned ? std::left : std::right) << std::setw(aligned ? 12 : 0) << name << " = ";
        if (std::isinf(value)) out << (value > 0 ? "inf" : "-inf");
        else if (std::isnan(value)) out << "nan";
        else out << std::setprecision(10) << value;
        out << '\n';
    };
    line("corr_h", report.corr_h);
    line("corr_v", report.corr_v);
    line("corr_d", report.corr_d);
    line("cross_corr", report.cross_corr);
    line("entropy_bits", report.entropy_bits);
    line("npcr_pct", report.npcr_pct);
    line("uaci_pct", report.uaci_pct);
    line("psnr_db", report.psnr_db);
    if (with_histogram) {
        out << (aligned ? std::left : std::right) << std::setw(aligned ? 12 : 0) << "histogram" << " = ";
        for (std::size_t i = 0; i < report.histogram.size(); ++i) {
            out << (i ? "," : "") << report.histogram[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace chaoscrypt
