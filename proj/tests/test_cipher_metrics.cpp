#include "chaoscrypt/cipher_metrics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "chaoscrypt/error.hpp"
#include "test_images.hpp"

using namespace chaoscrypt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

GrayImage make(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> px) {
    return GrayImage(rows, cols, std::move(px));
}

GrayImage invert(const GrayImage& a) {
    GrayImage out = a;
    for (auto& v : out.cells()) v = static_cast<std::uint8_t>(255 - v);
    return out;
}

// Textbook Pearson on explicit sample lists, long double throughout.
std::optional<long double> pearson(const std::vector<long double>& x, const std::vector<long double>& y) {
    const long double n = static_cast<long double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const long double cov = sxy / n - (sx / n) * (sy / n);
    const long double dx = sxx / n - (sx / n) * (sx / n);
    const long double dy = syy / n - (sy / n) * (sy / n);
    if (x.size() < 2 || dx <= 0 || dy <= 0) return std::nullopt;
    return cov / std::sqrt(dx * dy);
}

std::optional<long double> oracle_adjacent(const GrayImage& img, int dr, int dc) {
    std::vector<long double> x, y;
    for (std::size_t r = 0; r + static_cast<std::size_t>(dr) < img.rows(); ++r)
        for (std::size_t c = 0; c + static_cast<std::size_t>(dc) < img.cols(); ++c) {
            x.push_back(img(r, c));
            y.push_back(img(r + static_cast<std::size_t>(dr), c + static_cast<std::size_t>(dc)));
        }
    return pearson(x, y);
}

std::vector<long double> flat(const GrayImage& img) {
    return {img.cells().begin(), img.cells().end()};
}

}  // namespace

TEST_CASE("all metrics agree with brute force on every 2x2 image over {0,128,255}", "[metrics][oracle]") {
    const std::uint8_t levels[3] = {0, 128, 255};
    std::vector<GrayImage> images;
    for (int code = 0; code < 81; ++code) {
        std::vector<std::uint8_t> px(4);
        int rest = code;
        for (auto& p : px) {
            p = levels[rest % 3];
            rest /= 3;
        }
        images.push_back(make(2, 2, px));
    }

    for (const GrayImage& a : images) {
        // Entropy and histogram
        std::map<int, int> counts;
        for (auto v : a.cells()) ++counts[v];
        long double h = 0;
        for (auto [level, n] : counts) h -= (n / 4.0L) * std::log2(n / 4.0L);
        REQUIRE_THAT(entropy(a), WithinAbs(static_cast<double>(h), 1e-12));
        for (auto [level, n] : counts) REQUIRE(histogram(a)[static_cast<std::size_t>(level)] == static_cast<std::uint64_t>(n));

        // Adjacent correlations: H and V have two pairs each, D has one pair
        const std::pair<Adjacency, std::pair<int, int>> dirs[] = {
            {Adjacency::Horizontal, {0, 1}}, {Adjacency::Vertical, {1, 0}}, {Adjacency::Diagonal, {1, 1}}};
        for (auto [dir, step] : dirs) {
            const auto expected = oracle_adjacent(a, step.first, step.second);
            if (expected)
                REQUIRE_THAT(adjacent_correlation(a, dir), WithinAbs(static_cast<double>(*expected), 1e-12));
            else
                REQUIRE_THROWS_AS(adjacent_correlation(a, dir), UndefinedMetricError);
        }

        for (const GrayImage& b : images) {
            long double diff = 0, absdiff = 0, sq = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                const long double d = static_cast<long double>(a.cells()[i]) - b.cells()[i];
                diff += d != 0;
                absdiff += std::fabs(d);
                sq += d * d;
            }
            REQUIRE_THAT(npcr(a, b), WithinAbs(static_cast<double>(100 * diff / 4), 1e-12));
            REQUIRE_THAT(uaci(a, b), WithinAbs(static_cast<double>(100 * absdiff / (4 * 255)), 1e-12));

            long double peak = 0;
            for (auto v : a.cells()) peak = std::max<long double>(peak, v);
            const double p = psnr(a, b);
            if (sq == 0) {
                REQUIRE(std::isinf(p));
                REQUIRE(p > 0);
            } else if (peak == 0) {
                REQUIRE(std::isinf(p));
                REQUIRE(p < 0);
            } else {
                REQUIRE_THAT(p, WithinAbs(static_cast<double>(10 * std::log10(peak * peak / (sq / 4))), 1e-9));
            }

            const auto cross = pearson(flat(a), flat(b));
            if (cross)
                REQUIRE_THAT(cross_correlation(a, b), WithinAbs(static_cast<double>(*cross), 1e-12));
            else
                REQUIRE_THROWS_AS(cross_correlation(a, b), UndefinedMetricError);
        }
    }
}

TEST_CASE("adjacent correlation examples", "[metrics]") {
    GrayImage ramp(4, 256);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 256; ++c) ramp(r, c) = static_cast<std::uint8_t>(c);
    // pairs (x, x+1): exact linear relation, so r = 1
    CHECK_THAT(adjacent_correlation(ramp, Adjacency::Horizontal), WithinAbs(1.0, 1e-12));
    CHECK_THAT(adjacent_correlation(ramp, Adjacency::Horizontal),
               WithinAbs(static_cast<double>(*oracle_adjacent(ramp, 0, 1)), 1e-12));

    // Horizontal neighbours are complements: columns alternate x, 255 - x
    GrayImage anti(16, 2);
    for (std::size_t r = 0; r < 16; ++r) {
        anti(r, 0) = static_cast<std::uint8_t>(r * 13);
        anti(r, 1) = static_cast<std::uint8_t>(255 - r * 13);
    }
    CHECK_THAT(adjacent_correlation(anti, Adjacency::Horizontal), WithinAbs(-1.0, 1e-12));

    const GrayImage flat_img(8, 8);
    CHECK_THROWS_AS(adjacent_correlation(flat_img, Adjacency::Vertical), UndefinedMetricError);
    CHECK_THROWS_AS(adjacent_correlation(GrayImage(1, 1), Adjacency::Horizontal), UndefinedMetricError);
}

TEST_CASE("cross correlation examples", "[metrics]") {
    const GrayImage a = testing::random_image(32, 32, 1);
    CHECK_THAT(cross_correlation(a, a), WithinAbs(1.0, 1e-12));
    CHECK_THAT(cross_correlation(a, invert(a)), WithinAbs(-1.0, 1e-12));
    CHECK_THROWS_AS(cross_correlation(a, GrayImage(32, 32)), UndefinedMetricError);
    CHECK_THROWS_AS(cross_correlation(a, GrayImage(16, 64)), DimensionError);
}

TEST_CASE("npcr and uaci examples", "[metrics]") {
    const GrayImage a = testing::random_image(256, 256, 2);
    CHECK(npcr(a, a) == 0.0);
    CHECK(uaci(a, a) == 0.0);
    GrayImage b = a;
    b(17, 40) ^= 1;
    CHECK_THAT(npcr(a, b), WithinRel(100.0 / 65536, 1e-12));

    GrayImage zeros(16, 16);
    GrayImage full(16, 16);
    for (auto& v : full.cells()) v = 255;
    CHECK(uaci(zeros, full) == 100.0);
    CHECK(npcr(zeros, full) == 100.0);
    CHECK_THROWS_AS(npcr(a, zeros), DimensionError);
    CHECK_THROWS_AS(uaci(a, zeros), DimensionError);
}

TEST_CASE("random image pairs hit the analytic npcr and uaci", "[metrics]") {
    const double npcr_expected = 100.0 * 255.0 / 256.0;
    const double uaci_expected = 100.0 * 65535.0 / (768.0 * 255.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const GrayImage a = testing::random_image(256, 256, 100 + 2 * seed);
        const GrayImage b = testing::random_image(256, 256, 101 + 2 * seed);
        CHECK_THAT(npcr(a, b), WithinAbs(npcr_expected, 0.2));
        CHECK_THAT(uaci(a, b), WithinAbs(uaci_expected, 0.3));
    }
}

TEST_CASE("psnr examples", "[metrics]") {
    GrayImage zeros(8, 8);
    GrayImage full(8, 8);
    for (auto& v : full.cells()) v = 255;
    CHECK_THAT(psnr(full, zeros), WithinAbs(0.0, 1e-12));
    CHECK(psnr(full, full) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(psnr(full, GrayImage(4, 16)), DimensionError);
}

TEST_CASE("entropy examples", "[metrics]") {
    GrayImage constant(16, 16);
    for (auto& v : constant.cells()) v = 42;
    CHECK(entropy(constant) == 0.0);
    CHECK(histogram(constant)[42] == 256);

    GrayImage uniform(16, 16);
    for (std::size_t i = 0; i < 256; ++i) uniform.cells()[i] = static_cast<std::uint8_t>(i);
    CHECK_THAT(entropy(uniform), WithinAbs(8.0, 1e-12));

    GrayImage two(16, 16);
    for (std::size_t i = 0; i < 256; ++i) two.cells()[i] = i % 2 ? 200 : 10;
    CHECK_THAT(entropy(two), WithinAbs(1.0, 1e-12));
}

TEST_CASE("metric ranges and symmetry", "[metrics][property]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const std::size_t side = 3 + rng() % 40;
        const GrayImage a = testing::random_image(side, side, rng());
        GrayImage b = testing::random_image(side, side, rng());
        // mix in a correlated image now and then
        if (i % 3 == 0)
            for (std::size_t k = 0; k < b.size(); ++k) b.cells()[k] = static_cast<std::uint8_t>(a.cells()[k] / 2 + b.cells()[k] / 4);

        const double x = cross_correlation(a, b);
        REQUIRE(x >= -1.0);
        REQUIRE(x <= 1.0);
        REQUIRE(x == cross_correlation(b, a));
        for (auto dir : {Adjacency::Horizontal, Adjacency::Vertical, Adjacency::Diagonal}) {
            const double r = adjacent_correlation(a, dir);
            REQUIRE(r >= -1.0);
            REQUIRE(r <= 1.0);
        }
        REQUIRE(npcr(a, b) == npcr(b, a));
        REQUIRE(uaci(a, b) == uaci(b, a));
        REQUIRE(npcr(a, b) >= 0.0);
        REQUIRE(npcr(a, b) <= 100.0);
        REQUIRE(uaci(a, b) >= 0.0);
        REQUIRE(uaci(a, b) <= 100.0);
        const double e = entropy(a);
        REQUIRE(e >= 0.0);
        REQUIRE(e <= 8.0);
        std::uint64_t total = 0;
        for (auto n : histogram(a)) total += n;
        REQUIRE(total == a.size());
    }
}

TEST_CASE("analyze fills the report and formats it", "[metrics]") {
    const GrayImage plain = testing::natural_image(64, 3);
    const GrayImage cipher = testing::random_image(64, 64, 4);
    const MetricsReport rep = analyze(plain, cipher);
    CHECK(rep.corr_h == adjacent_correlation(cipher, Adjacency::Horizontal));
    CHECK(rep.cross_corr == cross_correlation(plain, cipher));
    CHECK(rep.npcr_pct == npcr(plain, cipher));
    CHECK(rep.entropy_bits == entropy(cipher));
    CHECK(rep.histogram == histogram(cipher));

    const std::string text = format_report(rep, true, false);
    for (const char* name : {"corr_h", "corr_v", "corr_d", "cross_corr", "entropy_bits", "npcr_pct", "uaci_pct", "psnr_db"})
        CHECK(text.find(name) != std::string::npos);
    CHECK(text.find("histogram") == std::string::npos);
    CHECK(format_report(rep, false, true).find("histogram = ") != std::string::npos);

    const MetricsReport same = analyze(plain, plain);
    CHECK(format_report(same, false, false).find("psnr_db = inf") != std::string::npos);
    const MetricsReport flat_cipher = analyze(plain, GrayImage(64, 64));
    CHECK(std::isnan(flat_cipher.corr_h));
    CHECK(format_report(flat_cipher, false, false).find("corr_h = nan") != std::string::npos);
}
