#include "chaoscrypt/chaos_maps.hpp"

#include <cmath>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

std::string_view to_string(MapKind kind) {
    switch (kind) {
        case MapKind::Logistic: return "logistic";
        case MapKind::Tent: return "tent";
        case MapKind::Quadratic: return "quadratic";
        case MapKind::Bernoulli: return "bernoulli";
    }
    return "unknown";
}

MapKind parse_map_kind(std::string_view name) {
    for (MapKind kind : {MapKind::Logistic, MapKind::Tent, MapKind::Quadratic, MapKind::Bernoulli}) {
        if (name == to_string(kind)) return kind;
    }
    throw DomainError("unknown chaotic map '" + std::string(name) + "'");
}

void validate_params(const MapParams& params) {
    if (!(params.mu >= 0.0 && params.mu <= 4.0)) {
        throw DomainError("logistic mu must lie in [0, 4], got " + std::to_string(params.mu));
    }
    if (!(params.mu_tent > 0.0 && params.mu_tent <= 2.0)) {
        throw DomainError("tent mu_tent must lie in (0, 2], got " + std::to_string(params.mu_tent));
    }
    if (!(params.c >= -2.0 && params.c <= 0.25)) {
        throw DomainError("quadratic c must lie in [-2, 0.25], got " + std::to_string(params.c));
    }
}

double quadratic_escape_radius(double c) { return (1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0; }

void validate_point(MapKind kind, double x, const MapParams& params) {
    bool ok = false;
    switch (kind) {
        case MapKind::Logistic:
        case MapKind::Tent: ok = x >= 0.0 && x <= 1.0; break;
        case MapKind::Bernoulli: ok = x >= 0.0 && x < 1.0; break;
        case MapKind::Quadratic: ok = std::abs(x) <= quadratic_escape_radius(params.c); break;
    }
    if (!ok) {
        throw DomainError(std::string(to_string(kind)) + " point " + std::to_string(x) +
                          " is outside the map's domain");
    }
}

namespace {

double step_unchecked(MapKind kind, double x, const MapParams& params) {
    switch (kind) {
        case MapKind::Logistic: return params.mu * x * (1.0 - x);
        case MapKind::Tent: return x < 0.5 ? params.mu_tent * x : params.mu_tent * (1.0 - x);
        case MapKind::Quadratic: return x * x + params.c;
        case MapKind::Bernoulli: return x < 0.5 ? 2.0 * x : 2.0 * x - 1.0;
    }
    return x;
}

}  // namespace

double map_step(MapKind kind, double x, const MapParams& params) {
    validate_params(params);
    validate_point(kind, x, params);
    return step_unchecked(kind, x, params);
}

std::vector<double> iterate_orbit(MapKind kind, double seed, const MapParams& params,
                                  std::size_t count, std::size_t burn_in) {
    validate_params(params);
    // A quadratic seed beyond the escape radius is reported as divergence below.
    if (kind != MapKind::Quadratic) validate_point(kind, seed, params);

    const double radius = quadratic_escape_radius(params.c);
    std::vector<double> points;
    points.reserve(count);
    double x = seed;
    for (std::size_t i = 0; i < burn_in + count; ++i) {
        x = step_unchecked(kind, x, params);
        if (kind == MapKind::Quadratic && !(std::abs(x) <= radius)) {
            throw DivergenceError("quadratic orbit from seed " + std::to_string(seed) +
                                  " escaped at step " + std::to_string(i + 1));
        }
        if (i >= burn_in) points.push_back(x);
    }
    return points;
}

int orbit_bit(MapKind kind, double x) {
    if (kind == MapKind::Quadratic) return x >= 0.0 ? 1 : 0;
    return x >= 0.5 ? 1 : 0;
}

std::uint64_t bernoulli_numerator(double seed) {
    if (!(seed >= 0.0 && seed < 1.0)) {
        throw DomainError("bernoulli seed " + std::to_string(seed) + " is outside [0, 1)");
    }
    auto a = static_cast<std::uint64_t>(seed * static_cast<double>(kBernoulliModulus));
    return a >= kBernoulliModulus ? kBernoulliModulus - 1 : a;
}

std::uint64_t bernoulli_step_exact(std::uint64_t numerator) {
    // a < q < 2^62, so 2a cannot overflow.
    const std::uint64_t doubled = numerator << 1;
    return doubled >= kBernoulliModulus ? doubled - kBernoulliModulus : doubled;
}

double bernoulli_value(std::uint64_t numerator) {
    return static_cast<double>(numerator) / static_cast<double>(kBernoulliModulus);
}

}  // namespace chaoscrypt
