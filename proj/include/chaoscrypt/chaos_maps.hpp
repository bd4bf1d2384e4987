#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace chaoscrypt {

enum class MapKind { Logistic, Tent, Quadratic, Bernoulli };

std::string_view to_string(MapKind kind);
/// Parses "logistic", "tent", "quadratic" or "bernoulli"; throws DomainError otherwise.
MapKind parse_map_kind(std::string_view name);

struct MapParams {
    double mu = 3.9;        // logistic control, [0, 4]
    double mu_tent = 1.75;  // tent slope, (0, 2]
    double c = -1.9;        // quadratic additive constant, [-2, 0.25]
};

/// Throws DomainError if any parameter is outside its range.
void validate_params(const MapParams& params);

/// Repelling fixed point (1 + sqrt(1 - 4c)) / 2 of x^2 + c. Quadratic orbits stay within |x| <= this.
double quadratic_escape_radius(double c);

/// Throws DomainError if x is not a valid point of the map's domain.
void validate_point(MapKind kind, double x, const MapParams& params);

/// One iteration of the map. Validates x and params.
double map_step(MapKind kind, double x, const MapParams& params);

/// Points x_{burn_in+1} .. x_{burn_in+count} of the orbit starting at seed.
/// Throws DivergenceError if a quadratic orbit escapes.
std::vector<double> iterate_orbit(MapKind kind, double seed, const MapParams& params,
                                  std::size_t count, std::size_t burn_in);

/// 1 if x is in the upper half of the map's range: x >= 0.5, or x >= 0 for the quadratic map.
int orbit_bit(MapKind kind, double x);

/// Exact Bernoulli shift on the rationals a / kBernoulliModulus.
///
/// 2x mod 1 on binary floating point shifts out one mantissa bit per step and reaches 0
/// after at most ~1075 steps (typically ~55). Keeping the orbit as a numerator over an odd
/// prime modulus evaluates the same map without that collapse. The modulus is a safe prime
/// with 2 as a primitive root, so every nonzero orbit has period kBernoulliModulus - 1.
inline constexpr std::uint64_t kBernoulliModulus = 4611686018427377339ULL;

std::uint64_t bernoulli_numerator(double seed);
std::uint64_t bernoulli_step_exact(std::uint64_t numerator);
double bernoulli_value(std::uint64_t numerator);

}  // namespace chaoscrypt
