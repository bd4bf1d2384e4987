#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "chaoscrypt/chaos_maps.hpp"
#include "chaoscrypt/pixel_lattice.hpp"

namespace chaoscrypt {

/// Which stages encrypt_image runs: CSDP alone, or block diffusion followed by CSDP.
enum class CipherMode { Csdp, DiffusionCsdp };

std::string_view to_string(CipherMode mode);
CipherMode parse_cipher_mode(std::string_view name);

/// Orbit-hopping schedule: which maps take part and in what order, how many offset-seeded
/// orbits each map keeps, and how many points are drawn from an orbit before moving on.
struct HopConfig {
    std::vector<MapKind> map_order{MapKind::Logistic, MapKind::Bernoulli, MapKind::Tent,
                                   MapKind::Quadratic};
    std::size_t orbits_per_map = 4;
    std::size_t points_per_orbit = 64;
    double seed_offset = 1e-6;
    std::size_t burn_in = 200;
};

struct MapSeeds {
    double logistic = 0.75;
    double tent = 0.4;
    double quadratic = 0.5;
    double bernoulli = 0.5;

    double of(MapKind kind) const;
    double& of(MapKind kind);
};

/// Full secret key shared by both sides.
struct ChaosKey {
    MapParams params;
    MapSeeds seeds;
    HopConfig hop;
    int alpha = 2;
    int beta = 2;
    ScanPattern scan = ScanPattern::Raster;
    CipherMode mode = CipherMode::DiffusionCsdp;
};

/// Throws DomainError naming the first invalid field.
void validate_key(const ChaosKey& key);

/// Direction bits and shift amounts for one CSDP round, sliced from a 20-bit subkey.
struct CsdpRoundParams {
    int p = 0;  // row direction: 1 left, 0 right
    int q = 0;  // column direction: 1 up, 0 down
    int t = 0;  // diagonal direction: 1 up, 0 down
    int r = 0;  // row shift
    int s = 0;  // column shift
    int u = 0;  // diagonal shift
    int hop_salt = 0;

    friend bool operator==(const CsdpRoundParams&, const CsdpRoundParams&) = default;
};

inline constexpr std::uint32_t kSubkeyBits = 20;
inline constexpr std::uint32_t kSubkeyModulus = 1U << kSubkeyBits;

/// Bit layout, LSB first: r[0..2] s[3..5] u[6..8] p[9] q[10] t[11] hop_salt[12..19].
CsdpRoundParams derive_round_params(std::uint32_t subkey);

/// floor(norm(x) * 2^20) mod 2^20, where norm maps the map's orbit range onto [0, 1].
std::uint32_t quantize_subkey(MapKind kind, double x, const MapParams& params);

/// Multi-map orbit-hopping source of control bits and 20-bit subkeys.
///
/// Each map in the hop order owns `orbits_per_map` orbits seeded at x0, x0 + offset,
/// x0 + 2 offset, ..., all burned in at construction. Every draw advances the current orbit
/// one step. After `points_per_orbit` draws the next orbit of the same map takes over; after
/// the last orbit the generator hops to map index (K xor hop_salt) mod m, K being the subkey
/// of the last drawn point. Orbits keep their state across hops.
///
/// With more than one map, construction ends with a cross-map warm-up: the subkeys of all
/// maps' first orbits are folded together and each map's orbits advance by up to 255 extra
/// steps chosen from that fold, so every seed influences every orbit bank.
class KeystreamGenerator {
public:
    explicit KeystreamGenerator(const ChaosKey& key);

    int next_bit();
    std::uint32_t next_subkey();

    /// Same values as `count` consecutive next_subkey() calls.
    std::vector<std::uint32_t> next_subkeys(std::size_t count);
    std::vector<std::uint8_t> next_bits(std::size_t count);

    std::uint64_t draws() const { return draws_; }
    MapKind current_map() const { return maps_[map_index_].kind; }
    std::size_t current_orbit() const { return orbit_index_; }

private:
    struct Orbit {
        double x = 0.0;
        std::uint64_t numerator = 0;  // Bernoulli only
    };
    struct MapBank {
        MapKind kind;
        std::vector<Orbit> orbits;
    };

    void mix_orbit_banks();
    // Advances the current orbit and schedule; returns the new point.
    double draw();
    void advance_orbit(Orbit& orbit, MapKind kind) const;

    MapParams params_;
    HopConfig hop_;
    std::vector<MapBank> maps_;
    double escape_radius_;
    std::size_t map_index_ = 0;
    std::size_t orbit_index_ = 0;
    std::size_t point_index_ = 0;
    std::uint64_t draws_ = 0;
};

}  // namespace chaoscrypt
