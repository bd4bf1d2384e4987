#include "chaoscrypt/keystream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

std::string_view to_string(CipherMode mode) {
    return mode == CipherMode::Csdp ? "csdp" : "diffusion+csdp";
}

CipherMode parse_cipher_mode(std::string_view name) {
    if (name == "csdp") return CipherMode::Csdp;
    if (name == "diffusion+csdp") return CipherMode::DiffusionCsdp;
    throw DomainError("unknown cipher mode '" + std::string(name) + "'");
}

double MapSeeds::of(MapKind kind) const {
    switch (kind) {
        case MapKind::Logistic: return logistic;
        case MapKind::Tent: return tent;
        case MapKind::Quadratic: return quadratic;
        case MapKind::Bernoulli: return bernoulli;
    }
    return logistic;
}

double& MapSeeds::of(MapKind kind) {
    switch (kind) {
        case MapKind::Logistic: return logistic;
        case MapKind::Tent: return tent;
        case MapKind::Quadratic: return quadratic;
        case MapKind::Bernoulli: return bernoulli;
    }
    return logistic;
}

void validate_key(const ChaosKey& key) {
    validate_params(key.params);
    const HopConfig& hop = key.hop;
    if (hop.map_order.empty() || hop.map_order.size() > 4) {
        throw DomainError("maps must list between 1 and 4 chaotic maps");
    }
    for (std::size_t i = 0; i < hop.map_order.size(); ++i) {
        if (std::count(hop.map_order.begin(), hop.map_order.end(), hop.map_order[i]) > 1) {
            throw DomainError("maps lists '" + std::string(to_string(hop.map_order[i])) + "' twice");
        }
    }
    if (hop.orbits_per_map < 1) throw DomainError("orbits must be at least 1");
    if (hop.points_per_orbit < 1) throw DomainError("points must be at least 1");

    double smallest_seed = std::numeric_limits<double>::infinity();
    for (MapKind kind : hop.map_order) {
        const double seed = key.seeds.of(kind);
        validate_point(kind, seed, key.params);
        if (seed != 0.0) smallest_seed = std::min(smallest_seed, std::abs(seed));
    }
    if (!(hop.seed_offset > 0.0 && hop.seed_offset < smallest_seed)) {
        throw DomainError("offset must be positive and smaller than every nonzero seed, got " +
                          std::to_string(hop.seed_offset));
    }
    if (key.alpha < 0 || key.alpha > 7) throw DomainError("alpha must lie in [0, 7]");
    if (key.beta < 0 || key.beta > 7) throw DomainError("beta must lie in [0, 7]");
}

CsdpRoundParams derive_round_params(std::uint32_t subkey) {
    if (subkey >= kSubkeyModulus) {
        throw DomainError("subkey " + std::to_string(subkey) + " exceeds 20 bits");
    }
    CsdpRoundParams rp;
    rp.r = static_cast<int>(subkey & 0x7U);
    rp.s = static_cast<int>((subkey >> 3) & 0x7U);
    rp.u = static_cast<int>((subkey >> 6) & 0x7U);
    rp.p = static_cast<int>((subkey >> 9) & 0x1U);
    rp.q = static_cast<int>((subkey >> 10) & 0x1U);
    rp.t = static_cast<int>((subkey >> 11) & 0x1U);
    rp.hop_salt = static_cast<int>((subkey >> 12) & 0xFFU);
    return rp;
}

std::uint32_t quantize_subkey(MapKind kind, double x, const MapParams& params) {
    double norm = x;
    if (kind == MapKind::Quadratic) {
        const double radius = quadratic_escape_radius(params.c);
        norm = (x + radius) / (2.0 * radius);
    }
    norm = std::clamp(norm, 0.0, 1.0);
    const auto scaled = static_cast<std::uint64_t>(std::floor(norm * kSubkeyModulus));
    return static_cast<std::uint32_t>(scaled % kSubkeyModulus);
}

KeystreamGenerator::KeystreamGenerator(const ChaosKey& key)
    : params_(key.params), hop_(key.hop), escape_radius_(quadratic_escape_radius(key.params.c)) {
    validate_key(key);
    for (MapKind kind : hop_.map_order) {
        MapBank bank{kind, {}};
        for (std::size_t j = 0; j < hop_.orbits_per_map; ++j) {
            const double seed = key.seeds.of(kind) + static_cast<double>(j) * hop_.seed_offset;
            try {
                validate_point(kind, seed, params_);
            } catch (const DomainError& e) {
                throw DomainError("orbit " + std::to_string(j) + " of the " +
                                  std::string(to_string(kind)) +
                                  " map: offset pushes its seed out of the domain (" + e.what() + ")");
            }
            Orbit orbit{seed, kind == MapKind::Bernoulli ? bernoulli_numerator(seed) : 0};
            for (std::size_t i = 0; i < hop_.burn_in; ++i) advance_orbit(orbit, kind);
            bank.orbits.push_back(orbit);
        }
        maps_.push_back(std::move(bank));
    }
    mix_orbit_banks();
}

void KeystreamGenerator::mix_orbit_banks() {
    if (maps_.size() < 2) return;
    // Fold every map's post-burn-in subkey into one word, then advance each map's orbits by a
    // map-specific slice of it. A change to any seed thereby shifts every orbit bank.
    std::uint32_t mix = 0;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const std::uint32_t k = quantize_subkey(maps_[i].kind, maps_[i].orbits.front().x, params_);
        mix ^= ((k << (5 * i)) | (k >> (kSubkeyBits - 5 * i))) & (kSubkeyModulus - 1);
    }
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const std::size_t extra = (mix >> (3 * i)) & 0xFFU;
        for (Orbit& orbit : maps_[i].orbits) {
            for (std::size_t step = 0; step < extra; ++step) advance_orbit(orbit, maps_[i].kind);
        }
    }
}

void KeystreamGenerator::advance_orbit(Orbit& orbit, MapKind kind) const {
    switch (kind) {
        case MapKind::Logistic: orbit.x = params_.mu * orbit.x * (1.0 - orbit.x); break;
        case MapKind::Tent:
            orbit.x = orbit.x < 0.5 ? params_.mu_tent * orbit.x : params_.mu_tent * (1.0 - orbit.x);
            break;
        case MapKind::Quadratic:
            orbit.x = orbit.x * orbit.x + params_.c;
            if (!(std::abs(orbit.x) <= escape_radius_)) {
                throw DivergenceError("quadratic keystream orbit escaped its bounded region");
            }
            break;
        case MapKind::Bernoulli:
            orbit.numerator = bernoulli_step_exact(orbit.numerator);
            orbit.x = bernoulli_value(orbit.numerator);
            break;
    }
}

double KeystreamGenerator::draw() {
    MapBank& bank = maps_[map_index_];
    Orbit& orbit = bank.orbits[orbit_index_];
    advance_orbit(orbit, bank.kind);
    const double x = orbit.x;
    ++draws_;

    if (++point_index_ == hop_.points_per_orbit) {
        point_index_ = 0;
        if (++orbit_index_ == hop_.orbits_per_map) {
            orbit_index_ = 0;
            const std::uint32_t subkey = quantize_subkey(bank.kind, x, params_);
            const std::uint32_t salt = (subkey >> 12) & 0xFFU;
            map_index_ = (subkey ^ salt) % maps_.size();
        }
    }
    return x;
}

int KeystreamGenerator::next_bit() {
    const MapKind kind = current_map();
    return orbit_bit(kind, draw());
}

std::uint32_t KeystreamGenerator::next_subkey() {
    const MapKind kind = current_map();
    return quantize_subkey(kind, draw(), params_);
}

std::vector<std::uint32_t> KeystreamGenerator::next_subkeys(std::size_t count) {
    std::vector<std::uint32_t> keys(count);
    for (auto& k : keys) k = next_subkey();
    return keys;
}

std::vector<std::uint8_t> KeystreamGenerator::next_bits(std::size_t count) {
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(next_bit());
    return bits;
}

}  // namespace chaoscrypt
