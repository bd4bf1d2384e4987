#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "chaoscrypt/keystream.hpp"

namespace chaoscrypt {

/// Text key format: `# comment` lines and blank lines are ignored, every other line is
/// `name = value`. All of these names must appear exactly once:
///
///   mu mu_tent c seed_logistic seed_tent seed_quadratic seed_bernoulli
///   maps orbits points offset burn_in alpha beta scan mode
///
/// `maps` is a comma-separated hop order, e.g. `logistic,bernoulli,tent,quadratic`.
/// Reals are written with 17 significant digits so they parse back bit-identically.
ChaosKey parse_keyfile(std::string_view text);
std::string format_keyfile(const ChaosKey& key);

ChaosKey read_keyfile(const std::filesystem::path& path);
void write_keyfile(const ChaosKey& key, const std::filesystem::path& path);

}  // namespace chaoscrypt
