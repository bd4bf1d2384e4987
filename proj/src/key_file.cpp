#include "chaoscrypt/key_file.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "chaoscrypt/error.hpp"
#include "chaoscrypt/pgm_io.hpp"

namespace chaoscrypt {

namespace {

constexpr std::array<std::string_view, 16> kFields = {
    "mu",     "mu_tent", "c",      "seed_logistic", "seed_tent", "seed_quadratic",
    "seed_bernoulli", "maps", "orbits", "points", "offset", "burn_in",
    "alpha",  "beta",    "scan",   "mode"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

double parse_real(std::string_view name, std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError("key file: field '" + std::string(name) + "' is not a real number: '" +
                          std::string(text) + "'");
    }
    return value;
}

long long parse_integer(std::string_view name, std::string_view text) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError("key file: field '" + std::string(name) + "' is not an integer: '" +
                          std::string(text) + "'");
    }
    return value;
}

std::size_t parse_count(std::string_view name, std::string_view text) {
    const long long value = parse_integer(name, text);
    if (value < 0) throw DomainError("key file: field '" + std::string(name) + "' must be non-negative");
    return static_cast<std::size_t>(value);
}

}  // namespace

ChaosKey parse_keyfile(std::string_view text) {
    std::map<std::string, std::string, std::less<>> fields;
    std::size_t line_no = 0;
    std::istringstream lines{std::string(text)};
    for (std::string raw; std::getline(lines, raw);) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("key file line " + std::to_string(line_no) + ": expected 'name = value'");
        }
        const std::string name(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (std::find(kFields.begin(), kFields.end(), name) == kFields.end()) {
            throw FormatError("key file line " + std::to_string(line_no) + ": unknown field '" + name + "'");
        }
        if (!fields.emplace(name, value).second) {
            throw FormatError("key file line " + std::to_string(line_no) + ": duplicate field '" + name + "'");
        }
    }
    for (std::string_view name : kFields) {
        if (!fields.contains(name)) throw FormatError("key file: missing field '" + std::string(name) + "'");
    }

    auto get = [&](std::string_view name) -> const std::string& { return fields.find(name)->second; };
    ChaosKey key;
    key.params.mu = parse_real("mu", get("mu"));
    key.params.mu_tent = parse_real("mu_tent", get("mu_tent"));
    key.params.c = parse_real("c", get("c"));
    key.seeds.logistic = parse_real("seed_logistic", get("seed_logistic"));
    key.seeds.tent = parse_real("seed_tent", get("seed_tent"));
    key.seeds.quadratic = parse_real("seed_quadratic", get("seed_quadratic"));
    key.seeds.bernoulli = parse_real("seed_bernoulli", get("seed_bernoulli"));

    key.hop.map_order.clear();
    std::string_view maps = get("maps");
    while (!maps.empty()) {
        const auto comma = maps.find(',');
        key.hop.map_order.push_back(parse_map_kind(trim(maps.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        maps.remove_prefix(comma + 1);
    }
    key.hop.orbits_per_map = parse_count("orbits", get("orbits"));
    key.hop.points_per_orbit = parse_count("points", get("points"));
    key.hop.seed_offset = parse_real("offset", get("offset"));
    key.hop.burn_in = parse_count("burn_in", get("burn_in"));
    key.alpha = static_cast<int>(parse_integer("alpha", get("alpha")));
    key.beta = static_cast<int>(parse_integer("beta", get("beta")));
    key.scan = parse_scan_pattern(get("scan"));
    key.mode = parse_cipher_mode(get("mode"));

    validate_key(key);
    return key;
}

std::string format_keyfile(const ChaosKey& key) {
    validate_key(key);
    std::ostringstream out;
    out << "# chaoscrypt key\n";
    out << "mu = " << format_real(key.params.mu) << '\n';
    out << "mu_tent = " << format_real(key.params.mu_tent) << '\n';
    out << "c = " << format_real(key.params.c) << '\n';
    out << "seed_logistic = " << format_real(key.seeds.logistic) << '\n';
    out << "seed_tent = " << format_real(key.seeds.tent) << '\n';
    out << "seed_quadratic = " << format_real(key.seeds.quadratic) << '\n';
    out << "seed_bernoulli = " << format_real(key.seeds.bernoulli) << '\n';
    out << "maps = ";
    for (std::size_t i = 0; i < key.hop.map_order.size(); ++i) {
        out << (i ? "," : "") << to_string(key.hop.map_order[i]);
    }
    out << '\n';
    out << "orbits = " << key.hop.orbits_per_map << '\n';
    out << "points = " << key.hop.points_per_orbit << '\n';
    out << "offset = " << format_real(key.hop.seed_offset) << '\n';
    out << "burn_in = " << key.hop.burn_in << '\n';
    out << "alpha = " << key.alpha << '\n';
    out << "beta = " << key.beta << '\n';
    out << "scan = " << to_string(key.scan) << '\n';
    out << "mode = " << to_string(key.mode) << '\n';
    return out.str();
}

ChaosKey read_keyfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open key file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_keyfile(text.str());
}

void write_keyfile(const ChaosKey& key, const std::filesystem::path& path) {
    write_file_atomically(path, format_keyfile(key));
}

}  // namespace chaoscrypt
