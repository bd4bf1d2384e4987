#include "chaoscrypt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "chaoscrypt/cipher_metrics.hpp"
#include "chaoscrypt/csdp_cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/key_file.hpp"
#include "chaoscrypt/pgm_io.hpp"

namespace chaoscrypt {

namespace {

struct KeygenOptions {
    std::string out;
    std::optional<double> mu, mu_tent, c;
    std::optional<double> seed_logistic, seed_tent, seed_quadratic, seed_bernoulli;
    std::optional<std::string> maps;
    std::optional<std::size_t> orbits, points, burn_in;
    std::optional<double> offset;
    std::optional<int> alpha, beta;
    std::optional<std::string> scan, mode;
};

struct CipherOptions {
    std::string in, key, out;
    std::optional<std::string> scan, mode;
};

struct AnalyzeOptions {
    std::string plain, cipher;
    bool machine = false;
};

ChaosKey keygen_key(const KeygenOptions& o) {
    ChaosKey key;
    if (o.mu) key.params.mu = *o.mu;
    if (o.mu_tent) key.params.mu_tent = *o.mu_tent;
    if (o.c) key.params.c = *o.c;
    if (o.seed_logistic) key.seeds.logistic = *o.seed_logistic;
    if (o.seed_tent) key.seeds.tent = *o.seed_tent;
    if (o.seed_quadratic) key.seeds.quadratic = *o.seed_quadratic;
    if (o.seed_bernoulli) key.seeds.bernoulli = *o.seed_bernoulli;
    if (o.maps) {
        key.hop.map_order.clear();
        std::string_view rest = *o.maps;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            key.hop.map_order.push_back(parse_map_kind(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    if (o.orbits) key.hop.orbits_per_map = *o.orbits;
    if (o.points) key.hop.points_per_orbit = *o.points;
    if (o.offset) key.hop.seed_offset = *o.offset;
    if (o.burn_in) key.hop.burn_in = *o.burn_in;
    if (o.alpha) key.alpha = *o.alpha;
    if (o.beta) key.beta = *o.beta;
    if (o.scan) key.scan = parse_scan_pattern(*o.scan);
    if (o.mode) key.mode = parse_cipher_mode(*o.mode);
    validate_key(key);
    return key;
}

ChaosKey cipher_key(const CipherOptions& o) {
    ChaosKey key = read_keyfile(o.key);
    if (o.scan) key.scan = parse_scan_pattern(*o.scan);
    if (o.mode) key.mode = parse_cipher_mode(*o.mode);
    return key;
}

void add_cipher_options(CLI::App& cmd, CipherOptions& o) {
    cmd.add_option("--in", o.in, "Input PGM image")->required();
    cmd.add_option("--key", o.key, "Key file")->required();
    cmd.add_option("--out", o.out, "Output PGM image")->required();
    cmd.add_option("--scan", o.scan, "Override scan pattern: raster | zigzag");
    cmd.add_option("--mode", o.mode, "Override cipher mode: csdp | diffusion+csdp");
}

std::string first_line(std::string text) {
    text.erase(std::find(text.begin(), text.end(), '\n'), text.end());
    return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chaotic-map grayscale image cipher", "chaoscrypt"};
    app.require_subcommand(1);

    KeygenOptions kg;
    CLI::App* keygen = app.add_subcommand("keygen", "Write a key file from defaults plus overrides");
    keygen->add_option("--out", kg.out, "Key file to write")->required();
    keygen->add_option("--mu", kg.mu, "Logistic control parameter");
    keygen->add_option("--mu-tent", kg.mu_tent, "Tent slope");
    keygen->add_option("--c", kg.c, "Quadratic constant");
    keygen->add_option("--seed-logistic", kg.seed_logistic);
    keygen->add_option("--seed-tent", kg.seed_tent);
    keygen->add_option("--seed-quadratic", kg.seed_quadratic);
    keygen->add_option("--seed-bernoulli", kg.seed_bernoulli);
    keygen->add_option("--maps", kg.maps, "Comma-separated hop order");
    keygen->add_option("--orbits", kg.orbits, "Orbits per map");
    keygen->add_option("--points", kg.points, "Points drawn per orbit");
    keygen->add_option("--offset", kg.offset, "Seed offset between orbits");
    keygen->add_option("--burn-in", kg.burn_in, "Discarded iterations per orbit");
    keygen->add_option("--alpha", kg.alpha, "Row shift offset, 0..7");
    keygen->add_option("--beta", kg.beta, "Column shift offset, 0..7");
    keygen->add_option("--scan", kg.scan, "raster | zigzag");
    keygen->add_option("--mode", kg.mode, "csdp | diffusion+csdp");

    CipherOptions enc;
    CipherOptions dec;
    add_cipher_options(*app.add_subcommand("encrypt", "Encrypt a PGM image"), enc);
    add_cipher_options(*app.add_subcommand("decrypt", "Decrypt a PGM image"), dec);

    AnalyzeOptions an;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report cipher statistics for a plain/cipher pair");
    analyze_cmd->add_option("--plain", an.plain, "Plain PGM image")->required();
    analyze_cmd->add_option("--cipher", an.cipher, "Cipher PGM image")->required();
    analyze_cmd->add_flag("--machine", an.machine, "Unpadded name = value lines, including the histogram");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "chaoscrypt: usage error: " << first_line(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        if (keygen->parsed()) {
            write_keyfile(keygen_key(kg), kg.out);
        } else if (app.got_subcommand("encrypt")) {
            const ChaosKey key = cipher_key(enc);
            write_pgm(encrypt_image(read_pgm(std::filesystem::path(enc.in)), key), enc.out);
        } else if (app.got_subcommand("decrypt")) {
            const ChaosKey key = cipher_key(dec);
            write_pgm(decrypt_image(read_pgm(std::filesystem::path(dec.in)), key), dec.out);
        } else if (analyze_cmd->parsed()) {
            const GrayImage plain = read_pgm(std::filesystem::path(an.plain));
            const GrayImage cipher = read_pgm(std::filesystem::path(an.cipher));
            out << format_report(analyze(plain, cipher), !an.machine, an.machine);
        }
    } catch (const FormatError& e) {
        err << "chaoscrypt: format error: " << first_line(e.what()) << '\n';
        return kExitFormat;
    } catch (const DimensionError& e) {
        err << "chaoscrypt: dimension error: " << first_line(e.what()) << '\n';
        return kExitDimension;
    } catch (const DivergenceError& e) {
        err << "chaoscrypt: invalid key: " << first_line(e.what()) << '\n';
        return kExitDomain;
    } catch (const DomainError& e) {
        err << "chaoscrypt: invalid key: " << first_line(e.what()) << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "chaoscrypt: i/o error: " << first_line(e.what()) << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "chaoscrypt: internal error: " << first_line(e.what()) << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace chaoscrypt
