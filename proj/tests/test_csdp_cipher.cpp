#include "chaoscrypt/csdp_cipher.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "test_images.hpp"

using namespace chaoscrypt;

namespace {

BitMatrix8 random_matrix(std::mt19937& rng) {
    std::array<std::uint8_t, 8> rows{};
    for (auto& r : rows) r = static_cast<std::uint8_t>(rng());
    return BitMatrix8(rows);
}

CsdpRoundParams random_params(std::mt19937& rng) {
    return derive_round_params(rng() % kSubkeyModulus);
}

int popcount(const BitMatrix8& m) {
    int n = 0;
    for (auto row : m.rows()) n += std::popcount(row);
    return n;
}

// Diagonal stage computed cell by cell: main diagonal d = c - r, cells ordered by row.
BitMatrix8 oracle_diagonal_shift(const BitMatrix8& m, int t, int u) {
    BitMatrix8 out;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const int d = c - r;
            const int len = 8 - std::abs(d);
            const int first_row = d < 0 ? -d : 0;
            const int pos = r - first_row;
            const int shift = t == 1 ? -u : u;
            const int new_pos = ((pos + shift) % len + len) % len;
            const int nr = first_row + new_pos;
            out.set_bit(static_cast<std::size_t>(nr), static_cast<std::size_t>(nr + d), m.bit(r, c));
        }
    }
    return out;
}

ScanSignal random_signal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ScanSignal sig;
    sig.bytes.resize(n);
    for (auto& b : sig.bytes) b = static_cast<std::uint8_t>(rng());
    sig.width = n;
    sig.height = 1;
    return sig;
}

}  // namespace

TEST_CASE("bytes map to bit-matrix rows MSB first", "[csdp]") {
    const std::array<std::uint8_t, 8> group{0xA5, 0, 0, 0, 0, 0, 0, 0};
    const BitMatrix8 m = bytes_to_bitmatrix(group);
    const int expected[8] = {1, 0, 1, 0, 0, 1, 0, 1};
    for (std::size_t c = 0; c < 8; ++c) CHECK(m.bit(0, c) == expected[c]);

    CHECK(bytes_to_bitmatrix(std::array<std::uint8_t, 8>{}) == BitMatrix8{});
    CHECK_THROWS_AS(bytes_to_bitmatrix(std::vector<std::uint8_t>(7)), DimensionError);
}

TEST_CASE("bit matrix round-trips bytes", "[csdp][property]") {
    std::mt19937 rng(1);
    for (int i = 0; i < 1000; ++i) {
        std::array<std::uint8_t, 8> group{};
        for (auto& b : group) b = static_cast<std::uint8_t>(rng());
        REQUIRE(bitmatrix_to_bytes(bytes_to_bitmatrix(group)) == group);
    }
}

TEST_CASE("zero shifts give the identity round", "[csdp]") {
    std::mt19937 rng(2);
    const BitMatrix8 m = random_matrix(rng);
    CHECK(csdp_round(m, CsdpRoundParams{}, 0, 0, false) == m);
}

TEST_CASE("row stage rotates every row right by r + alpha", "[csdp]") {
    BitMatrix8 m(std::array<std::uint8_t, 8>{0x80, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80});
    CsdpRoundParams rp;
    rp.r = 1;  // p = 0: right
    CHECK(csdp_round(m, rp, 0, 0, false).rows() ==
          std::array<std::uint8_t, 8>{0x40, 0x40, 0x40, 0x40, 0x40, 0x40, 0x40, 0x40});
    rp.r = 7;  // (7 + 2) mod 8 = 1
    CHECK(csdp_round(m, rp, 2, 0, false).rows()[0] == 0x40);
    rp.p = 1;  // left by 1 wraps the MSB to the LSB
    CHECK(csdp_round(m, rp, 2, 0, false).rows()[0] == 0x01);
}

TEST_CASE("column stage rotates every column by s + beta", "[csdp]") {
    const BitMatrix8 m(std::array<std::uint8_t, 8>{1, 2, 3, 4, 5, 6, 7, 8});
    CsdpRoundParams rp;
    rp.s = 1;  // q = 0: down
    CHECK(csdp_round(m, rp, 0, 0, false).rows() == std::array<std::uint8_t, 8>{8, 1, 2, 3, 4, 5, 6, 7});
    rp.q = 1;  // up by (1 + 2)
    CHECK(csdp_round(m, rp, 0, 2, false).rows() == std::array<std::uint8_t, 8>{4, 5, 6, 7, 8, 1, 2, 3});
}

TEST_CASE("diagonal stage matches a cell-by-cell oracle", "[csdp][property]") {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
        const BitMatrix8 m = random_matrix(rng);
        CsdpRoundParams rp;
        rp.t = static_cast<int>(rng() & 1U);
        rp.u = static_cast<int>(rng() % 8);
        REQUIRE(csdp_round(m, rp, 0, 0, false) == oracle_diagonal_shift(m, rp.t, rp.u));
    }
}

TEST_CASE("full round composes diagonal, row and column stages", "[csdp]") {
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
        const BitMatrix8 m = random_matrix(rng);
        const CsdpRoundParams rp = random_params(rng);
        const int alpha = static_cast<int>(rng() % 8);
        const int beta = static_cast<int>(rng() % 8);

        BitMatrix8 expected = oracle_diagonal_shift(m, rp.t, rp.u);
        const int rs = (rp.r + alpha) % 8;
        for (auto& row : expected.rows()) row = rp.p ? std::rotl(row, rs) : std::rotr(row, rs);
        const int cs = (rp.s + beta) % 8;
        std::array<std::uint8_t, 8> shifted{};
        for (int r = 0; r < 8; ++r) {
            const int src = rp.q ? (r + cs) % 8 : (r - cs + 8) % 8;
            shifted[static_cast<std::size_t>(r)] = expected.rows()[static_cast<std::size_t>(src)];
        }
        REQUIRE(csdp_round(m, rp, alpha, beta, false).rows() == shifted);
    }
}

TEST_CASE("inverse round undoes the forward round", "[csdp][property]") {
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const BitMatrix8 m = random_matrix(rng);
        const CsdpRoundParams rp = random_params(rng);
        const int alpha = static_cast<int>(rng() % 8);
        const int beta = static_cast<int>(rng() % 8);
        const BitMatrix8 c = csdp_round(m, rp, alpha, beta, false);
        REQUIRE(popcount(c) == popcount(m));
        REQUIRE(csdp_round(c, rp, alpha, beta, true) == m);
    }
}

TEST_CASE("csdp_decrypt inverts csdp_encrypt", "[csdp][property]") {
    const ChaosKey key;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ScanSignal sig = random_signal(512, seed);
        const ScanSignal c = csdp_encrypt(sig, key);
        REQUIRE(c.bytes != sig.bytes);
        REQUIRE(csdp_decrypt(c, key).bytes == sig.bytes);
    }
    CHECK_THROWS_AS(csdp_encrypt(random_signal(12, 0), key), DimensionError);
}

TEST_CASE("csdp preserves set bits per group", "[csdp]") {
    const ScanSignal sig = random_signal(4096, 9);
    const ScanSignal c = csdp_encrypt(sig, ChaosKey{});
    for (std::size_t g = 0; g < sig.bytes.size(); g += 8) {
        int before = 0;
        int after = 0;
        for (std::size_t i = g; i < g + 8; ++i) {
            before += std::popcount(sig.bytes[i]);
            after += std::popcount(c.bytes[i]);
        }
        REQUIRE(before == after);
    }
}

TEST_CASE("a plaintext byte change stays inside its group", "[csdp]") {
    const ChaosKey key;
    ScanSignal sig = random_signal(512, 10);
    const ScanSignal c1 = csdp_encrypt(sig, key);
    sig.bytes[0] ^= 0x10;
    const ScanSignal c2 = csdp_encrypt(sig, key);
    bool group_changed = false;
    for (std::size_t i = 0; i < 8; ++i) group_changed = group_changed || c1.bytes[i] != c2.bytes[i];
    CHECK(group_changed);
    for (std::size_t i = 8; i < c1.bytes.size(); ++i) REQUIRE(c1.bytes[i] == c2.bytes[i]);
}

TEST_CASE("one subkey per group, drawn in order", "[csdp]") {
    const ChaosKey key;
    const ScanSignal sig = random_signal(800, 11);
    KeystreamGenerator gen(key);
    const auto subkeys = gen.next_subkeys(100);
    ScanSignal expected = sig;
    for (std::size_t g = 0; g < 100; ++g) {
        const auto m = bytes_to_bitmatrix(std::span(sig.bytes).subspan(g * 8, 8));
        const auto out = csdp_round(m, derive_round_params(subkeys[g]), key.alpha, key.beta, false);
        std::copy(out.rows().begin(), out.rows().end(), expected.bytes.begin() + static_cast<std::ptrdiff_t>(g * 8));
    }
    CHECK(csdp_encrypt(sig, key).bytes == expected.bytes);
}

TEST_CASE("image pipeline round-trips in every mode and scan", "[csdp][property]") {
    for (CipherMode mode : {CipherMode::Csdp, CipherMode::DiffusionCsdp}) {
        for (ScanPattern scan : {ScanPattern::Raster, ScanPattern::Zigzag}) {
            ChaosKey key;
            key.mode = mode;
            key.scan = scan;
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const GrayImage img = testing::random_image(128, 128, seed);
                const GrayImage c = encrypt_image(img, key);
                REQUIRE(c != img);
                REQUIRE(decrypt_image(c, key) == img);
            }
        }
    }
}

TEST_CASE("image pipeline enforces geometry per mode", "[csdp]") {
    ChaosKey key;
    key.mode = CipherMode::Csdp;
    const GrayImage small = testing::random_image(72, 72, 1);
    CHECK(decrypt_image(encrypt_image(small, key), key) == small);
    key.mode = CipherMode::DiffusionCsdp;
    CHECK_THROWS_AS(encrypt_image(small, key), DimensionError);
    CHECK_THROWS_AS(encrypt_image(testing::random_image(64, 128, 1), key), DimensionError);
}

TEST_CASE("scan pattern changes the cipher", "[csdp]") {
    const GrayImage img = testing::natural_image(128, 5);
    ChaosKey raster;
    ChaosKey zigzag;
    zigzag.scan = ScanPattern::Zigzag;
    CHECK(encrypt_image(img, raster) != encrypt_image(img, zigzag));
}
