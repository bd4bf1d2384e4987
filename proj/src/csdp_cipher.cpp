#include "chaoscrypt/csdp_cipher.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "chaoscrypt/diffusion_cipher.hpp"
#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

constexpr std::size_t kGroup = 8;

// dest[t][u][i]: where bit i (row-major, row * 8 + col) lands after shifting every main
// diagonal by u positions in direction t (t = 1 up, t = 0 down).
using DiagonalTable = std::array<std::array<std::array<std::uint8_t, 64>, 8>, 2>;

DiagonalTable build_diagonal_table() {
    DiagonalTable table{};
    for (int t = 0; t < 2; ++t) {
        const Rotation dir = t == 1 ? Rotation::Backward : Rotation::Forward;
        for (std::size_t u = 0; u < 8; ++u) {
            Grid<std::uint8_t> index(8, 8);
            for (std::size_t i = 0; i < 64; ++i) index.cells()[i] = static_cast<std::uint8_t>(i);
            for (std::size_t k = 0; k < 15; ++k) {
                rotate_diagonal(index, k, DiagonalOrientation::Main, dir, u);
            }
            for (std::size_t pos = 0; pos < 64; ++pos) table[t][u][index.cells()[pos]] = static_cast<std::uint8_t>(pos);
        }
    }
    return table;
}

const DiagonalTable& diagonal_table() {
    static const DiagonalTable table = build_diagonal_table();
    return table;
}

BitMatrix8 shift_diagonals(const BitMatrix8& m, int t, int u) {
    const auto& dest = diagonal_table()[t][static_cast<std::size_t>(u)];
    BitMatrix8 out;
    for (std::size_t i = 0; i < 64; ++i) {
        out.set_bit(dest[i] / 8, dest[i] % 8, m.bit(i / 8, i % 8));
    }
    return out;
}

// left == true moves column j to column j - 1 (toward the MSB).
void rotate_rows(BitMatrix8& m, bool left, int amount) {
    for (auto& row : m.rows()) row = left ? std::rotl(row, amount) : std::rotr(row, amount);
}

// Every column shifted by the same amount is a cyclic shift of the row bytes.
void rotate_columns(BitMatrix8& m, bool up, int amount) {
    auto& rows = m.rows();
    if (up) std::rotate(rows.begin(), rows.begin() + amount, rows.end());
    else std::rotate(rows.begin(), rows.end() - amount, rows.end());
}

void require_group_multiple(std::size_t n) {
    if (n % kGroup != 0) {
        throw DimensionError("CSDP needs a signal length that is a multiple of 8, got " +
                             std::to_string(n));
    }
}

ScanSignal run_csdp(const ScanSignal& sig, const ChaosKey& key, bool inverse) {
    require_group_multiple(sig.bytes.size());
    KeystreamGenerator gen(key);
    const std::vector<std::uint32_t> subkeys = gen.next_subkeys(sig.bytes.size() / kGroup);

    ScanSignal out = sig;
    std::span<const std::uint8_t> in(sig.bytes);
    for (std::size_t g = 0; g < subkeys.size(); ++g) {
        const BitMatrix8 m = bytes_to_bitmatrix(in.subspan(g * kGroup, kGroup));
        const BitMatrix8 r = csdp_round(m, derive_round_params(subkeys[g]), key.alpha, key.beta, inverse);
        std::ranges::copy(r.rows(), out.bytes.begin() + static_cast<std::ptrdiff_t>(g * kGroup));
    }
    return out;
}

std::size_t side_multiple(CipherMode mode) {
    return mode == CipherMode::Csdp ? kGroup : kDiffusionSubBlock;
}

}  // namespace

void BitMatrix8::set_bit(std::size_t row, std::size_t col, int value) {
    const auto mask = static_cast<std::uint8_t>(1U << (7 - col));
    if (value) rows_[row] |= mask;
    else rows_[row] &= static_cast<std::uint8_t>(~mask);
}

BitMatrix8 bytes_to_bitmatrix(std::span<const std::uint8_t> group) {
    if (group.size() != kGroup) {
        throw DimensionError("a bit matrix needs exactly 8 bytes, got " + std::to_string(group.size()));
    }
    std::array<std::uint8_t, 8> rows{};
    std::ranges::copy(group, rows.begin());
    return BitMatrix8(rows);
}

std::array<std::uint8_t, 8> bitmatrix_to_bytes(const BitMatrix8& m) { return m.rows(); }

BitMatrix8 csdp_round(const BitMatrix8& m, const CsdpRoundParams& rp, int alpha, int beta,
                      bool inverse) {
    const int row_shift = (rp.r + alpha) % 8;
    const int col_shift = (rp.s + beta) % 8;
    const int diag_shift = rp.u % 8;

    if (!inverse) {
        BitMatrix8 out = shift_diagonals(m, rp.t, diag_shift);
        rotate_rows(out, rp.p == 1, row_shift);
        rotate_columns(out, rp.q == 1, col_shift);
        return out;
    }
    BitMatrix8 out = m;
    rotate_columns(out, rp.q != 1, col_shift);
    rotate_rows(out, rp.p != 1, row_shift);
    return shift_diagonals(out, rp.t == 1 ? 0 : 1, diag_shift);
}

ScanSignal csdp_encrypt(const ScanSignal& sig, const ChaosKey& key) { return run_csdp(sig, key, false); }

ScanSignal csdp_decrypt(const ScanSignal& sig, const ChaosKey& key) { return run_csdp(sig, key, true); }

GrayImage encrypt_image(const GrayImage& img, const ChaosKey& key) {
    validate_key(key);
    require_cipher_geometry(img, side_multiple(key.mode));
    const GrayImage stage = key.mode == CipherMode::DiffusionCsdp ? diffuse_encrypt(img, key) : img;
    return unscan(csdp_encrypt(scan(stage, key.scan), key));
}

GrayImage decrypt_image(const GrayImage& img, const ChaosKey& key) {
    validate_key(key);
    require_cipher_geometry(img, side_multiple(key.mode));
    const GrayImage stage = unscan(csdp_decrypt(scan(img, key.scan), key));
    return key.mode == CipherMode::DiffusionCsdp ? diffuse_decrypt(stage, key) : stage;
}

}  // namespace chaoscrypt
