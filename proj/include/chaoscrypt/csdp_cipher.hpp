#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "chaoscrypt/keystream.hpp"
#include "chaoscrypt/pixel_lattice.hpp"

namespace chaoscrypt {

/// 8x8 bit matrix. Row i is byte i of the group, most significant bit in column 0.
class BitMatrix8 {
public:
    BitMatrix8() = default;
    explicit BitMatrix8(const std::array<std::uint8_t, 8>& rows) : rows_(rows) {}

    int bit(std::size_t row, std::size_t col) const { return (rows_[row] >> (7 - col)) & 1; }
    void set_bit(std::size_t row, std::size_t col, int value);

    const std::array<std::uint8_t, 8>& rows() const { return rows_; }
    std::array<std::uint8_t, 8>& rows() { return rows_; }

    friend bool operator==(const BitMatrix8&, const BitMatrix8&) = default;

private:
    std::array<std::uint8_t, 8> rows_{};
};

/// Throws DimensionError unless `group` holds exactly 8 bytes.
BitMatrix8 bytes_to_bitmatrix(std::span<const std::uint8_t> group);
std::array<std::uint8_t, 8> bitmatrix_to_bytes(const BitMatrix8& m);

/// One CSDP round. Forward order: all 15 main-orientation diagonals by u (t = 1 up,
/// t = 0 down), every row by (r + alpha) mod 8 (p = 1 left, p = 0 right), every column by
/// (s + beta) mod 8 (q = 1 up, q = 0 down). Inverse undoes the stages in reverse order.
BitMatrix8 csdp_round(const BitMatrix8& m, const CsdpRoundParams& rp, int alpha, int beta,
                      bool inverse);

/// Encrypts consecutive 8-byte groups, drawing one subkey per group from a generator built
/// from `key`. The signal length must be a multiple of 8.
ScanSignal csdp_encrypt(const ScanSignal& sig, const ChaosKey& key);
ScanSignal csdp_decrypt(const ScanSignal& sig, const ChaosKey& key);

/// Full pipeline per key.mode and key.scan:
///   csdp:            scan -> csdp_encrypt -> unscan
///   diffusion+csdp:  diffuse_encrypt -> scan -> csdp_encrypt -> unscan
/// Images must be square; side a multiple of 8 (csdp) or 64 (diffusion+csdp).
GrayImage encrypt_image(const GrayImage& img, const ChaosKey& key);
GrayImage decrypt_image(const GrayImage& img, const ChaosKey& key);

}  // namespace chaoscrypt
