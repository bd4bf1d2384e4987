#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaoscrypt/keystream.hpp"
#include "chaoscrypt/pixel_lattice.hpp"

namespace chaoscrypt {

inline constexpr std::size_t kDiffusionTile = 8;      // block-grid cell
inline constexpr std::size_t kDiffusionSubBlock = 64;  // diagonal-rotation region

/// Key bits for one block-diffusion pass over a W x H image.
struct DiffusionPlan {
    std::vector<std::uint8_t> row_bits;   // H / 8
    std::vector<std::uint8_t> col_bits;   // W / 8
    std::vector<std::uint8_t> diag_bits;  // (W / 64) * (H / 64), row-major over sub-blocks

    friend bool operator==(const DiffusionPlan&, const DiffusionPlan&) = default;
};

/// Draws row, column, then diagonal bits from `gen`. W and H must be multiples of 64.
DiffusionPlan build_plan(KeystreamGenerator& gen, std::size_t width, std::size_t height);

/// Row sweep over a grid of block indices, one bit per grid row i: 1 rotates grid row i
/// right, 0 rotates grid column 0 down. The inverse walks the bits backwards and rotates the
/// other way.
void row_sweep(Grid<std::size_t>& grid, std::span<const std::uint8_t> bits, bool inverse);

/// Column sweep, one bit per grid column j: 1 rotates grid row 0 right, 0 rotates grid
/// column j down.
void column_sweep(Grid<std::size_t>& grid, std::span<const std::uint8_t> bits, bool inverse);

/// Permutation of the 8x8 block grid. grid(r, c) holds the source block index (row-major).
///
/// Forward is the row sweep then the column sweep; the inverse undoes them in reverse.
Grid<std::size_t> block_permutation(std::size_t grid_rows, std::size_t grid_cols,
                                    std::span<const std::uint8_t> row_bits,
                                    std::span<const std::uint8_t> col_bits, bool inverse);

GrayImage block_grid_phase(const GrayImage& img, std::span<const std::uint8_t> row_bits,
                           std::span<const std::uint8_t> col_bits, bool inverse);

/// Per 64x64 sub-block: bit 0 rotates every main diagonal by one position, bit 1 every
/// anti-diagonal. Forward shifts toward larger row index; inverse the other way.
GrayImage diagonal_phase(const GrayImage& img, std::span<const std::uint8_t> diag_bits, bool inverse);

GrayImage diffuse_encrypt(const GrayImage& img, const ChaosKey& key);
GrayImage diffuse_decrypt(const GrayImage& img, const ChaosKey& key);

}  // namespace chaoscrypt
