#include "chaoscrypt/diffusion_cipher.hpp"

#include <numeric>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void require_multiple_of_sub_block(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0 || width % kDiffusionSubBlock != 0 ||
        height % kDiffusionSubBlock != 0) {
        throw DimensionError("block diffusion needs width and height that are multiples of 64, got " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
}

void require_bit_count(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(want) +
                             " key bits, got " + std::to_string(got));
    }
}

// Applies one sweep bit. `lane` is the grid row (row sweep) or column (column sweep) the bit
// belongs to; the other rotation always acts on the first row or column.
void apply_sweep_bit(Grid<std::size_t>& grid, bool row_sweep, std::size_t lane, std::uint8_t bit,
                     Rotation dir) {
    if (row_sweep) {
        if (bit) rotate_lane(grid, LaneAxis::Row, lane, dir, 1);
        else rotate_lane(grid, LaneAxis::Col, 0, dir, 1);
    } else {
        if (bit) rotate_lane(grid, LaneAxis::Row, 0, dir, 1);
        else rotate_lane(grid, LaneAxis::Col, lane, dir, 1);
    }
}

}  // namespace

DiffusionPlan build_plan(KeystreamGenerator& gen, std::size_t width, std::size_t height) {
    require_multiple_of_sub_block(width, height);
    DiffusionPlan plan;
    plan.row_bits = gen.next_bits(height / kDiffusionTile);
    plan.col_bits = gen.next_bits(width / kDiffusionTile);
    plan.diag_bits = gen.next_bits((width / kDiffusionSubBlock) * (height / kDiffusionSubBlock));
    return plan;
}

void row_sweep(Grid<std::size_t>& grid, std::span<const std::uint8_t> bits, bool inverse) {
    require_bit_count(bits.size(), grid.rows(), "row sweep");
    if (!inverse) {
        for (std::size_t i = 0; i < bits.size(); ++i) apply_sweep_bit(grid, true, i, bits[i], Rotation::Forward);
    } else {
        for (std::size_t i = bits.size(); i-- > 0;) apply_sweep_bit(grid, true, i, bits[i], Rotation::Backward);
    }
}

void column_sweep(Grid<std::size_t>& grid, std::span<const std::uint8_t> bits, bool inverse) {
    require_bit_count(bits.size(), grid.cols(), "column sweep");
    if (!inverse) {
        for (std::size_t j = 0; j < bits.size(); ++j) apply_sweep_bit(grid, false, j, bits[j], Rotation::Forward);
    } else {
        for (std::size_t j = bits.size(); j-- > 0;) apply_sweep_bit(grid, false, j, bits[j], Rotation::Backward);
    }
}

Grid<std::size_t> block_permutation(std::size_t grid_rows, std::size_t grid_cols,
                                    std::span<const std::uint8_t> row_bits,
                                    std::span<const std::uint8_t> col_bits, bool inverse) {
    Grid<std::size_t> grid(grid_rows, grid_cols);
    std::iota(grid.cells().begin(), grid.cells().end(), std::size_t{0});
    if (!inverse) {
        row_sweep(grid, row_bits, false);
        column_sweep(grid, col_bits, false);
    } else {
        column_sweep(grid, col_bits, true);
        row_sweep(grid, row_bits, true);
    }
    return grid;
}

GrayImage block_grid_phase(const GrayImage& img, std::span<const std::uint8_t> row_bits,
                           std::span<const std::uint8_t> col_bits, bool inverse) {
    const Grid<GrayImage> blocks = split_blocks(img, kDiffusionTile);
    const Grid<std::size_t> perm =
        block_permutation(blocks.rows(), blocks.cols(), row_bits, col_bits, inverse);

    Grid<GrayImage> moved(blocks.rows(), blocks.cols());
    for (std::size_t r = 0; r < perm.rows(); ++r) {
        for (std::size_t c = 0; c < perm.cols(); ++c) moved(r, c) = blocks.cells()[perm(r, c)];
    }
    return merge_blocks(moved);
}

GrayImage diagonal_phase(const GrayImage& img, std::span<const std::uint8_t> diag_bits, bool inverse) {
    require_multiple_of_sub_block(width(img), height(img));
    Grid<GrayImage> blocks = split_blocks(img, kDiffusionSubBlock);
    require_bit_count(diag_bits.size(), blocks.size(), "diagonal phase");

    const Rotation dir = inverse ? Rotation::Backward : Rotation::Forward;
    const std::size_t diagonals = 2 * kDiffusionSubBlock - 1;
    // Sub-blocks are independent; order does not matter.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto orientation = diag_bits[b] ? DiagonalOrientation::Anti : DiagonalOrientation::Main;
        GrayImage& tile = blocks.cells()[b];
        for (std::size_t k = 0; k < diagonals; ++k) rotate_diagonal(tile, k, orientation, dir, 1);
    }
    return merge_blocks(blocks);
}

GrayImage diffuse_encrypt(const GrayImage& img, const ChaosKey& key) {
    require_multiple_of_sub_block(width(img), height(img));
    KeystreamGenerator gen(key);
    const DiffusionPlan plan = build_plan(gen, width(img), height(img));
    const GrayImage permuted = block_grid_phase(img, plan.row_bits, plan.col_bits, false);
    return diagonal_phase(permuted, plan.diag_bits, false);
}

GrayImage diffuse_decrypt(const GrayImage& img, const ChaosKey& key) {
    require_multiple_of_sub_block(width(img), height(img));
    KeystreamGenerator gen(key);
    const DiffusionPlan plan = build_plan(gen, width(img), height(img));
    const GrayImage undiagonal = diagonal_phase(img, plan.diag_bits, true);
    return block_grid_phase(undiagonal, plan.row_bits, plan.col_bits, true);
}

}  // namespace chaoscrypt
