#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

/// Dense row-major 2-D array.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
    Grid(std::size_t rows, std::size_t cols, std::vector<T> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (cells_.size() != rows_ * cols_) {
            throw DimensionError("grid of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                 " needs " + std::to_string(rows_ * cols_) + " cells, got " +
                                 std::to_string(cells_.size()));
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return cells_.size(); }

    T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    std::span<T> cells() { return cells_; }
    std::span<const T> cells() const { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

/// 8-bit grayscale raster. rows() is the height H, cols() the width W.
using GrayImage = Grid<std::uint8_t>;

inline std::size_t width(const GrayImage& img) { return img.cols(); }
inline std::size_t height(const GrayImage& img) { return img.rows(); }

/// Throws DimensionError unless the image is square with a side that is a positive multiple of `multiple`.
void require_cipher_geometry(const GrayImage& img, std::size_t multiple);

enum class ScanPattern { Raster, Zigzag };

std::string_view to_string(ScanPattern pattern);
ScanPattern parse_scan_pattern(std::string_view name);

/// An image flattened to 1-D, remembering where it came from.
struct ScanSignal {
    std::vector<std::uint8_t> bytes;
    std::size_t width = 0;
    std::size_t height = 0;
    ScanPattern pattern = ScanPattern::Raster;
};

/// Visiting order of (row, col) cells for a height x width raster.
/// Zigzag follows the JPEG convention: start at (0,0), step east, then alternate
/// down-left and up-right sweeps along anti-diagonals.
std::vector<std::pair<std::size_t, std::size_t>> scan_order(std::size_t height, std::size_t width,
                                                            ScanPattern pattern);

ScanSignal scan(const GrayImage& img, ScanPattern pattern);
GrayImage unscan(std::span<const std::uint8_t> bytes, std::size_t width, std::size_t height,
                 ScanPattern pattern);
inline GrayImage unscan(const ScanSignal& sig) {
    return unscan(sig.bytes, sig.width, sig.height, sig.pattern);
}

/// (H/b) x (W/b) grid of b x b tiles in row-major grid order.
Grid<GrayImage> split_blocks(const GrayImage& img, std::size_t block);
GrayImage merge_blocks(const Grid<GrayImage>& blocks);

enum class LaneAxis { Row, Col };
enum class DiagonalOrientation { Main, Anti };

/// +1 rotates right (rows), down (columns) or toward larger row index (diagonals).
enum class Rotation : int { Forward = 1, Backward = -1 };

inline Rotation opposite(Rotation dir) {
    return dir == Rotation::Forward ? Rotation::Backward : Rotation::Forward;
}

namespace detail {

// Circular shift of the cells at `positions` (in order) by `amount` toward the end.
template <typename T>
void rotate_positions(Grid<T>& grid, std::span<const std::pair<std::size_t, std::size_t>> positions,
                      Rotation dir, std::size_t amount) {
    const std::size_t len = positions.size();
    if (len < 2) return;
    const std::size_t shift = amount % len;
    if (shift == 0) return;
    std::vector<T> values;
    values.reserve(len);
    for (auto [r, c] : positions) values.push_back(grid(r, c));
    const std::size_t fwd = dir == Rotation::Forward ? shift : len - shift;
    for (std::size_t i = 0; i < len; ++i) {
        auto [r, c] = positions[(i + fwd) % len];
        grid(r, c) = values[i];
    }
}

}  // namespace detail

/// Cells of diagonal k of an n x n matrix ordered by increasing row.
/// Main: cells with r - c == k - (n - 1). Anti: cells with r + c == k.
std::vector<std::pair<std::size_t, std::size_t>> diagonal_cells(std::size_t n, std::size_t k,
                                                                DiagonalOrientation orientation);

/// Circularly shifts row or column `index` by `amount` mod its length.
template <typename T>
void rotate_lane(Grid<T>& grid, LaneAxis axis, std::size_t index, Rotation dir, std::size_t amount) {
    const std::size_t limit = axis == LaneAxis::Row ? grid.rows() : grid.cols();
    if (index >= limit) {
        throw DimensionError("lane index " + std::to_string(index) + " out of range [0, " +
                             std::to_string(limit) + ")");
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    if (axis == LaneAxis::Row) {
        for (std::size_t c = 0; c < grid.cols(); ++c) cells.emplace_back(index, c);
    } else {
        for (std::size_t r = 0; r < grid.rows(); ++r) cells.emplace_back(r, index);
    }
    detail::rotate_positions<T>(grid, cells, dir, amount);
}

/// Circularly shifts diagonal k of a square grid. Length-1 diagonals are unchanged.
template <typename T>
void rotate_diagonal(Grid<T>& grid, std::size_t k, DiagonalOrientation orientation, Rotation dir,
                     std::size_t amount) {
    if (grid.rows() != grid.cols()) {
        throw DimensionError("diagonal rotation needs a square grid, got " +
                             std::to_string(grid.rows()) + "x" + std::to_string(grid.cols()));
    }
    const auto cells = diagonal_cells(grid.rows(), k, orientation);
    detail::rotate_positions<T>(grid, cells, dir, amount);
}

}  // namespace chaoscrypt
