#include "chaoscrypt/pixel_lattice.hpp"

#include <algorithm>
#include <string>

namespace chaoscrypt {

void require_cipher_geometry(const GrayImage& img, std::size_t multiple) {
    const std::size_t w = width(img);
    const std::size_t h = height(img);
    if (w != h || w == 0 || w % multiple != 0) {
        throw DimensionError("image is " + std::to_string(w) + "x" + std::to_string(h) +
                             "; the cipher needs a square image whose side is a multiple of " +
                             std::to_string(multiple));
    }
}

std::string_view to_string(ScanPattern pattern) {
    return pattern == ScanPattern::Raster ? "raster" : "zigzag";
}

ScanPattern parse_scan_pattern(std::string_view name) {
    if (name == "raster") return ScanPattern::Raster;
    if (name == "zigzag") return ScanPattern::Zigzag;
    throw DomainError("unknown scan pattern '" + std::string(name) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> scan_order(std::size_t height, std::size_t width,
                                                            ScanPattern pattern) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    order.reserve(height * width);
    if (height == 0 || width == 0) return order;

    if (pattern == ScanPattern::Raster) {
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) order.emplace_back(r, c);
        }
        return order;
    }

    // Anti-diagonal s holds cells with r + c == s. Odd s run down-left, even s up-right.
    for (std::size_t s = 0; s + 1 < height + width; ++s) {
        const std::size_t r_lo = s >= width ? s - width + 1 : 0;
        const std::size_t r_hi = std::min(s, height - 1);
        if (s % 2 == 1) {
            for (std::size_t r = r_lo; r <= r_hi; ++r) order.emplace_back(r, s - r);
        } else {
            for (std::size_t r = r_hi + 1; r-- > r_lo;) order.emplace_back(r, s - r);
        }
    }
    return order;
}

ScanSignal scan(const GrayImage& img, ScanPattern pattern) {
    ScanSignal sig{{}, width(img), height(img), pattern};
    sig.bytes.reserve(img.size());
    for (auto [r, c] : scan_order(height(img), width(img), pattern)) sig.bytes.push_back(img(r, c));
    return sig;
}

GrayImage unscan(std::span<const std::uint8_t> bytes, std::size_t width, std::size_t height,
                 ScanPattern pattern) {
    if (bytes.size() != width * height) {
        throw DimensionError("signal of length " + std::to_string(bytes.size()) +
                             " cannot fill a " + std::to_string(width) + "x" +
                             std::to_string(height) + " image");
    }
    GrayImage img(height, width);
    std::size_t i = 0;
    for (auto [r, c] : scan_order(height, width, pattern)) img(r, c) = bytes[i++];
    return img;
}

Grid<GrayImage> split_blocks(const GrayImage& img, std::size_t block) {
    if (block == 0 || width(img) % block != 0 || height(img) % block != 0) {
        throw DimensionError("block size " + std::to_string(block) + " does not divide " +
                             std::to_string(width(img)) + "x" + std::to_string(height(img)));
    }
    Grid<GrayImage> grid(height(img) / block, width(img) / block);
    for (std::size_t gr = 0; gr < grid.rows(); ++gr) {
        for (std::size_t gc = 0; gc < grid.cols(); ++gc) {
            GrayImage tile(block, block);
            for (std::size_t r = 0; r < block; ++r) {
                for (std::size_t c = 0; c < block; ++c) tile(r, c) = img(gr * block + r, gc * block + c);
            }
            grid(gr, gc) = std::move(tile);
        }
    }
    return grid;
}

GrayImage merge_blocks(const Grid<GrayImage>& blocks) {
    if (blocks.size() == 0) return {};
    const std::size_t bh = blocks(0, 0).rows();
    const std::size_t bw = blocks(0, 0).cols();
    GrayImage img(blocks.rows() * bh, blocks.cols() * bw);
    for (std::size_t gr = 0; gr < blocks.rows(); ++gr) {
        for (std::size_t gc = 0; gc < blocks.cols(); ++gc) {
            const GrayImage& tile = blocks(gr, gc);
            if (tile.rows() != bh || tile.cols() != bw) {
                throw DimensionError("blocks to merge differ in size");
            }
            for (std::size_t r = 0; r < bh; ++r) {
                for (std::size_t c = 0; c < bw; ++c) img(gr * bh + r, gc * bw + c) = tile(r, c);
            }
        }
    }
    return img;
}

std::vector<std::pair<std::size_t, std::size_t>> diagonal_cells(std::size_t n, std::size_t k,
                                                                DiagonalOrientation orientation) {
    if (n == 0 || k > 2 * n - 2) {
        throw DimensionError("diagonal index " + std::to_string(k) + " out of range for a " +
                             std::to_string(n) + "x" + std::to_string(n) + " grid");
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < n; ++r) {
        // Main: c = r + (n - 1) - k.  Anti: c = k - r.
        const std::ptrdiff_t c = orientation == DiagonalOrientation::Main
                                     ? static_cast<std::ptrdiff_t>(r + n - 1) - static_cast<std::ptrdiff_t>(k)
                                     : static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(r);
        if (c >= 0 && c < static_cast<std::ptrdiff_t>(n)) cells.emplace_back(r, static_cast<std::size_t>(c));
    }
    return cells;
}

}  // namespace chaoscrypt
