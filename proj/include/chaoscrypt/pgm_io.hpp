#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chaoscrypt/pixel_lattice.hpp"

namespace chaoscrypt {

/// Binary PGM (P5), maxval 255. Header comments are allowed.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::filesystem::path& path);

void write_pgm(const GrayImage& img, std::ostream& out);
/// Writes to a sibling temporary file and renames it into place, so a failure never
/// leaves a partial file at `path`.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

/// Atomic replace of `path` with `contents`; throws Error on I/O failure.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace chaoscrypt
