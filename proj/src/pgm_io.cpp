#include "chaoscrypt/pgm_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void skip_space_and_comments(std::istream& in) {
    for (;;) {
        const int ch = in.peek();
        if (ch == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        } else if (ch != EOF && std::isspace(ch)) {
            in.get();
        } else {
            return;
        }
    }
}

std::size_t read_header_number(std::istream& in, const char* field) {
    skip_space_and_comments(in);
    if (!std::isdigit(in.peek())) {
        throw FormatError(std::string("PGM header: missing or malformed ") + field);
    }
    std::size_t value = 0;
    while (std::isdigit(in.peek())) {
        value = value * 10 + static_cast<std::size_t>(in.get() - '0');
        if (value > (1U << 24)) throw FormatError(std::string("PGM header: ") + field + " too large");
    }
    return value;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
    char magic[2] = {};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P') {
        throw FormatError("PGM header: bad magic number, expected P5");
    }
    if (magic[1] != '5') {
        throw FormatError(std::string("PGM header: unsupported format P") + magic[1] +
                          ", only binary P5 is supported");
    }
    const std::size_t w = read_header_number(in, "width");
    const std::size_t h = read_header_number(in, "height");
    const std::size_t maxval = read_header_number(in, "maxval");
    if (w == 0 || h == 0) throw FormatError("PGM header: width and height must be positive");
    if (maxval != 255) {
        throw FormatError("PGM header: maxval must be 255, got " + std::to_string(maxval));
    }
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(in.get())) throw FormatError("PGM header: missing separator after maxval");

    std::vector<std::uint8_t> pixels(w * h);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != pixels.size()) {
        throw FormatError("PGM payload truncated: expected " + std::to_string(pixels.size()) +
                          " bytes, got " + std::to_string(in.gcount()));
    }
    return GrayImage(h, w, std::move(pixels));
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
    out << "P5\n" << width(img) << ' ' << height(img) << "\n255\n";
    const auto px = img.cells();
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ostringstream buffer(std::ios::binary);
    write_pgm(img, buffer);
    write_file_atomically(path, buffer.str());
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw Error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move output into '" + path.string() + "': " + ec.message());
    }
}

}  // namespace chaoscrypt
