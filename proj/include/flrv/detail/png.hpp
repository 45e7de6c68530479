#pragma once

// PNG codec for 8-bit RGB truecolor, non-interlaced images. The container
// (signature, chunks, CRCs, scanline filters) is handled here; DEFLATE is
// zlib's. Included by flrv/raster.hpp after RasterImage is defined.

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <zlib.h>

#include "flrv/errors.hpp"

namespace flrv {

class RasterImage; // defined in flrv/raster.hpp

namespace detail {

inline constexpr std::uint8_t kPngSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};

inline bool png_signature_matches(const std::vector<std::uint8_t>& bytes) {
    return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

inline std::uint32_t read_be32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

inline void append_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v >> 24));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

inline void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                         const std::uint8_t* data, std::size_t len) {
    append_be32(out, static_cast<std::uint32_t>(len));
    const std::size_t type_at = out.size();
    out.insert(out.end(), type, type + 4);
    if (len > 0) out.insert(out.end(), data, data + len);
    const std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0, out.data() + type_at, static_cast<uInt>(4 + len)));
    append_be32(out, crc);
}

inline int paeth_predict(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

// Undo one scanline filter in place. `row` excludes the filter byte,
// `prev` is the reconstructed previous row (empty for the first).
inline void png_unfilter_row(int filter, std::uint8_t* row, const std::uint8_t* prev,
                             std::size_t len, int bpp) {
    switch (filter) {
    case 0:
        break;
    case 1: // Sub
        for (std::size_t i = bpp; i < len; ++i) row[i] += row[i - bpp];
        break;
    case 2: // Up
        if (prev) for (std::size_t i = 0; i < len; ++i) row[i] += prev[i];
        break;
    case 3: // Average
        for (std::size_t i = 0; i < len; ++i) {
            const int a = i >= std::size_t(bpp) ? row[i - bpp] : 0;
            const int b = prev ? prev[i] : 0;
            row[i] += std::uint8_t((a + b) / 2);
        }
        break;
    case 4: // Paeth
        for (std::size_t i = 0; i < len; ++i) {
            const int a = i >= std::size_t(bpp) ? row[i - bpp] : 0;
            const int b = prev ? prev[i] : 0;
            const int c = (prev && i >= std::size_t(bpp)) ? prev[i - bpp] : 0;
            row[i] += std::uint8_t(paeth_predict(a, b, c));
        }
        break;
    default:
        throw CorruptStream("PNG: unknown scanline filter type");
    }
}

inline RasterImage decode_png(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 8;
    bool saw_ihdr = false, saw_iend = false;
    std::uint32_t width = 0, height = 0;
    std::vector<std::uint8_t> idat;

    while (pos < bytes.size()) {
        if (bytes.size() - pos < 12) throw CorruptStream("PNG: truncated chunk header");
        const std::uint32_t len = read_be32(&bytes[pos]);
        if (len > (1u << 30)) throw CorruptStream("PNG: chunk length out of range");
        if (bytes.size() - pos < 12 + std::size_t(len))
            throw CorruptStream("PNG: truncated chunk payload");
        const std::uint8_t* type = &bytes[pos + 4];
        const std::uint8_t* data = &bytes[pos + 8];
        const std::uint32_t stored_crc = read_be32(data + len);
        const std::uint32_t actual_crc = static_cast<std::uint32_t>(
            ::crc32(0, type, static_cast<uInt>(4 + len)));
        if (stored_crc != actual_crc) throw CorruptStream("PNG: chunk CRC mismatch");

        const std::string name(reinterpret_cast<const char*>(type), 4);
        if (!saw_ihdr && name != "IHDR") throw CorruptStream("PNG: first chunk is not IHDR");
        if (name == "IHDR") {
            if (saw_ihdr || len != 13) throw CorruptStream("PNG: bad IHDR");
            saw_ihdr = true;
            width = read_be32(data);
            height = read_be32(data + 4);
            check_decoded_dims(width, height);
            const int bit_depth = data[8], color_type = data[9];
            const int compression = data[10], filter = data[11], interlace = data[12];
            if (bit_depth != 8 || color_type != 2)
                throw CorruptStream("PNG: only 8-bit RGB truecolor is supported");
            if (compression != 0 || filter != 0)
                throw CorruptStream("PNG: unknown compression or filter method");
            if (interlace != 0)
                throw CorruptStream("PNG: interlaced images are not supported");
        } else if (name == "IDAT") {
            idat.insert(idat.end(), data, data + len);
        } else if (name == "IEND") {
            saw_iend = true;
            break;
        } else if (!(type[0] & 0x20)) {
            throw CorruptStream("PNG: unknown critical chunk " + name);
        } // ancillary chunks are skipped
        pos += 12 + len;
    }
    if (!saw_ihdr || !saw_iend || idat.empty())
        throw CorruptStream("PNG: missing IHDR, IDAT or IEND");

    const std::size_t stride = std::size_t(width) * 3;
    std::vector<std::uint8_t> raw(std::size_t(height) * (stride + 1));
    uLongf raw_len = static_cast<uLongf>(raw.size());
    const int rc = ::uncompress(raw.data(), &raw_len, idat.data(),
                                static_cast<uLong>(idat.size()));
    if (rc != Z_OK || raw_len != raw.size())
        throw CorruptStream("PNG: IDAT stream does not inflate to the expected size");

    RasterImage img(static_cast<int>(width), static_cast<int>(height));
    const std::uint8_t* prev = nullptr;
    for (std::uint32_t y = 0; y < height; ++y) {
        std::uint8_t* row = raw.data() + std::size_t(y) * (stride + 1);
        const int filter = *row++;
        png_unfilter_row(filter, row, prev, stride, 3);
        for (std::uint32_t x = 0; x < width; ++x)
            img.at(static_cast<int>(x), static_cast<int>(y)) = {row[x * 3], row[x * 3 + 1], row[x * 3 + 2]};
        prev = row;
    }
    return img;
}

inline std::vector<std::uint8_t> encode_png(const RasterImage& img) {
    const std::size_t stride = std::size_t(img.width()) * 3;
    std::vector<std::uint8_t> raw;
    raw.reserve(std::size_t(img.height()) * (stride + 1));
    for (int y = 0; y < img.height(); ++y) {
        raw.push_back(0); // filter: none
        for (int x = 0; x < img.width(); ++x) {
            const Rgb& p = img.at(x, y);
            raw.push_back(p.r);
            raw.push_back(p.g);
            raw.push_back(p.b);
        }
    }
    std::vector<std::uint8_t> compressed(::compressBound(static_cast<uLong>(raw.size())));
    uLongf comp_len = static_cast<uLongf>(compressed.size());
    if (::compress2(compressed.data(), &comp_len, raw.data(),
                    static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw Error("PNG: deflate failed");
    compressed.resize(comp_len);

    std::vector<std::uint8_t> out(kPngSignature, kPngSignature + 8);
    std::uint8_t ihdr[13];
    ihdr[0] = std::uint8_t(std::uint32_t(img.width()) >> 24);
    ihdr[1] = std::uint8_t(std::uint32_t(img.width()) >> 16);
    ihdr[2] = std::uint8_t(std::uint32_t(img.width()) >> 8);
    ihdr[3] = std::uint8_t(img.width());
    ihdr[4] = std::uint8_t(std::uint32_t(img.height()) >> 24);
    ihdr[5] = std::uint8_t(std::uint32_t(img.height()) >> 16);
    ihdr[6] = std::uint8_t(std::uint32_t(img.height()) >> 8);
    ihdr[7] = std::uint8_t(img.height());
    ihdr[8] = 8;  // bit depth
    ihdr[9] = 2;  // color type: RGB truecolor
    ihdr[10] = 0; // compression
    ihdr[11] = 0; // filter method
    ihdr[12] = 0; // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof ihdr);
    append_chunk(out, "IDAT", compressed.data(), compressed.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

} // namespace detail
} // namespace flrv
