#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "flrv/errors.hpp"

namespace flrv {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

struct PixelCoord {
    int x = 0; // column, from left
    int y = 0; // row, from top
    bool operator==(const PixelCoord&) const = default;
};

// 8-bit RGB frame, row-major, top-left origin. Immutable by convention once
// built (the pipeline only ever returns fresh images).
class RasterImage {
public:
    RasterImage() = default;
    RasterImage(int width, int height, Rgb fill = {})
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw ZeroDimension("image dimensions must be at least 1x1");
        pixels_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    long long pixel_count() const { return static_cast<long long>(width_) * height_; }

    Rgb& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    const Rgb& at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    std::vector<Rgb>& pixels() { return pixels_; }
    const std::vector<Rgb>& pixels() const { return pixels_; }

    bool operator==(const RasterImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Rgb> pixels_;
};

enum class ImageFormat { Ppm, Png };

namespace detail {

// Round-to-nearest with ties up, for non-negative sums.
inline long long round_div_ties_up(long long sum, long long n) {
    return (2 * sum + n) / (2 * n);
}

inline int clamp_coord(int v, int hi) {
    return v < 0 ? 0 : (v >= hi ? hi - 1 : v);
}

// Guard against allocation bombs from hostile headers.
inline void check_decoded_dims(long long w, long long h) {
    if (w < 1 || h < 1) throw ZeroDimension("decoded image has a zero dimension");
    if (w > (1 << 24) || h > (1 << 24) || w * h > (1LL << 26))
        throw CorruptStream("decoded image dimensions exceed supported size");
}

// ---- PPM (P6, binary, maxval 255) ----

inline bool ppm_signature_matches(const std::vector<std::uint8_t>& bytes) {
    return bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6';
}

// Netpbm token scan: whitespace separates tokens, '#' starts a comment that
// runs to end of line.
inline long long ppm_read_int(const std::vector<std::uint8_t>& bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (std::isspace(bytes[pos])) { ++pos; continue; }
        if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            continue;
        }
        break;
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
        throw CorruptStream("PPM header: expected an integer token");
    long long v = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
        v = v * 10 + (bytes[pos] - '0');
        if (v > (1LL << 31)) throw CorruptStream("PPM header: integer out of range");
        ++pos;
    }
    return v;
}

inline RasterImage decode_ppm(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 2; // past "P6"
    const long long w = ppm_read_int(bytes, pos);
    const long long h = ppm_read_int(bytes, pos);
    const long long maxval = ppm_read_int(bytes, pos);
    check_decoded_dims(w, h);
    if (maxval != 255) throw CorruptStream("PPM maxval must be 255");
    if (pos >= bytes.size() || !std::isspace(bytes[pos]))
        throw CorruptStream("PPM header: expected whitespace before payload");
    ++pos; // exactly one whitespace byte separates header and payload
    const std::size_t need = static_cast<std::size_t>(w) * h * 3;
    if (bytes.size() - pos < need) throw CorruptStream("PPM payload truncated");
    RasterImage img(static_cast<int>(w), static_cast<int>(h));
    for (auto& p : img.pixels()) {
        p.r = bytes[pos++];
        p.g = bytes[pos++];
        p.b = bytes[pos++];
    }
    return img;
}

inline std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
    std::string header = "P6\n" + std::to_string(img.width()) + " " +
                         std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + img.pixels().size() * 3);
    for (const Rgb& p : img.pixels()) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

} // namespace detail
} // namespace flrv

#include "flrv/detail/png.hpp" // PNG codec; uses RasterImage, so included here

namespace flrv {

inline RasterImage decode_image(const std::vector<std::uint8_t>& bytes) {
    if (detail::png_signature_matches(bytes)) return detail::decode_png(bytes);
    if (detail::ppm_signature_matches(bytes)) return detail::decode_ppm(bytes);
    throw UnknownFormat("no recognized image signature (PNG or PPM P6)");
}

inline std::vector<std::uint8_t> encode_image(const RasterImage& img, ImageFormat format) {
    return format == ImageFormat::Ppm ? detail::encode_ppm(img) : detail::encode_png(img);
}

// Integer-divisor box downscale. Each output pixel is the rounded mean of
// its factor x factor source block; partial blocks at the right/bottom edge
// average only the pixels that exist.
inline RasterImage resize_box(const RasterImage& img, int factor) {
    if (factor < 1) throw ZeroFactor("resize factor must be a positive integer");
    if (factor == 1) return img;

    const int ow = (img.width() + factor - 1) / factor;
    const int oh = (img.height() + factor - 1) / factor;
    RasterImage out(ow, oh);
    for (int oy = 0; oy < oh; ++oy) {
        const int y0 = oy * factor;
        const int y1 = std::min(y0 + factor, img.height());
        for (int ox = 0; ox < ow; ++ox) {
            const int x0 = ox * factor;
            const int x1 = std::min(x0 + factor, img.width());
            long long sr = 0, sg = 0, sb = 0;
            for (int y = y0; y < y1; ++y) {
                for (int x = x0; x < x1; ++x) {
                    const Rgb& p = img.at(x, y);
                    sr += p.r; sg += p.g; sb += p.b;
                }
            }
            const long long n = static_cast<long long>(y1 - y0) * (x1 - x0);
            out.at(ox, oy) = {
                static_cast<std::uint8_t>(detail::round_div_ties_up(sr, n)),
                static_cast<std::uint8_t>(detail::round_div_ties_up(sg, n)),
                static_cast<std::uint8_t>(detail::round_div_ties_up(sb, n)),
            };
        }
    }
    return out;
}

// Drawing helpers shared by the synthetic camera, the annotator and the
// fixture generator. All of them clip at the image border.

inline void fill_disc(RasterImage& img, double cx, double cy, double radius, Rgb color) {
    const int x0 = std::max(0, static_cast<int>(cx - radius) - 1);
    const int x1 = std::min(img.width() - 1, static_cast<int>(cx + radius) + 1);
    const int y0 = std::max(0, static_cast<int>(cy - radius) - 1);
    const int y1 = std::min(img.height() - 1, static_cast<int>(cy + radius) + 1);
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y) {
        const double dy = y - cy;
        for (int x = x0; x <= x1; ++x) {
            const double dx = x - cx;
            if (dx * dx + dy * dy <= r2) img.at(x, y) = color;
        }
    }
}

inline void draw_rect_outline(RasterImage& img, int min_x, int min_y, int max_x, int max_y, Rgb color) {
    for (int x = std::max(0, min_x); x <= std::min(img.width() - 1, max_x); ++x) {
        if (min_y >= 0 && min_y < img.height()) img.at(x, min_y) = color;
        if (max_y >= 0 && max_y < img.height()) img.at(x, max_y) = color;
    }
    for (int y = std::max(0, min_y); y <= std::min(img.height() - 1, max_y); ++y) {
        if (min_x >= 0 && min_x < img.width()) img.at(min_x, y) = color;
        if (max_x >= 0 && max_x < img.width()) img.at(max_x, y) = color;
    }
}

inline void draw_cross(RasterImage& img, int cx, int cy, int half, Rgb color) {
    for (int d = -half; d <= half; ++d) {
        if (img.in_bounds(cx + d, cy)) img.at(cx + d, cy) = color;
        if (img.in_bounds(cx, cy + d)) img.at(cx, cy + d) = color;
    }
}

} // namespace flrv
