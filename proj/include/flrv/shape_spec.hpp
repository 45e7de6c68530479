#pragma once

#include <string>

#include "flrv/errors.hpp"

namespace flrv {

// Mask/structuring-element geometry, as written in config files and CLI
// flags: "circular:R" or "rect:WxH". Both the mean filter and morphology
// build their odd-sized grids from one of these.
struct ShapeSpec {
    enum class Kind { Circular, Rect };
    Kind kind = Kind::Circular;
    int radius = 0;      // Circular
    int w = 1, h = 1;    // Rect, both odd

    static ShapeSpec circular(int radius) {
        if (radius < 0) throw BadConfig("circular mask radius must be >= 0");
        ShapeSpec s;
        s.kind = Kind::Circular;
        s.radius = radius;
        return s;
    }

    static ShapeSpec rect(int w, int h) {
        if (w < 1 || h < 1) throw BadConfig("rect mask sides must be >= 1");
        if (w % 2 == 0 || h % 2 == 0)
            throw EvenDimension("rect mask sides must be odd");
        ShapeSpec s;
        s.kind = Kind::Rect;
        s.w = w;
        s.h = h;
        return s;
    }

    bool operator==(const ShapeSpec&) const = default;
};

inline std::string to_string(const ShapeSpec& s) {
    if (s.kind == ShapeSpec::Kind::Circular)
        return "circular:" + std::to_string(s.radius);
    return "rect:" + std::to_string(s.w) + "x" + std::to_string(s.h);
}

inline ShapeSpec parse_shape_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw BadConfig("mask spec must be circular:R or rect:WxH, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    try {
        if (kind == "circular") {
            std::size_t used = 0;
            const int r = std::stoi(arg, &used);
            if (used != arg.size()) throw BadConfig("");
            return ShapeSpec::circular(r);
        }
        if (kind == "rect") {
            const auto x = arg.find('x');
            if (x == std::string::npos) throw BadConfig("");
            std::size_t uw = 0, uh = 0;
            const int w = std::stoi(arg.substr(0, x), &uw);
            const int h = std::stoi(arg.substr(x + 1), &uh);
            if (uw != x || uh != arg.size() - x - 1) throw BadConfig("");
            return ShapeSpec::rect(w, h);
        }
    } catch (const EvenDimension&) {
        throw;
    } catch (const std::exception&) {
        throw BadConfig("malformed mask spec '" + text + "'");
    }
    throw BadConfig("unknown mask kind '" + kind + "' (want circular or rect)");
}

} // namespace flrv
