#pragma once

// Analytic region descriptions: disc, rectangle, rounded rectangle, convex
// polygon, and finite unions of disjoint convex parts. Each part carries
// closed-form area/perimeter, a membership test and an exact Euclidean
// signed-distance evaluator. Morphological erosions and openings of the
// convex kinds have closed forms (Steiner formulas for the dilation step).
//
// Plain-text serialization, one shape per line:
//   disc cx cy r
//   rect x y w h            (corner x y)
//   rrect x y w h rho
//   polygon x1 y1 x2 y2 ... (convex, >= 3 vertices, CCW or CW)
//   union <part> <part> ... (primitive specs concatenated)

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tvgeo/errors.hpp"
#include "tvgeo/grid.hpp"

namespace tvgeo {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double len(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

struct Disc {
    Vec2 center;
    double r = 0.0;
};

struct Rect {
    Vec2 corner; // min-x, min-y
    double w = 0.0, h = 0.0;
};

struct RoundedRect {
    Vec2 corner; // corner of the bounding w x h box
    double w = 0.0, h = 0.0, rho = 0.0;
};

struct Polygon {
    std::vector<Vec2> pts; // convex; stored CCW
};

using ConvexPart = std::variant<Disc, Rect, RoundedRect, Polygon>;

// ---- per-part geometry ----------------------------------------------------

inline double part_area(const Disc& d) { return M_PI * d.r * d.r; }
inline double part_area(const Rect& r) { return r.w * r.h; }
inline double part_area(const RoundedRect& r) { return r.w * r.h - (4.0 - M_PI) * r.rho * r.rho; }
inline double part_area(const Polygon& p) {
    double a = 0.0;
    const size_t m = p.pts.size();
    for (size_t i = 0; i < m; ++i) a += cross(p.pts[i], p.pts[(i + 1) % m]);
    return 0.5 * std::abs(a);
}

inline double part_perimeter(const Disc& d) { return 2.0 * M_PI * d.r; }
inline double part_perimeter(const Rect& r) { return 2.0 * (r.w + r.h); }
inline double part_perimeter(const RoundedRect& r) { return 2.0 * (r.w + r.h) - (8.0 - 2.0 * M_PI) * r.rho; }
inline double part_perimeter(const Polygon& p) {
    double s = 0.0;
    const size_t m = p.pts.size();
    for (size_t i = 0; i < m; ++i) s += len(p.pts[(i + 1) % m] - p.pts[i]);
    return s;
}

inline double part_sdf(const Disc& d, Vec2 p) { return len(p - d.center) - d.r; }

inline double box_sdf(Vec2 p, Vec2 center, double hx, double hy) {
    const double qx = std::abs(p.x - center.x) - hx;
    const double qy = std::abs(p.y - center.y) - hy;
    const double ox = std::max(qx, 0.0), oy = std::max(qy, 0.0);
    return std::sqrt(ox * ox + oy * oy) + std::min(std::max(qx, qy), 0.0);
}

inline double part_sdf(const Rect& r, Vec2 p) {
    return box_sdf(p, {r.corner.x + 0.5 * r.w, r.corner.y + 0.5 * r.h}, 0.5 * r.w, 0.5 * r.h);
}

inline double part_sdf(const RoundedRect& r, Vec2 p) {
    return box_sdf(p, {r.corner.x + 0.5 * r.w, r.corner.y + 0.5 * r.h}, 0.5 * r.w - r.rho, 0.5 * r.h - r.rho) - r.rho;
}

inline double seg_dist(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double t = std::clamp(dot(p - a, ab) / std::max(dot(ab, ab), 1e-300), 0.0, 1.0);
    return len(p - (a + t * ab));
}

inline double part_sdf(const Polygon& poly, Vec2 p) {
    const size_t m = poly.pts.size();
    double d = 1e300;
    bool inside = true;
    for (size_t i = 0; i < m; ++i) {
        const Vec2 a = poly.pts[i], b = poly.pts[(i + 1) % m];
        d = std::min(d, seg_dist(p, a, b));
        if (cross(b - a, p - a) < 0.0) inside = false; // CCW convention
    }
    return inside ? -d : d;
}

// ---- erosion / opening closed forms ---------------------------------------

// Erosion of a convex polygon: clip against each inward-offset edge line.
inline std::optional<Polygon> erode_polygon(const Polygon& poly, double rho) {
    std::vector<Vec2> cur = poly.pts;
    const size_t m = poly.pts.size();
    for (size_t i = 0; i < m && !cur.empty(); ++i) {
        const Vec2 a = poly.pts[i], b = poly.pts[(i + 1) % m];
        Vec2 e = b - a;
        const double L = len(e);
        const Vec2 nin = {-e.y / L, e.x / L}; // inward normal for CCW
        const Vec2 ao = a + rho * nin;
        std::vector<Vec2> out;
        const size_t k = cur.size();
        for (size_t j = 0; j < k; ++j) {
            const Vec2 p = cur[j], q = cur[(j + 1) % k];
            const double sp = cross(e, p - ao), sq = cross(e, q - ao);
            if (sp >= 0.0) out.push_back(p);
            if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
        cur = std::move(out);
    }
    if (cur.size() < 3) return std::nullopt;
    Polygon r;
    r.pts = std::move(cur);
    if (part_area(r) <= 1e-14) return std::nullopt;
    return r;
}

// Erosion of a primitive by rho; nullopt when empty.
inline std::optional<ConvexPart> erode_part(const ConvexPart& part, double rho) {
    if (std::holds_alternative<Disc>(part)) {
        const auto& d = std::get<Disc>(part);
        if (rho >= d.r) return std::nullopt;
        return ConvexPart{Disc{d.center, d.r - rho}};
    }
    if (std::holds_alternative<Rect>(part)) {
        const auto& r = std::get<Rect>(part);
        if (2.0 * rho >= r.w || 2.0 * rho >= r.h) return std::nullopt;
        return ConvexPart{Rect{{r.corner.x + rho, r.corner.y + rho}, r.w - 2.0 * rho, r.h - 2.0 * rho}};
    }
    if (std::holds_alternative<RoundedRect>(part)) {
        const auto& r = std::get<RoundedRect>(part);
        if (2.0 * rho >= r.w || 2.0 * rho >= r.h) return std::nullopt;
        const Vec2 c = {r.corner.x + rho, r.corner.y + rho};
        if (rho <= r.rho)
            return ConvexPart{RoundedRect{c, r.w - 2.0 * rho, r.h - 2.0 * rho, r.rho - rho}};
        return ConvexPart{Rect{c, r.w - 2.0 * rho, r.h - 2.0 * rho}};
    }
    auto e = erode_polygon(std::get<Polygon>(part), rho);
    if (!e) return std::nullopt;
    return ConvexPart{std::move(*e)};
}

inline double part_area(const ConvexPart& p) {
    return std::visit([](const auto& x) { return part_area(x); }, p);
}
inline double part_perimeter(const ConvexPart& p) {
    return std::visit([](const auto& x) { return part_perimeter(x); }, p);
}
inline double part_sdf(const ConvexPart& p, Vec2 x) {
    return std::visit([&](const auto& s) { return part_sdf(s, x); }, p);
}

// Opening C_rho = (C erode rho) dilate rho. Steiner: for a convex eroded
// set E, |C_rho| = |E| + rho P(E) + pi rho^2 and P(C_rho) = P(E) + 2 pi rho.
struct OpeningGeometry {
    double area;
    double perimeter;
    ConvexPart eroded; // membership: sdf(eroded, x) <= rho
    double rho;
};

inline OpeningGeometry opening_geometry(const ConvexPart& part, double rho) {
    auto e = erode_part(part, rho);
    if (!e) throw EmptyOpening("opening: erosion by rho is empty");
    const double ae = part_area(*e), pe = part_perimeter(*e);
    return {ae + rho * pe + M_PI * rho * rho, pe + 2.0 * M_PI * rho, std::move(*e), rho};
}

inline double opening_sdf(const OpeningGeometry& g, Vec2 x) { return part_sdf(g.eroded, x) - g.rho; }

// ---- Shape -----------------------------------------------------------------

struct Shape {
    std::vector<ConvexPart> parts; // one part = convex shape; several = union

    bool convex() const { return parts.size() == 1; }

    double area() const {
        double a = 0.0;
        for (const auto& p : parts) a += part_area(p);
        return a;
    }

    double perimeter() const {
        double s = 0.0;
        for (const auto& p : parts) s += part_perimeter(p);
        return s;
    }

    double signed_distance(Vec2 x) const {
        double d = 1e300;
        for (const auto& p : parts) d = std::min(d, part_sdf(p, x));
        return d;
    }

    bool contains(Vec2 x) const { return signed_distance(x) <= 0.0; }
};

// Boundary samples of one part, roughly uniform in arclength.
inline std::vector<Vec2> boundary_samples(const ConvexPart& part, int m) {
    std::vector<Vec2> out;
    out.reserve(m);
    if (std::holds_alternative<Disc>(part)) {
        const auto& d = std::get<Disc>(part);
        for (int k = 0; k < m; ++k) {
            const double t = 2.0 * M_PI * k / m;
            out.push_back({d.center.x + d.r * std::cos(t), d.center.y + d.r * std::sin(t)});
        }
        return out;
    }
    // generic: march along the polygonal or rounded boundary by sdf root-find
    // on rays from an interior point
    Vec2 c;
    if (std::holds_alternative<Rect>(part)) {
        const auto& r = std::get<Rect>(part);
        c = {r.corner.x + 0.5 * r.w, r.corner.y + 0.5 * r.h};
    } else if (std::holds_alternative<RoundedRect>(part)) {
        const auto& r = std::get<RoundedRect>(part);
        c = {r.corner.x + 0.5 * r.w, r.corner.y + 0.5 * r.h};
    } else {
        const auto& p = std::get<Polygon>(part);
        c = {0, 0};
        for (auto& v : p.pts) c = c + v;
        c = (1.0 / p.pts.size()) * c;
    }
    for (int k = 0; k < m; ++k) {
        const double t = 2.0 * M_PI * k / m;
        const Vec2 dir = {std::cos(t), std::sin(t)};
        double lo = 0.0, hi = 4.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (part_sdf(part, c + mid * dir) <= 0.0 ? lo : hi) = mid;
        }
        out.push_back(c + lo * dir);
    }
    return out;
}

// area > 0, perimeter > 0, isoperimetric 4*pi*A <= P^2 per part, and for
// unions pairwise disjointness with positive separation.
inline void validate(const Shape& s) {
    if (s.parts.empty()) throw BadShapeSpec("shape: no parts");
    for (const auto& p : s.parts) {
        const double a = part_area(p), per = part_perimeter(p);
        if (!(a > 0.0) || !(per > 0.0)) throw BadShapeSpec("shape: nonpositive area or perimeter");
        if (4.0 * M_PI * a > per * per * (1.0 + 1e-9)) throw BadShapeSpec("shape: isoperimetric inequality violated");
    }
    for (size_t i = 0; i + 1 < s.parts.size(); ++i)
        for (size_t j = i + 1; j < s.parts.size(); ++j) {
            const auto bi = boundary_samples(s.parts[i], 128);
            for (const auto& x : bi)
                if (part_sdf(s.parts[j], x) <= 1e-9) throw BadShapeSpec("shape: union parts not disjoint");
        }
}

// Anti-aliased indicator on the n x n periodic grid: pixel value at grid point
// (i/n, j/n) is the covered area fraction of its cell, estimated by 4x4
// subsampling.
inline GridImage rasterize(const Shape& s, int n) {
    if (n < 16) throw std::invalid_argument("rasterize: n >= 16 required");
    GridImage img(n);
    static const double off[4] = {-0.375, -0.125, 0.125, 0.375};
    const double h = 1.0 / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int cnt = 0;
            for (double ox : off)
                for (double oy : off)
                    if (s.contains({(i + ox) * h, (j + oy) * h})) ++cnt;
            img(i, j) = cnt / 16.0;
        }
    return img;
}

// ---- serialization ----------------------------------------------------------

inline std::string to_text(const ConvexPart& p) {
    std::ostringstream os;
    os.precision(17);
    if (std::holds_alternative<Disc>(p)) {
        const auto& d = std::get<Disc>(p);
        os << "disc " << d.center.x << " " << d.center.y << " " << d.r;
    } else if (std::holds_alternative<Rect>(p)) {
        const auto& r = std::get<Rect>(p);
        os << "rect " << r.corner.x << " " << r.corner.y << " " << r.w << " " << r.h;
    } else if (std::holds_alternative<RoundedRect>(p)) {
        const auto& r = std::get<RoundedRect>(p);
        os << "rrect " << r.corner.x << " " << r.corner.y << " " << r.w << " " << r.h << " " << r.rho;
    } else {
        const auto& poly = std::get<Polygon>(p);
        os << "polygon";
        for (const auto& v : poly.pts) os << " " << v.x << " " << v.y;
    }
    return os.str();
}

inline std::string to_text(const Shape& s) {
    if (s.parts.size() == 1) return to_text(s.parts[0]);
    std::string out = "union";
    for (const auto& p : s.parts) out += " " + to_text(p);
    return out;
}

namespace detail {

inline ConvexPart parse_part(std::istringstream& is, const std::string& kind) {
    if (kind == "disc") {
        Disc d;
        if (!(is >> d.center.x >> d.center.y >> d.r)) throw BadShapeSpec("disc: expected cx cy r");
        return d;
    }
    if (kind == "rect") {
        Rect r;
        if (!(is >> r.corner.x >> r.corner.y >> r.w >> r.h)) throw BadShapeSpec("rect: expected x y w h");
        return r;
    }
    if (kind == "rrect") {
        RoundedRect r;
        if (!(is >> r.corner.x >> r.corner.y >> r.w >> r.h >> r.rho)) throw BadShapeSpec("rrect: expected x y w h rho");
        return r;
    }
    if (kind == "polygon") {
        Polygon p;
        double x, y;
        while (is >> x) {
            if (!(is >> y)) throw BadShapeSpec("polygon: odd coordinate count");
            p.pts.push_back({x, y});
            // stop before a following keyword inside a union line
            std::streampos pos = is.tellg();
            std::string peek;
            if (is >> peek) {
                if (peek == "disc" || peek == "rect" || peek == "rrect" || peek == "polygon") {
                    is.seekg(pos);
                    break;
                }
                is.seekg(pos);
            } else {
                is.clear();
                break;
            }
        }
        if (p.pts.size() < 3) throw BadShapeSpec("polygon: need >= 3 vertices");
        // store CCW
        double a2 = 0.0;
        for (size_t i = 0; i < p.pts.size(); ++i) a2 += cross(p.pts[i], p.pts[(i + 1) % p.pts.size()]);
        if (a2 < 0.0) std::reverse(p.pts.begin(), p.pts.end());
        // convexity
        const size_t m = p.pts.size();
        for (size_t i = 0; i < m; ++i) {
            const Vec2 a = p.pts[i], b = p.pts[(i + 1) % m], c = p.pts[(i + 2) % m];
            if (cross(b - a, c - b) < -1e-12) throw BadShapeSpec("polygon: not convex");
        }
        return p;
    }
    throw BadShapeSpec("unknown shape kind: " + kind);
}

} // namespace detail

inline Shape parse_shape(const std::string& line) {
    std::istringstream is(line);
    std::string kind;
    if (!(is >> kind)) throw BadShapeSpec("empty shape spec");
    Shape s;
    if (kind == "union") {
        std::string sub;
        while (is >> sub) s.parts.push_back(detail::parse_part(is, sub));
        if (s.parts.size() < 2) throw BadShapeSpec("union: need >= 2 parts");
    } else {
        s.parts.push_back(detail::parse_part(is, kind));
    }
    validate(s);
    return s;
}

} // namespace tvgeo
