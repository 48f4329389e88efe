#include "hagge4/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "hagge4/hagge.hpp"

namespace hagge {

namespace {

// World coordinates, y not yet flipped.
struct XY {
    double x;
    double y;
};

XY to_xy(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Bounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool empty = true;

    void add(double x, double y) {
        if (empty) {
            min_x = max_x = x;
            min_y = max_y = y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    void add(const XY& p) { add(p.x, p.y); }
    void add_circle(const XY& c, double r) {
        add(c.x - r, c.y - r);
        add(c.x + r, c.y + r);
    }
};

// Flips world y so the drawing keeps the mathematical orientation while
// text stays unmirrored (no transform attribute anywhere).
class Canvas {
public:
    Canvas(const Bounds& world, int size_px) {
        double w = world.max_x - world.min_x;
        double h = world.max_y - world.min_y;
        if (w <= 0)
            w = 1;
        if (h <= 0)
            h = 1;
        x0_ = world.min_x - 0.1 * w;
        // world max_y maps to the smallest svg y
        y0_ = -world.max_y - 0.1 * h;
        width_ = 1.2 * w;
        height_ = 1.2 * h;
        extent_ = std::max(width_, height_);
        size_px_ = size_px;
    }

    double sx(double wx) const { return wx; }
    double sy(double wy) const { return -wy; }
    XY map(const XY& p) const { return {sx(p.x), sy(p.y)}; }

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double width() const { return width_; }
    double height() const { return height_; }
    double extent() const { return extent_; }

    std::string header() const {
        std::ostringstream os;
        const double px_h = size_px_ * height_ / width_;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
           << size_px_ << "\" height=\"" << fmt(px_h) << "\" viewBox=\"" << fmt(x0_) << " "
           << fmt(y0_) << " " << fmt(width_) << " " << fmt(height_) << "\">\n";
        return os.str();
    }

private:
    double x0_, y0_, width_, height_, extent_;
    int size_px_;
};

class SvgWriter {
public:
    SvgWriter(const Canvas& canvas, std::ostringstream& os) : c_(canvas), os_(os) {}

    void line(const XY& a, const XY& b, const std::string& cls) {
        const XY A = c_.map(a), B = c_.map(b);
        os_ << "<line class=\"" << cls << "\" x1=\"" << fmt(A.x) << "\" y1=\"" << fmt(A.y)
            << "\" x2=\"" << fmt(B.x) << "\" y2=\"" << fmt(B.y) << "\"/>\n";
    }

    void circle(const XY& center, double r, const std::string& cls) {
        const XY C = c_.map(center);
        os_ << "<circle class=\"" << cls << "\" cx=\"" << fmt(C.x) << "\" cy=\"" << fmt(C.y)
            << "\" r=\"" << fmt(r) << "\"/>\n";
    }

    void path(const std::vector<XY>& pts, const std::string& cls) {
        os_ << "<path class=\"" << cls << "\" d=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            const XY P = c_.map(pts[i]);
            os_ << (i == 0 ? "M" : " L") << fmt(P.x) << " " << fmt(P.y);
        }
        os_ << "\"/>\n";
    }

    void marker(const XY& p, const std::string& cls) { circle(p, 0.006 * c_.extent(), cls); }

    void label(const XY& p, const std::string& text) {
        const XY P = c_.map(p);
        const double off = 0.012 * c_.extent();
        os_ << "<text class=\"point-label\" x=\"" << fmt(P.x + off) << "\" y=\""
            << fmt(P.y - off) << "\">" << text << "</text>\n";
    }

    // Shortest segment covering all points of a common line, extended
    // 10% beyond each end. Degenerate point sets draw nothing.
    void covering_segment(const std::vector<XY>& pts, const std::string& cls) {
        if (pts.size() < 2)
            return;
        const XY& anchor = pts.front();
        double best = 0;
        XY dir{0, 0};
        for (const XY& p : pts) {
            const double dx = p.x - anchor.x, dy = p.y - anchor.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 > best) {
                best = d2;
                dir = {dx, dy};
            }
        }
        if (best == 0)
            return;
        double t_min = 0, t_max = 0;
        for (const XY& p : pts) {
            const double t =
                ((p.x - anchor.x) * dir.x + (p.y - anchor.y) * dir.y) / best;
            t_min = std::min(t_min, t);
            t_max = std::max(t_max, t);
        }
        const double pad = 0.1 * (t_max - t_min);
        t_min -= pad;
        t_max += pad;
        line({anchor.x + t_min * dir.x, anchor.y + t_min * dir.y},
             {anchor.x + t_max * dir.x, anchor.y + t_max * dir.y}, cls);
    }

    // Horizontal world line y = c across the full view.
    void horizontal(double y, const std::string& cls) {
        line({c_.x0(), y}, {c_.x0() + c_.width(), y}, cls);
    }

    // Vertical world line x = c across the full view.
    void vertical(double x, const std::string& cls) {
        const double top = -c_.y0();
        line({x, top - c_.height()}, {x, top}, cls);
    }

private:
    const Canvas& c_;
    std::ostringstream& os_;
};

std::string style_block(double extent) {
    const std::string thin = fmt(0.002 * extent);
    const std::string mid = fmt(0.003 * extent);
    const std::string thick = fmt(0.004 * extent);
    std::ostringstream os;
    os << "<style>\n"
       << "line, path, circle { fill: none; }\n"
       << ".main-circle { stroke: #1f77b4; stroke-width: " << thick << "; }\n"
       << ".hyperbola { stroke: #555555; stroke-width: " << mid << "; }\n"
       << ".axis { stroke: #aaaaaa; stroke-width: " << thin << "; stroke-dasharray: "
       << fmt(0.01 * extent) << " " << fmt(0.01 * extent) << "; }\n"
       << ".center-line { stroke: #d62728; stroke-width: " << mid << "; }\n"
       << ".letter-line { stroke: #2ca02c; stroke-width: " << thin << "; }\n"
       << ".pencil-h { stroke: #d62728; stroke-width: " << thin << "; }\n"
       << ".pencil-n { stroke: #2ca02c; stroke-width: " << thin << "; }\n"
       << ".pencil-g { stroke: #9467bd; stroke-width: " << thin << "; }\n"
       << ".point-marker { fill: #111111; stroke: none; }\n"
       << ".point-label { fill: #111111; font-family: sans-serif; font-size: "
       << fmt(0.03 * extent) << "px; }\n"
       << "</style>\n";
    return os.str();
}

// Sampled branch of xy = 1 over the parameter window [lo, hi], which
// must not contain 0.
std::vector<XY> branch_points(double lo, double hi) {
    constexpr int kSamples = 256;
    std::vector<XY> pts;
    pts.reserve(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double t = lo + (hi - lo) * i / (kSamples - 1);
        pts.push_back({t, 1.0 / t});
    }
    return pts;
}

// Parameter windows of the two branches: the range of the drawn
// parameters of each sign, padded by 20% of its length and kept away
// from the pole at 0.
std::pair<std::pair<double, double>, std::pair<double, double>>
branch_windows(const std::vector<double>& params) {
    double pos_lo = 0, pos_hi = 0, neg_lo = 0, neg_hi = 0;
    bool has_pos = false, has_neg = false;
    for (double t : params) {
        if (t > 0) {
            pos_lo = has_pos ? std::min(pos_lo, t) : t;
            pos_hi = has_pos ? std::max(pos_hi, t) : t;
            has_pos = true;
        } else if (t < 0) {
            neg_lo = has_neg ? std::min(neg_lo, t) : t;
            neg_hi = has_neg ? std::max(neg_hi, t) : t;
            has_neg = true;
        }
    }
    auto pad = [](double lo, double hi) {
        const double d = hi - lo;
        return d > 0 ? 0.2 * d : 0.5 * std::max(std::abs(lo), 1e-3);
    };
    if (has_pos) {
        const double p = pad(pos_lo, pos_hi);
        pos_hi += p;
        pos_lo = std::max(pos_lo - p, 0.2 * pos_lo);
    } else {
        pos_lo = 0.5;
        pos_hi = 2.0;
    }
    if (has_neg) {
        const double p = pad(neg_lo, neg_hi);
        neg_lo -= p;
        neg_hi = std::min(neg_hi + p, 0.2 * neg_hi);
    } else {
        neg_lo = -2.0;
        neg_hi = -0.5;
    }
    return {{pos_lo, pos_hi}, {neg_lo, neg_hi}};
}

// The eight points sharing the letter line of one vertex: per k, the image point
// of that letter on Hagge circle k and its primed partner (the foreign
// pair when k is the letter itself).
std::vector<Point> letter_points(const std::array<HaggeSystem, 4>& systems, int j) {
    std::vector<Point> pts;
    for (int k = 1; k <= 4; ++k) {
        const HaggeSystem& s = systems[static_cast<size_t>(k - 1)];
        if (k == j) {
            pts.push_back(s.foreign_ortho);
            pts.push_back(s.foreign_prime);
        } else {
            const auto tri = QuadConfig::triangle_vertices(k);
            size_t pos = 0;
            while (tri[pos] != j)
                ++pos;
            pts.push_back(s.image_pts[pos]);
            pts.push_back(s.prime_pts[pos]);
        }
    }
    return pts;
}

std::string render_config_figure(const QuadConfig& cfg, int size_px) {
    const Circle circ = circumcircle(cfg);
    const CentersCatalogue cat = centers(cfg);
    const XY O = to_xy(circ.center());
    const double radius = std::sqrt(circ.r_sq().to_double());

    std::vector<double> hyper_params;
    for (int k = 1; k <= 4; ++k) {
        hyper_params.push_back(cfg.param(k).t().to_double());
        hyper_params.push_back(-cfg.param(k).t().to_double());
    }
    hyper_params.push_back(cfg.p().t().to_double());

    Bounds world;
    world.add_circle(O, radius);
    for (int k = 1; k <= 4; ++k)
        world.add(to_xy(cfg.vertex(k)));
    world.add(to_xy(cfg.p_point()));
    for (const Point* p : {&cat.H, &cat.N, &cat.G, &cat.M_c})
        world.add(to_xy(*p));
    for (size_t i = 0; i < 4; ++i) {
        world.add(to_xy(cat.H_k[i]));
        world.add(to_xy(cat.N_k[i]));
        world.add(to_xy(cat.G_k[i]));
    }

    const Canvas canvas(world, size_px);
    std::ostringstream os;
    os << canvas.header() << style_block(canvas.extent());
    SvgWriter w(canvas, os);

    w.horizontal(0, "axis");
    w.vertical(0, "axis");

    const auto windows = branch_windows(hyper_params);
    w.path(branch_points(windows.first.first, windows.first.second), "hyperbola");
    w.path(branch_points(windows.second.first, windows.second.second), "hyperbola");

    w.circle(O, radius, "main-circle");

    for (size_t i = 0; i < 4; ++i) {
        const int k = static_cast<int>(i) + 1;
        const XY v = to_xy(cfg.vertex(k));
        w.line(v, to_xy(cat.H_k[i]), "pencil-h");
        w.line(v, to_xy(cat.N_k[i]), "pencil-n");
        w.line(v, to_xy(cat.G_k[i]), "pencil-g");
    }

    auto mark = [&w](const Point& p, const std::string& name) {
        w.marker(to_xy(p), "point-marker");
        w.label(to_xy(p), name);
    };
    for (int k = 1; k <= 4; ++k)
        mark(cfg.vertex(k), std::string(1, QuadConfig::letter(k)));
    mark(cfg.p_point(), "P");
    mark(circ.center(), "O");
    mark(cat.H, "H");
    mark(cat.N, "N");
    mark(cat.G, "G");
    mark(cat.M_c, "M_c");
    for (size_t i = 0; i < 4; ++i) {
        const std::string suffix = std::to_string(i + 1);
        mark(cat.H_k[i], "H" + suffix);
        mark(cat.N_k[i], "N" + suffix);
        mark(cat.G_k[i], "G" + suffix);
    }

    os << "</svg>\n";
    return os.str();
}

std::string render_hagge_figure(const QuadConfig& cfg, int size_px) {
    const Circle circ = circumcircle(cfg);
    const std::array<HaggeSystem, 4> systems = {hagge_circle(cfg, 1), hagge_circle(cfg, 2),
                                                hagge_circle(cfg, 3), hagge_circle(cfg, 4)};
    const auto axis_pair = axes(cfg);
    const XY O = to_xy(circ.center());
    const double radius = std::sqrt(circ.r_sq().to_double());

    Bounds world;
    world.add_circle(O, radius);
    for (const HaggeSystem& s : systems)
        world.add_circle(to_xy(s.center_Q), std::sqrt(s.circle.r_sq().to_double()));
    for (int k = 1; k <= 4; ++k)
        world.add(to_xy(cfg.vertex(k)));
    world.add(to_xy(cfg.p_point()));

    const Canvas canvas(world, size_px);
    std::ostringstream os;
    os << canvas.header() << style_block(canvas.extent());
    SvgWriter w(canvas, os);

    // axes L: y = 1/p and L': x = p
    w.horizontal(axis_pair.first.n().to_double(), "axis");
    w.vertical(axis_pair.second.n().to_double(), "axis");

    w.circle(O, radius, "main-circle");
    for (const HaggeSystem& s : systems)
        w.circle(to_xy(s.center_Q), std::sqrt(s.circle.r_sq().to_double()), "main-circle");

    {
        std::vector<XY> pts{to_xy(cfg.p_point())};
        for (const HaggeSystem& s : systems)
            pts.push_back(to_xy(s.center_Q));
        w.covering_segment(pts, "center-line");
    }

    for (int j = 1; j <= 4; ++j) {
        std::vector<XY> pts{to_xy(cfg.p_point())};
        for (const Point& p : letter_points(systems, j))
            pts.push_back(to_xy(p));
        w.covering_segment(pts, "letter-line");
    }

    for (int j = 1; j <= 4; ++j) {
        for (const Point& p : letter_points(systems, j))
            w.marker(to_xy(p), "point-marker");
    }

    auto mark = [&w](const Point& p, const std::string& name) {
        w.marker(to_xy(p), "point-marker");
        w.label(to_xy(p), name);
    };
    for (int k = 1; k <= 4; ++k)
        mark(cfg.vertex(k), std::string(1, QuadConfig::letter(k)));
    mark(cfg.p_point(), "P");
    mark(circ.center(), "O");
    for (size_t i = 0; i < 4; ++i)
        mark(systems[i].center_Q, "Q" + std::to_string(i + 1));

    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_svg(const QuadConfig& cfg, const RenderSpec& spec) {
    if (spec.size_px < 100)
        throw InvalidParameter("size must be at least 100");
    return spec.figure == Figure::Config ? render_config_figure(cfg, spec.size_px)
                                         : render_hagge_figure(cfg, spec.size_px);
}

} // namespace hagge
