#include "hagge4/hagge.hpp"

namespace hagge {

std::pair<Line, Line> axes(const QuadConfig& cfg) {
    const Rational& p = cfg.p().t();
    return {Line(Rational(0), Rational(1), p.inverse()), Line(Rational(1), Rational(0), p)};
}

IndirectSimilarity similarity(const QuadConfig& cfg, int k) {
    const Rational& p = cfg.p().t();
    const Rational& f = cfg.param(k).t();
    // p ∉ {±f} is a QuadConfig invariant, so the ratio is finite and nonzero.
    return IndirectSimilarity{axes(cfg).first, cfg.p_point(), (p + f) / (p - f)};
}

std::array<Point, 4> circum_second_points(const QuadConfig& cfg) {
    const Circle circ = circumcircle(cfg);
    const Point P = cfg.p_point();
    std::array<Point, 4> out{};
    for (int k = 1; k <= 4; ++k)
        out[static_cast<size_t>(k - 1)] = second_intersection(circ, cfg.vertex(k), P).point;
    return out;
}

std::array<Point, 3> prime_reflections(const QuadConfig& cfg, int k) {
    const std::array<Point, 4> primed = circum_second_points(cfg);
    const std::array<int, 3> tri = QuadConfig::triangle_vertices(k);
    std::array<Point, 3> out{};
    for (size_t i = 0; i < tri.size(); ++i) {
        const int vertex = tri[i];
        std::array<Rational, 2> other_params{};
        size_t pos = 0;
        for (int j : tri) {
            if (j != vertex)
                other_params[pos++] = cfg.param(j).t();
        }
        const Line opposite_side = chord_of_hyperbola(other_params[0], other_params[1]);
        out[i] = reflect_point(primed[static_cast<size_t>(vertex - 1)], opposite_side);
    }
    return out;
}

ImageAndForeign image_and_foreign_points(const QuadConfig& cfg, int k) {
    const IndirectSimilarity sim = similarity(cfg, k);
    const std::array<int, 3> tri = QuadConfig::triangle_vertices(k);

    ImageAndForeign out{};
    for (size_t i = 0; i < tri.size(); ++i)
        out.images[i] = sim.apply(cfg.vertex(tri[i]));

    out.foreign_ortho = cfg.orthocentre(k);
    const Circle gamma_k = circle_through(out.images[0], out.images[1], out.images[2]);
    const SecondIntersection sec =
        second_intersection(gamma_k, out.foreign_ortho, cfg.p_point());
    out.foreign_prime = sec.point;
    out.foreign_prime_tangent = sec.tangent;
    return out;
}

HaggeSystem hagge_circle(const QuadConfig& cfg, int k) {
    const IndirectSimilarity sim = similarity(cfg, k);
    const ImageAndForeign pts = image_and_foreign_points(cfg, k);
    Circle circle = circle_through(pts.images[0], pts.images[1], pts.images[2]);
    return HaggeSystem{
        .k = k,
        .circle = circle,
        .center_Q = circle.center(),
        .sim = sim,
        .prime_pts = prime_reflections(cfg, k),
        .image_pts = pts.images,
        .foreign_ortho = pts.foreign_ortho,
        .foreign_prime = pts.foreign_prime,
        .foreign_prime_tangent = pts.foreign_prime_tangent,
        .isogonal = isogonal_conjugate(cfg, k),
    };
}

Point isogonal_conjugate(const QuadConfig& cfg, int k) {
    const Rational& p = cfg.p().t();
    Rational sum, pair, prod(1);
    const std::array<int, 3> tri = QuadConfig::triangle_vertices(k);
    for (size_t i = 0; i < tri.size(); ++i) {
        const Rational& t = cfg.param(tri[i]).t();
        sum += t;
        prod *= t;
        for (size_t j = i + 1; j < tri.size(); ++j)
            pair += t * cfg.param(tri[j]).t();
    }
    const Rational denom = prod * p - Rational(1); // nonzero: p differs from the foreign parameter
    return {(sum - p) / -denom, (p * pair - prod) / denom};
}

QuadrangleMetrics quadrangle_metrics(const QuadConfig& cfg) {
    const std::array<Point, 4> primed = circum_second_points(cfg);
    std::array<Point, 4> isog{};
    for (int k = 1; k <= 4; ++k)
        isog[static_cast<size_t>(k - 1)] = isogonal_conjugate(cfg, k);

    QuadrangleMetrics metrics{};
    size_t pair_idx = 0;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            metrics.sq_dists_prime[pair_idx] = dist_sq(primed[i], primed[j]);
            metrics.sq_dists_isog[pair_idx] = dist_sq(isog[i], isog[j]);
            ++pair_idx;
        }
    }
    metrics.ratio_sq = quadrangle_ratio_closed_form(cfg);
    return metrics;
}

Point second_point_closed_form(const QuadConfig& cfg, int k) {
    const Rational& p = cfg.p().t();
    const Rational& t = cfg.param(k).t();
    // The two "middle" parameters; by abcd = 1 the value is independent
    // of which two of the remaining three are chosen.
    const std::array<int, 3> rest = QuadConfig::triangle_vertices(k);
    const Rational& r = cfg.param(rest[0]).t();
    const Rational& s = cfg.param(rest[1]).t();

    const Rational trs = t * r * s;
    const Rational rs = r * s;
    const Rational r_plus_s = r + s;
    const Rational denom = rs * (t * t * p * p + Rational(1));
    const Rational x =
        (t * p * p * (trs * r_plus_s + Rational(1)) -
         p * (trs * trs + t * r_plus_s - rs) + trs) /
        denom;
    const Rational y =
        (trs * p * p + p * (t * t * rs - trs * r_plus_s - Rational(1)) +
         t * rs * rs + r_plus_s) /
        denom;
    return {x, y};
}

CircleCoeffs hagge_coeffs_closed_form(const QuadConfig& cfg, int k) {
    const Rational& p = cfg.p().t();
    Rational sum, pair, prod(1);
    const std::array<int, 3> tri = QuadConfig::triangle_vertices(k);
    for (size_t i = 0; i < tri.size(); ++i) {
        const Rational& t = cfg.param(tri[i]).t();
        sum += t;
        prod *= t;
        for (size_t j = i + 1; j < tri.size(); ++j)
            pair += t * cfg.param(tri[j]).t();
    }
    const Rational prod2 = prod * prod;
    const Rational prod3 = prod2 * prod;
    const Rational lead = prod * (prod * p - Rational(1));
    const Rational x_coef = -(prod2 * p * sum + prod * sum - Rational(3) * prod * p + Rational(1));
    const Rational y_coef = prod3 * p - Rational(3) * prod2 + (prod * p + Rational(1)) * pair;
    const Rational constant = Rational(-2) * prod3 + prod2 * p * sum + prod * pair -
                              (prod * p + Rational(1)) * sum - Rational(2) * p;
    return {lead, x_coef, y_coef, constant};
}

Rational prime_pair_dist_sq_closed_form(const QuadConfig& cfg) {
    const Rational& a = cfg.a().t();
    const Rational& b = cfg.b().t();
    const Rational& c = cfg.c().t();
    const Rational& d = cfg.d().t();
    const Rational& p = cfg.p().t();
    const Rational ad = a - d;
    const Rational bp = b - p;
    const Rational cp = c - p;
    const Rational bc = b * c;
    const Rational num = ad * ad * bp * bp * cp * cp * (bc * bc + Rational(1));
    const Rational den = bc * bc * (a * a * p * p + Rational(1)) * (d * d * p * p + Rational(1));
    return num / den;
}

Rational isog_pair_dist_sq_closed_form(const QuadConfig& cfg) {
    const Rational& a = cfg.a().t();
    const Rational& b = cfg.b().t();
    const Rational& c = cfg.c().t();
    const Rational& d = cfg.d().t();
    const Rational& p = cfg.p().t();
    const Rational ad = a - d;
    const Rational bc = b * c;
    const Rational num = ad * ad * (bc * bc + Rational(1)) * (b * b * p * p + Rational(1)) *
                         (c * c * p * p + Rational(1));
    const Rational d1 = a * b * c * p - Rational(1);
    const Rational d2 = b * c * d * p - Rational(1);
    return num / (d1 * d1 * d2 * d2);
}

Rational quadrangle_ratio_closed_form(const QuadConfig& cfg) {
    const Rational& p = cfg.p().t();
    Rational num(1), den(1);
    for (int k = 1; k <= 4; ++k) {
        const Rational& t = cfg.param(k).t();
        num *= t * t * p * p + Rational(1);
        const Rational diff = t - p;
        den *= diff * diff;
    }
    return num / den;
}

} // namespace hagge
