#include "hagge4/quad_config.hpp"

namespace hagge {

HyperbolaParam::HyperbolaParam(Rational t) : t_(std::move(t)) {
    if (t_.is_zero())
        throw InvalidParameter("hyperbola parameter is zero");
}

Point hyp_point(const Rational& t) { return HyperbolaParam(t).point(); }

QuadConfig QuadConfig::make(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& p) {
    const std::array<std::pair<const char*, const Rational*>, 4> inputs{
        {{"a", &a}, {"b", &b}, {"c", &c}, {"p", &p}}};
    for (const auto& [name, value] : inputs) {
        if (value->is_zero())
            throw InvalidParameter(std::string(name) + " = 0");
    }

    const Rational d = (a * b * c).inverse();
    const std::array<std::pair<const char*, Rational>, 4> verts{
        {{"a", a}, {"b", b}, {"c", c}, {"d", d}}};
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i].second == verts[j].second)
                throw DuplicateVertex(std::string(verts[i].first) + " = " + verts[j].first);
        }
    }
    for (const auto& [name, value] : verts) {
        if (p == value)
            throw DegeneratePosition("p collides with " + std::string(name));
    }
    for (const auto& [name, value] : verts) {
        if (p == -value)
            throw DegeneratePosition("p collides with -" + std::string(name));
    }

    return QuadConfig(HyperbolaParam(a), HyperbolaParam(b), HyperbolaParam(c),
                      HyperbolaParam(d), HyperbolaParam(p));
}

Point QuadConfig::orthocentre(int k) const {
    return hyp_point(-param(k).t());
}

std::array<int, 3> QuadConfig::triangle_vertices(int k) {
    if (k < 1 || k > 4)
        throw InvalidParameter("triangle index must be 1..4");
    std::array<int, 3> out{};
    int pos = 0;
    for (int i = 1; i <= 4; ++i) {
        if (i != k)
            out[static_cast<size_t>(pos++)] = i;
    }
    return out;
}

Circle circumcircle(const QuadConfig& cfg) {
    Rational sum_t, sum_inv, sum_sq;
    for (int k = 1; k <= 4; ++k) {
        const Rational& t = cfg.param(k).t();
        const Rational inv = t.inverse();
        sum_t += t;
        sum_inv += inv;
        sum_sq += t * t + inv * inv;
    }
    const Rational half(1, 2);
    const Point center{half * sum_t, half * sum_inv};
    return Circle(center, Rational(1, 4) * sum_sq);
}

CentersCatalogue centers(const QuadConfig& cfg) {
    const Circle circ = circumcircle(cfg);
    const Point& O = circ.center();

    Point vertex_sum{Rational(0), Rational(0)};
    for (int k = 1; k <= 4; ++k)
        vertex_sum = vertex_sum + cfg.vertex(k);

    // Vector positions relative to O: h = Σ(v − O), n = h/2, g = h/3,
    // and the concurrency target of the centroid pencil at h/4.
    const Point rel_sum = vertex_sum - Rational(4) * O;

    CentersCatalogue cat{
        .O = O,
        .H = O + rel_sum,
        .N = O + Rational(1, 2) * rel_sum,
        .G = O + Rational(1, 3) * rel_sum,
        .M_c = O + Rational(1, 4) * rel_sum,
        .H_k = {},
        .N_k = {},
        .G_k = {},
        .r_sq_circum = circ.r_sq(),
    };

    for (int k = 1; k <= 4; ++k) {
        // h_k = sum of the Δk vertex positions relative to O
        Point tri_sum{Rational(0), Rational(0)};
        for (int i : QuadConfig::triangle_vertices(k))
            tri_sum = tri_sum + cfg.vertex(i);
        const Point h_rel = tri_sum - Rational(3) * O;
        const size_t idx = static_cast<size_t>(k - 1);
        cat.H_k[idx] = O + h_rel;
        cat.N_k[idx] = O + Rational(1, 2) * h_rel;
        cat.G_k[idx] = O + Rational(1, 3) * h_rel;
    }
    return cat;
}

CircleCoeffs circumcircle_coeffs_pair_sums(const QuadConfig& cfg) {
    Rational sum_t, sum_inv, pair_sum;
    for (int k = 1; k <= 4; ++k) {
        const Rational& t = cfg.param(k).t();
        sum_t += t;
        sum_inv += t.inverse();
        for (int j = k + 1; j <= 4; ++j) {
            const Rational prod = t * cfg.param(j).t();
            pair_sum += prod + prod.inverse();
        }
    }
    return {Rational(2), Rational(-2) * sum_t, Rational(-2) * sum_inv, pair_sum};
}

CircleCoeffs circumcircle_coeffs_three_params(const QuadConfig& cfg) {
    const Rational& a = cfg.a().t();
    const Rational& b = cfg.b().t();
    const Rational& c = cfg.c().t();
    const Rational abc = a * b * c;
    const Rational sum = a + b + c;
    const Rational pair = a * b + b * c + c * a;
    return {abc, -(abc * sum + Rational(1)), -(abc * abc + pair), abc * pair + sum};
}

} // namespace hagge
