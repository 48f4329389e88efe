#pragma once

/**
 * @file quad_config.hpp
 * @brief Cyclic quadrilateral on the rectangular hyperbola xy = 1.
 *
 * The configuration is parametrized by (a, b, c, p); the fourth vertex
 * parameter is forced to d = 1/(abc) so that abcd = 1 holds by
 * construction and ABCD is concyclic. Δk denotes the triangle on the
 * three vertices other than vertex k, so Δ1 = BCD, ..., Δ4 = ABC.
 */

#include <array>

#include "hagge4/geometry.hpp"

namespace hagge {

/// Nonzero hyperbola parameter t, standing for the point (t, 1/t).
class HyperbolaParam {
public:
    explicit HyperbolaParam(Rational t);

    const Rational& t() const { return t_; }
    Point point() const { return {t_, t_.inverse()}; }

    friend bool operator==(const HyperbolaParam& a, const HyperbolaParam& b) {
        return a.t_ == b.t_;
    }

private:
    Rational t_;
};

inline Point hyp_point(const HyperbolaParam& t) { return t.point(); }
Point hyp_point(const Rational& t);

class QuadConfig {
public:
    /// Validates and builds a configuration; d is derived as 1/(abc).
    /// Validation order: zero inputs, then duplicate vertices, then
    /// collisions of p with ±a, ±b, ±c, ±d; the first failure wins.
    static QuadConfig make(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& p);

    const HyperbolaParam& a() const { return params_[0]; }
    const HyperbolaParam& b() const { return params_[1]; }
    const HyperbolaParam& c() const { return params_[2]; }
    const HyperbolaParam& d() const { return params_[3]; }
    const HyperbolaParam& p() const { return p_; }

    /// Vertex parameter, k = 1..4 for A..D.
    const HyperbolaParam& param(int k) const { return params_.at(static_cast<size_t>(k - 1)); }
    Point vertex(int k) const { return param(k).point(); }
    static char letter(int k) { return static_cast<char>('A' + k - 1); }

    Point p_point() const { return p_.point(); }

    /// Orthocentre of Δk; its hyperbola parameter is the negated
    /// parameter of the foreign vertex k.
    Point orthocentre(int k) const;

    /// Vertex indices of Δk in letter order (all of 1..4 except k).
    static std::array<int, 3> triangle_vertices(int k);

private:
    QuadConfig(HyperbolaParam a, HyperbolaParam b, HyperbolaParam c, HyperbolaParam d,
               HyperbolaParam p)
        : params_{std::move(a), std::move(b), std::move(c), std::move(d)}, p_(std::move(p)) {}

    std::array<HyperbolaParam, 4> params_;
    HyperbolaParam p_;
};

/// O, H, N, G and the concurrency target M_c, plus the per-triangle
/// orthocentres H_k, nine-point centres N_k and centroids G_k.
struct CentersCatalogue {
    Point O;
    Point H;
    Point N;
    Point G;
    Point M_c;
    std::array<Point, 4> H_k;
    std::array<Point, 4> N_k;
    std::array<Point, 4> G_k;
    Rational r_sq_circum;
};

/// Circumcircle of ABCD: center (Σt/2, Σ(1/t)/2), squared radius
/// Σ(t² + 1/t²)/4.
Circle circumcircle(const QuadConfig& cfg);

CentersCatalogue centers(const QuadConfig& cfg);

/// Reference closed form of the circumcircle equation with leading
/// coefficient 2 and the constant written as the sum over parameter
/// pairs of ts + 1/(ts).
CircleCoeffs circumcircle_coeffs_pair_sums(const QuadConfig& cfg);

/// Reference closed form of the circumcircle equation in a, b, c only
/// (d eliminated through abcd = 1), leading coefficient abc.
CircleCoeffs circumcircle_coeffs_three_params(const QuadConfig& cfg);

} // namespace hagge
