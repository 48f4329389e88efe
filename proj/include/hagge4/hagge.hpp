#pragma once

/**
 * @file hagge.hpp
 * @brief Indirect similarities and the four Hagge circles.
 *
 * For each triangle Δk the engine builds the orientation-reversing
 * similarity σk with centre P (reflection in the axis y = 1/p followed
 * by a dilation about P), the Hagge circle Γk through the σk-images of
 * the Δk vertices, the reflected points X_k', the foreign-letter points
 * and the isogonal conjugate Pg_k, plus the quadrangle metrics that
 * witness the similarity of Pg1Pg2Pg3Pg4 and A'B'C'D'.
 */

#include <array>
#include <utility>

#include "hagge4/quad_config.hpp"

namespace hagge {

/// Reflection in `mirror` followed by a dilation about `center` with
/// the signed ratio `factor`. The center lies on the mirror, so it is
/// a fixed point of the composite.
struct IndirectSimilarity {
    Line mirror;
    Point center;
    Rational factor;

    Point apply(const Point& p) const {
        const Point reflected = reflect_point(p, mirror);
        return center + factor * (reflected - center);
    }
};

struct ImageAndForeign {
    std::array<Point, 3> images; ///< σk(vertex) for the Δk vertices, letter order
    Point foreign_ortho;         ///< orthocentre of Δk (the foreign-letter point on Γk)
    Point foreign_prime;         ///< second intersection of the orthocentre–P line with Γk
    bool foreign_prime_tangent;  ///< true if that line only touches Γk
};

/// Everything attached to one Hagge circle Γk.
struct HaggeSystem {
    int k;
    Circle circle;
    Point center_Q;
    IndirectSimilarity sim;
    std::array<Point, 3> prime_pts; ///< X' reflected in the opposite side of Δk, letter order
    std::array<Point, 3> image_pts; ///< σk(X) for X in Δk, letter order
    Point foreign_ortho;
    Point foreign_prime;
    bool foreign_prime_tangent;
    Point isogonal; ///< Pg_k
};

struct QuadrangleMetrics {
    /// Pairwise squared distances of A'B'C'D', pair order
    /// (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
    std::array<Rational, 6> sq_dists_prime;
    /// Same pair order for Pg1..Pg4 (correspondence Pg_k <-> k-th primed point).
    std::array<Rational, 6> sq_dists_isog;
    Rational ratio_sq;
};

/// The two invariant axes of all four similarities: L: y = 1/p and
/// L': x = p, both through P and parallel to the asymptotes of xy = 1.
std::pair<Line, Line> axes(const QuadConfig& cfg);

/// σk for Δk. With f the parameter of the foreign vertex, the signed
/// dilation ratio is (p + f)/(p − f); σk sends the foreign vertex to
/// the orthocentre of Δk.
IndirectSimilarity similarity(const QuadConfig& cfg, int k);

/// Second intersections A', B', C', D' of the vertex–P chords with the
/// circumcircle, letter order.
std::array<Point, 4> circum_second_points(const QuadConfig& cfg);

/// For each vertex X of Δk, the reflection of X' in the side of Δk
/// opposite X; all three lie on Γk.
std::array<Point, 3> prime_reflections(const QuadConfig& cfg, int k);

ImageAndForeign image_and_foreign_points(const QuadConfig& cfg, int k);

/// Builds Γk through the three σk-images together with its whole point
/// system. Γk is constructed, never read off a formula; closed forms
/// are cross-check material only.
HaggeSystem hagge_circle(const QuadConfig& cfg, int k);

/// Isogonal conjugate of P with respect to Δk, from the closed form in
/// the elementary symmetric functions of the Δk parameters.
Point isogonal_conjugate(const QuadConfig& cfg, int k);

QuadrangleMetrics quadrangle_metrics(const QuadConfig& cfg);

// --- reference closed forms, used as cross-check targets ---

/// Closed form for the second intersection X' of the vertex-k chord
/// through P with the circumcircle.
Point second_point_closed_form(const QuadConfig& cfg, int k);

/// Closed form for the Γk equation scaled by u(up − 1), where u is the
/// product of the Δk parameters. The constant term of the reference
/// form is known to disagree with the constructed circle; callers
/// compare the groups individually.
CircleCoeffs hagge_coeffs_closed_form(const QuadConfig& cfg, int k);

/// Closed form for (A'D')²: the squared distance between the primed
/// points of the letters A and D.
Rational prime_pair_dist_sq_closed_form(const QuadConfig& cfg);

/// Closed form for (Pg1 Pg4)².
Rational isog_pair_dist_sq_closed_form(const QuadConfig& cfg);

/// Closed form for the squared similarity ratio between the isogonal
/// quadrangle and the primed quadrangle: Π(t²p²+1) / Π(t−p)².
Rational quadrangle_ratio_closed_form(const QuadConfig& cfg);

} // namespace hagge
