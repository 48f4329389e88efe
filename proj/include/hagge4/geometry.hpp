#pragma once

/**
 * @file geometry.hpp
 * @brief Exact plane primitives and ruler-and-compass constructions.
 *
 * Points, lines and circles over Rational coordinates. Circles carry the
 * squared radius so every quantity stays inside the rational field; all
 * predicates are exact determinant signs, no epsilons.
 */

#include <array>
#include <ostream>

#include "hagge4/rational.hpp"

namespace hagge {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << ", " << p.y << ")";
}

inline Point midpoint(const Point& a, const Point& b) {
    Rational half(1, 2);
    return {half * (a.x + b.x), half * (a.y + b.y)};
}

/// Locus l*x + m*y = n, stored canonically: the first nonzero of (l, m)
/// is 1, so two lines are equal iff their fields are equal.
class Line {
public:
    Line(Rational l, Rational m, Rational n);

    const Rational& l() const { return l_; }
    const Rational& m() const { return m_; }
    const Rational& n() const { return n_; }

    bool contains(const Point& p) const { return l_ * p.x + m_ * p.y == n_; }

    friend bool operator==(const Line& a, const Line& b) {
        return a.l_ == b.l_ && a.m_ == b.m_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

private:
    Rational l_, m_, n_;
};

inline std::ostream& operator<<(std::ostream& os, const Line& ln) {
    return os << ln.l() << "*x + " << ln.m() << "*y = " << ln.n();
}

/// Center plus squared radius. The (D,E,F) view of
/// x^2 + y^2 + Dx + Ey + F = 0 is exposed via coef_*().
class Circle {
public:
    Circle(Point center, Rational r_sq);

    const Point& center() const { return center_; }
    const Rational& r_sq() const { return r_sq_; }

    Rational coef_d() const { return Rational(-2) * center_.x; }
    Rational coef_e() const { return Rational(-2) * center_.y; }
    Rational coef_f() const { return center_.x * center_.x + center_.y * center_.y - r_sq_; }

    bool contains(const Point& p) const;

    friend bool operator==(const Circle& a, const Circle& b) {
        return a.center_ == b.center_ && a.r_sq_ == b.r_sq_;
    }
    friend bool operator!=(const Circle& a, const Circle& b) { return !(a == b); }

private:
    Point center_;
    Rational r_sq_;
};

/// Circle equation scaled to a chosen leading coefficient:
/// lead*(x^2 + y^2) + x_coef*x + y_coef*y + constant = 0.
struct CircleCoeffs {
    Rational lead;
    Rational x_coef;
    Rational y_coef;
    Rational constant;

    friend bool operator==(const CircleCoeffs&, const CircleCoeffs&) = default;
};

CircleCoeffs scaled_coeffs(const Circle& c, const Rational& lead);

Line line_through(const Point& p1, const Point& p2);

/// Chord of xy = 1 joining parameters s and t: s*t*y + x = s + t.
Line chord_of_hyperbola(const Rational& s, const Rational& t);

Line perpendicular_bisector(const Point& p1, const Point& p2);

Point intersect_lines(const Line& l1, const Line& l2);

Point reflect_point(const Point& p, const Line& ln);

Circle circle_through(const Point& p1, const Point& p2, const Point& p3);

struct SecondIntersection {
    Point point;
    bool tangent; // line touches the circle at p0; point == p0
};

/// Other intersection of line(p0, direction_point) with c; p0 must lie
/// on c exactly.
SecondIntersection second_intersection(const Circle& c, const Point& p0,
                                       const Point& direction_point);

/// Twice the signed area of the triangle p1 p2 p3.
Rational orientation(const Point& p1, const Point& p2, const Point& p3);

bool collinear(const Point& p1, const Point& p2, const Point& p3);

Rational dist_sq(const Point& p1, const Point& p2);

/// Exact cross product of (b - a) and (d - c); zero iff parallel.
Rational cross_of_directions(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace hagge
