#include "hagge4/geometry.hpp"

namespace hagge {

Line::Line(Rational l, Rational m, Rational n)
    : l_(std::move(l)), m_(std::move(m)), n_(std::move(n)) {
    if (l_.is_zero() && m_.is_zero())
        throw InvalidParameter("line with zero normal vector");
    const Rational scale = (l_.is_zero() ? m_ : l_).inverse();
    l_ *= scale;
    m_ *= scale;
    n_ *= scale;
}

Circle::Circle(Point center, Rational r_sq)
    : center_(std::move(center)), r_sq_(std::move(r_sq)) {
    if (r_sq_.sign() <= 0)
        throw InvalidParameter("circle with non-positive squared radius");
}

bool Circle::contains(const Point& p) const {
    return dist_sq(center_, p) == r_sq_;
}

CircleCoeffs scaled_coeffs(const Circle& c, const Rational& lead) {
    return {lead, lead * c.coef_d(), lead * c.coef_e(), lead * c.coef_f()};
}

Line line_through(const Point& p1, const Point& p2) {
    if (p1 == p2)
        throw CoincidentPoints("line through a single point");
    const Rational dx = p2.x - p1.x;
    const Rational dy = p2.y - p1.y;
    // normal (dy, -dx) is orthogonal to the direction
    return Line(dy, -dx, dy * p1.x - dx * p1.y);
}

Line chord_of_hyperbola(const Rational& s, const Rational& t) {
    if (s.is_zero() || t.is_zero())
        throw InvalidParameter("hyperbola parameter is zero");
    if (s == t)
        throw CoincidentParameters("chord endpoints share parameter " + s.str());
    return Line(Rational(1), s * t, s + t);
}

Line perpendicular_bisector(const Point& p1, const Point& p2) {
    if (p1 == p2)
        throw CoincidentPoints("perpendicular bisector of a single point");
    const Rational dx = p2.x - p1.x;
    const Rational dy = p2.y - p1.y;
    const Point mid = midpoint(p1, p2);
    // normal along p1p2
    return Line(dx, dy, dx * mid.x + dy * mid.y);
}

Point intersect_lines(const Line& l1, const Line& l2) {
    const Rational det = l1.l() * l2.m() - l2.l() * l1.m();
    if (det.is_zero())
        throw ParallelLines();
    const Rational x = (l1.n() * l2.m() - l2.n() * l1.m()) / det;
    const Rational y = (l1.l() * l2.n() - l2.l() * l1.n()) / det;
    return {x, y};
}

Point reflect_point(const Point& p, const Line& ln) {
    const Rational& l = ln.l();
    const Rational& m = ln.m();
    const Rational& n = ln.n();
    const Rational norm_sq = l * l + m * m; // > 0 by Line invariant
    const Rational h = (p.x * (m * m - l * l) + Rational(2) * l * (n - p.y * m)) / norm_sq;
    const Rational k =
        (Rational(2) * m * n + p.y * (l * l - m * m) - Rational(2) * p.x * l * m) / norm_sq;
    return {h, k};
}

Circle circle_through(const Point& p1, const Point& p2, const Point& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw CoincidentPoints("circle through coincident points");
    if (collinear(p1, p2, p3))
        throw CollinearPoints("circle through collinear points");
    const Point center =
        intersect_lines(perpendicular_bisector(p1, p2), perpendicular_bisector(p2, p3));
    return Circle(center, dist_sq(center, p1));
}

SecondIntersection second_intersection(const Circle& c, const Point& p0,
                                       const Point& direction_point) {
    if (!c.contains(p0))
        throw NotOnCircle("base point is not on the circle");
    if (direction_point == p0)
        throw CoincidentPoints("direction point coincides with base point");
    const Point dir = direction_point - p0;
    const Point rel = p0 - c.center();
    // p0 + t*dir on the circle: t * (t*|dir|^2 + 2*dir.rel) = 0; the
    // known root t = 0 is p0 itself.
    const Rational dir_sq = dir.x * dir.x + dir.y * dir.y;
    const Rational lin = Rational(2) * (dir.x * rel.x + dir.y * rel.y);
    if (lin.is_zero())
        return {p0, true};
    const Rational t = -lin / dir_sq;
    return {p0 + t * dir, false};
}

Rational orientation(const Point& p1, const Point& p2, const Point& p3) {
    return (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x);
}

bool collinear(const Point& p1, const Point& p2, const Point& p3) {
    return orientation(p1, p2, p3).is_zero();
}

Rational dist_sq(const Point& p1, const Point& p2) {
    const Rational dx = p1.x - p2.x;
    const Rational dy = p1.y - p2.y;
    return dx * dx + dy * dy;
}

Rational cross_of_directions(const Point& a, const Point& b, const Point& c, const Point& d) {
    return (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
}

} // namespace hagge
