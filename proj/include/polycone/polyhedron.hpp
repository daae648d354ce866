#ifndef POLYCONE_POLYHEDRON_HPP
#define POLYCONE_POLYHEDRON_HPP

#include <set>

#include "polycone/cone.hpp"

namespace polycone {

/// Polyhedron in outer description: P = { x : Ax <= b }.
class HPolyhedron {
public:
    HPolyhedron(RatMatrix a, RatVector b);

    const RatMatrix& A() const { return a_; }
    const RatVector& b() const { return b_; }
    std::size_t ambient_dim() const { return a_.cols(); }
    std::size_t num_rows() const { return a_.rows(); }

    bool contains(const RatVector& x) const;

    /// True iff the recession cone { x : Ax <= 0 } contains the direction.
    bool recession_contains(const RatVector& w) const;

    friend bool operator==(const HPolyhedron& a, const HPolyhedron& b) = default;

private:
    RatMatrix a_;
    RatVector b_;
};

/// Polyhedron in inner description: P = conv(points) + ccone(rays).
/// Both parts are exactly deduplicated sets; rays never contain zero.
/// An inner description with no points and no rays is the empty polyhedron.
class VPolyhedron {
public:
    explicit VPolyhedron(std::size_t dim) : dim_(dim) {}

    std::size_t ambient_dim() const { return dim_; }
    bool empty_set() const { return points_.empty() && rays_.empty(); }

    void add_point(const RatVector& v);
    void add_ray(const RatVector& w);

    const std::set<RatVector>& points() const { return points_; }
    const std::set<RatVector>& rays() const { return rays_; }

    friend bool operator==(const VPolyhedron& a, const VPolyhedron& b) = default;

private:
    std::size_t dim_;
    std::set<RatVector> points_;
    std::set<RatVector> rays_;
};

/// Lifts P = { x : Ax <= b } to the cone { (x,t) : Ax - tb <= 0, -t <= 0 }
/// in one extra dimension (the nonnegativity row is appended last).
HCone homogenize(const HPolyhedron& p);

/// Inverse of homogenization on a generator set of a lifted cone: a generator
/// with positive last coordinate t becomes the point (first n coordinates)/t,
/// one with t = 0 becomes a ray. Throws InputError on a negative t.
VPolyhedron dehomogenize(const GeneratorSet& x);

/// Outer to inner description through the cone engine. With the empty set,
/// both parts of the result are empty.
VPolyhedron h_to_v(const HPolyhedron& p, const ConversionOptions& options = {});

/// Inner to outer description through polarity: generators are lifted, the
/// polar cone is converted, and its generators are read back as inequalities.
/// Throws InputError for an inner description with no points and no rays.
/// A ray-only description is interpreted as a cone anchored at the origin.
HPolyhedron v_to_h(const VPolyhedron& q, const ConversionOptions& options = {});

/// Semantic equality of the described point sets (mutual containment of the
/// computed inner descriptions in the opposite outer descriptions).
bool h_equal(const HPolyhedron& p1, const HPolyhedron& p2);

} // namespace polycone

#endif
