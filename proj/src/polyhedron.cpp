#include "polycone/polyhedron.hpp"

#include <utility>

namespace polycone {

HPolyhedron::HPolyhedron(RatMatrix a, RatVector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.dim()) throw DimensionError("inequality matrix and bound vector disagree");
    if (a_.cols() == 0) throw DimensionError("polyhedron ambient dimension must be at least 1");
}

bool HPolyhedron::contains(const RatVector& x) const {
    const RatVector ax = a_ * x;
    for (std::size_t i = 0; i < ax.dim(); ++i)
        if (ax[i] > b_[i]) return false;
    return true;
}

bool HPolyhedron::recession_contains(const RatVector& w) const {
    const RatVector aw = a_ * w;
    for (std::size_t i = 0; i < aw.dim(); ++i)
        if (aw[i].sign() > 0) return false;
    return true;
}

void VPolyhedron::add_point(const RatVector& v) {
    if (v.dim() != dim_) throw DimensionError("point dimension mismatch");
    points_.insert(v);
}

void VPolyhedron::add_ray(const RatVector& w) {
    if (w.dim() != dim_) throw DimensionError("ray dimension mismatch");
    if (w.is_zero()) return;
    rays_.insert(w);
}

HCone homogenize(const HPolyhedron& p) {
    const std::size_t n = p.ambient_dim();
    RatMatrix b(p.num_rows() + 1, n + 1);
    for (std::size_t r = 0; r < p.num_rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) b(r, c) = p.A()(r, c);
        b(r, n) = -p.b()[r];
    }
    b(p.num_rows(), n) = -1; // t >= 0
    return HCone::from_inequalities(std::move(b));
}

VPolyhedron dehomogenize(const GeneratorSet& x) {
    if (x.dim() == 0) throw DimensionError("dehomogenize needs at least one coordinate");
    const std::size_t n = x.dim() - 1;
    VPolyhedron out(n);
    for (const RatVector& g : x.vectors()) {
        const Rational& t = g[n];
        if (t.sign() < 0)
            throw InputError("dehomogenize: generator with negative last coordinate");
        RatVector head(n);
        for (std::size_t i = 0; i < n; ++i) head[i] = g[i];
        if (t.sign() == 0) {
            out.add_ray(head);
        } else {
            head *= t.reciprocal();
            out.add_point(head);
        }
    }
    return out;
}

VPolyhedron h_to_v(const HPolyhedron& p, const ConversionOptions& options) {
    VPolyhedron v = dehomogenize(convert_cone(homogenize(p), options).generators);
    if (v.points().empty() && !v.rays().empty()) {
        // conv of nothing is the empty set; rays alone cannot rescue it
        return VPolyhedron(p.ambient_dim());
    }
    return v;
}

HPolyhedron v_to_h(const VPolyhedron& q, const ConversionOptions& options) {
    if (q.empty_set()) throw InputError("v_to_h: inner description with no points and no rays");
    const std::size_t n = q.ambient_dim();

    RatMatrix lifted(0, n + 1);
    auto lift = [&](const RatVector& v, const Rational& last) {
        RatVector row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = v[i];
        row[n] = last;
        lifted.append_row(row);
    };
    // ray-only input is a cone anchored at the origin
    if (q.points().empty()) lift(RatVector(n), 1);
    for (const RatVector& v : q.points()) lift(v, 1);
    for (const RatVector& w : q.rays()) lift(w, 0);

    const GeneratorSet polar = convert_cone(HCone::from_inequalities(lifted), options).generators;

    RatMatrix a(polar.size(), n);
    RatVector b(polar.size());
    std::size_t r = 0;
    for (const RatVector& y : polar.vectors()) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = y[c];
        b[r] = -y[n];
        ++r;
    }
    return HPolyhedron(std::move(a), std::move(b));
}

namespace {

bool contains_all(const HPolyhedron& outer, const VPolyhedron& inner) {
    for (const RatVector& v : inner.points())
        if (!outer.contains(v)) return false;
    for (const RatVector& w : inner.rays())
        if (!outer.recession_contains(w)) return false;
    return true;
}

} // namespace

bool h_equal(const HPolyhedron& p1, const HPolyhedron& p2) {
    if (p1.ambient_dim() != p2.ambient_dim())
        throw DimensionError("h_equal: ambient dimensions differ");
    const VPolyhedron v1 = h_to_v(p1);
    const VPolyhedron v2 = h_to_v(p2);
    if (v1.empty_set() || v2.empty_set()) return v1.empty_set() == v2.empty_set();
    return contains_all(p2, v1) && contains_all(p1, v2);
}

} // namespace polycone
