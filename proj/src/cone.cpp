#include "polycone/cone.hpp"

#include <limits>
#include <utility>

namespace polycone {

HCone::HCone(RatMatrix inequalities, RatMatrix equations)
    : ineq_(std::move(inequalities)), eq_(std::move(equations)) {
    if (ineq_.cols() != eq_.cols())
        throw DimensionError("inequality and equation blocks disagree on ambient dimension");
    if (ineq_.cols() == 0) throw DimensionError("cone ambient dimension must be at least 1");
}

bool HCone::contains(const RatVector& x) const {
    if (x.dim() != ambient_dim()) throw DimensionError("membership test dimension mismatch");
    const RatVector bx = ineq_ * x;
    for (std::size_t i = 0; i < bx.dim(); ++i)
        if (bx[i].sign() > 0) return false;
    return (eq_ * x).is_zero();
}

void GeneratorSet::insert(const RatVector& v) {
    if (v.dim() != dim_) throw DimensionError("generator dimension mismatch");
    if (v.is_zero()) return;
    vectors_.insert(v);
}

void GeneratorSet::merge(const GeneratorSet& other) {
    if (other.dim_ != dim_) throw DimensionError("generator set dimension mismatch");
    vectors_.insert(other.vectors_.begin(), other.vectors_.end());
}

GeneratorSet GeneratorSet::canonicalized() const {
    GeneratorSet out(dim_);
    for (const RatVector& v : vectors_) out.insert(v.primitive());
    return out;
}

namespace {

// True iff Bv <= 0 componentwise.
bool all_nonpositive(const RatVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v[i].sign() > 0) return false;
    return true;
}

} // namespace

CaseAnalysis classify(const HCone& cone) {
    const std::size_t n = cone.ambient_dim();
    const RatMatrix stacked = cone.stacked();

    std::vector<RatVector> inner = kernel_basis(stacked);
    const std::size_t k = inner.size();
    const std::size_t m = n - rank(cone.C());

    if (k + 1 < m) {
        CaseAnalysis result{ConeClass::split};
        result.separating = find_separating_z(cone);
        return result;
    }

    CaseAnalysis result{ConeClass::flat};
    result.generators = GeneratorSet(n);
    for (const RatVector& b : inner) {
        result.generators.insert(b);
        result.generators.insert(-b);
    }
    if (k + 1 == m) {
        RatVector v = extend_basis(inner, cone.C());
        if (all_nonpositive(cone.B() * v)) {
            result.extension = v;
        } else if (all_nonpositive(cone.B() * (-v))) {
            result.extension = -v;
        }
        // otherwise Bv carries both signs in both orientations and the cone
        // is just the subspace spanned by the inner basis
        if (result.extension) result.generators.insert(*result.extension);
    }
    result.inner_basis = std::move(inner);
    return result;
}

RatVector find_separating_z(const HCone& cone) {
    const std::size_t n = cone.ambient_dim();
    const std::size_t k = n - rank(cone.stacked());
    const std::size_t m = n - rank(cone.C());
    if (k + 1 >= m)
        throw ContractError("find_separating_z: cone is flat, no separating direction exists");

    RatMatrix constraints = cone.C();
    constraints.append_row(cone.B().row_sum());
    for (RatVector& w : kernel_basis(constraints)) {
        if (!(cone.B() * w).is_zero()) return w;
    }
    throw std::logic_error("find_separating_z: no kernel vector leaves ker(B)");
}

HCone restrict_row(const HCone& cone, std::size_t i) {
    if (i >= cone.num_inequalities()) throw DimensionError("restrict_row index out of range");
    RatMatrix eq = cone.C();
    eq.append_row(cone.B().row(i));
    return HCone(cone.B().without_row(i), std::move(eq));
}

namespace {

void convert_recursive(const HCone& cone, std::size_t depth, GeneratorSet& out,
                       ConversionStats& stats, TraceNode* trace) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);

    CaseAnalysis analysis = classify(cone);
    if (trace) {
        trace->kind = analysis.kind;
        trace->depth = depth;
        trace->inequality_count = cone.num_inequalities();
    }

    if (analysis.kind == ConeClass::flat) {
        ++stats.flat_nodes;
        stats.emitted_vectors += analysis.generators.size();
        if (trace) trace->emitted = analysis.generators.size();
        out.merge(analysis.generators);
        return;
    }

    ++stats.split_nodes;
    if (trace) trace->separating = analysis.separating;
    for (std::size_t i = 0; i < cone.num_inequalities(); ++i) {
        TraceNode* child = nullptr;
        if (trace) {
            trace->children.push_back(std::make_unique<TraceNode>());
            child = trace->children.back().get();
            child->moved_row = i;
        }
        convert_recursive(restrict_row(cone, i), depth + 1, out, stats, child);
    }
}

} // namespace

ConversionResult convert_cone(const HCone& cone, const ConversionOptions& options) {
    ConversionResult result{GeneratorSet(cone.ambient_dim()), {}, nullptr};
    if (options.collect_trace) result.trace = std::make_unique<TraceNode>();
    convert_recursive(cone, 0, result.generators, result.stats, result.trace.get());
    if (options.canonical_rays) result.generators = result.generators.canonicalized();
    return result;
}

GeneratorSet conic_generators(const HCone& cone) { return convert_cone(cone).generators; }

Decomposition decompose_along_z(const RatVector& x, const RatVector& z, const HCone& cone) {
    if (!cone.contains(x)) throw InputError("decompose_along_z: point is not in the cone");
    if (!(cone.C() * z).is_zero())
        throw InputError("decompose_along_z: direction violates the equation block");

    const RatVector bx = cone.B() * x;
    const RatVector bz = cone.B() * z;

    bool found_forward = false, found_backward = false;
    Rational lambda, mu;
    std::size_t row_forward = std::numeric_limits<std::size_t>::max();
    std::size_t row_backward = std::numeric_limits<std::size_t>::max();

    for (std::size_t i = 0; i < bz.dim(); ++i) {
        const int s = bz[i].sign();
        if (s == 0) continue;
        const Rational step = -bx[i] / bz[i]; // (bx[i] <= 0) / sign(bz[i])
        if (s > 0) {
            if (!found_forward || step < lambda) {
                lambda = step;
                row_forward = i;
                found_forward = true;
            }
        } else {
            const Rational back = -step; // nonnegative
            if (!found_backward || back < mu) {
                mu = back;
                row_backward = i;
                found_backward = true;
            }
        }
    }
    if (!found_forward || !found_backward)
        throw InputError("decompose_along_z: Bz must carry both signs");

    return Decomposition{x, z, lambda, row_forward, mu, row_backward};
}

} // namespace polycone
