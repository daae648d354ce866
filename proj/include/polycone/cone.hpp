#ifndef POLYCONE_CONE_HPP
#define POLYCONE_CONE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "polycone/linalg.hpp"
#include "polycone/matrix.hpp"

namespace polycone {

/// Cone in outer description: K = { x : Bx <= 0, Cx = 0 }.
///
/// B is the inequality block (p rows), C the equation block (q rows), both
/// with n columns. p = q = 0 describes the whole space R^n.
class HCone {
public:
    HCone(RatMatrix inequalities, RatMatrix equations);

    static HCone whole_space(std::size_t n) {
        return HCone(RatMatrix::zero_rows(n), RatMatrix::zero_rows(n));
    }
    static HCone from_inequalities(RatMatrix b) {
        const std::size_t n = b.cols();
        return HCone(std::move(b), RatMatrix::zero_rows(n));
    }

    const RatMatrix& B() const { return ineq_; }
    const RatMatrix& C() const { return eq_; }
    std::size_t ambient_dim() const { return ineq_.cols(); }
    std::size_t num_inequalities() const { return ineq_.rows(); }
    std::size_t num_equations() const { return eq_.rows(); }

    /// Row stack of B over C (the full coefficient matrix of the system).
    RatMatrix stacked() const { return RatMatrix::vstack(ineq_, eq_); }

    /// Exact membership: Bx <= 0 and Cx = 0.
    bool contains(const RatVector& x) const;

    friend bool operator==(const HCone& a, const HCone& b) = default;

private:
    RatMatrix ineq_;
    RatMatrix eq_;
};

/// Finite set of generators X with the meaning ccone(X). Vectors are kept
/// exactly deduplicated in a deterministic (lexicographic) order; the zero
/// vector is never stored (ccone of the empty set is {0}).
class GeneratorSet {
public:
    explicit GeneratorSet(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }

    void insert(const RatVector& v);
    void merge(const GeneratorSet& other);
    bool contains(const RatVector& v) const { return vectors_.count(v) > 0; }

    /// Copy with every generator rescaled to its primitive integer direction
    /// (deduplication up to positive scaling; orientation preserved).
    GeneratorSet canonicalized() const;

    const std::set<RatVector>& vectors() const { return vectors_; }

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) = default;

private:
    std::size_t dim_;
    std::set<RatVector> vectors_;
};

/// Result of the dichotomy test on an HCone.
///
/// `flat`: the cone is a linear subspace or a halfspace of one, and a full
/// generator set is available immediately. `split`: a direction z with
/// Cz = 0 and Bz carrying both signs witnesses that neither z nor -z lies in
/// the cone, so the cone must be split along its facets.
enum class ConeClass { flat, split };

struct CaseAnalysis {
    explicit CaseAnalysis(ConeClass k) : kind(k) {}

    ConeClass kind;

    // kind == ConeClass::flat
    GeneratorSet generators{0};
    std::vector<RatVector> inner_basis; // basis of ker(B;C)
    std::optional<RatVector> extension; // halfspace direction, absent for subspaces

    // kind == ConeClass::split
    RatVector separating; // the vector z
};

/// Convex split of a cone point x along a direction z: moving forward along z
/// hits inequality row `row_forward` after `step_forward`, moving backward
/// hits `row_backward` after `step_backward`, and x is the convex combination
///   x = (mu/(lambda+mu)) (x + lambda z) + (lambda/(lambda+mu)) (x - mu z)
/// of the two endpoints whenever lambda + mu > 0.
struct Decomposition {
    RatVector x;
    RatVector z;
    Rational step_forward;     // lambda >= 0
    std::size_t row_forward;   // 0-based row of B tight at x + lambda z
    Rational step_backward;    // mu >= 0
    std::size_t row_backward;  // 0-based row of B tight at x - mu z

    RatVector forward_point() const { return x + step_forward * z; }
    RatVector backward_point() const { return x - step_backward * z; }
};

struct ConversionStats {
    std::size_t nodes = 0;
    std::size_t max_depth = 0;
    std::size_t flat_nodes = 0;
    std::size_t split_nodes = 0;
    std::size_t emitted_vectors = 0; // generator emissions before deduplication
};

/// Recursion tree node for debugging and the `stats` command.
struct TraceNode {
    ConeClass kind;
    std::size_t depth = 0;
    std::size_t inequality_count = 0;
    std::optional<RatVector> separating;
    std::size_t moved_row = 0; // inequality row moved by the parent to reach this node
    std::size_t emitted = 0;
    std::vector<std::unique_ptr<TraceNode>> children;
};

struct ConversionOptions {
    bool canonical_rays = false; // rescale output rays to primitive directions
    bool collect_trace = false;
};

struct ConversionResult {
    GeneratorSet generators;
    ConversionStats stats;
    std::unique_ptr<TraceNode> trace; // null unless collect_trace
};

/// Dichotomy: every well-formed cone is either flat (generators immediate)
/// or admits a separating direction z. Total on well-formed inputs.
CaseAnalysis classify(const HCone& cone);

/// The separating direction of the split case: z with Cz = 0, z orthogonal to
/// the sum of the rows of B, and Bz nonzero (hence sign-mixed). Throws
/// ContractError when the cone is flat.
RatVector find_separating_z(const HCone& cone);

/// Moves inequality row i (0-based) into the equation block.
HCone restrict_row(const HCone& cone, std::size_t i);

/// Finite generator set X with ccone(X) = K, via the facet recursion.
ConversionResult convert_cone(const HCone& cone, const ConversionOptions& options = {});

GeneratorSet conic_generators(const HCone& cone);

/// Splits x in K along z into the convex combination of its two facet hits.
/// Throws InputError if x is not in K or Bz does not carry both signs.
Decomposition decompose_along_z(const RatVector& x, const RatVector& z, const HCone& cone);

} // namespace polycone

#endif
