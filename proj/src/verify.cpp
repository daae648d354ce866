#include "polycone/verify.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace polycone {

namespace {

// Dense phase-one simplex tableau for deciding x in ccone(G).
// Columns: one per generator, then one artificial per row, then the rhs.
class PhaseOneTableau {
public:
    PhaseOneTableau(const RatVector& x, const std::vector<RatVector>& gens)
        : rows_(x.dim()), num_gen_(gens.size()), flip_(rows_, false),
          tab_(rows_, std::vector<Rational>(num_gen_ + rows_ + 1)), basis_(rows_) {
        for (std::size_t c = 0; c < num_gen_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) tab_[r][c] = gens[c][r];
        for (std::size_t r = 0; r < rows_; ++r) {
            tab_[r][num_gen_ + r] = 1;
            tab_[r].back() = x[r];
            if (x[r].sign() < 0) {
                flip_[r] = true;
                for (auto& v : tab_[r]) v = -v;
                tab_[r][num_gen_ + r] = 1; // artificial column stays +1
            }
            basis_[r] = num_gen_ + r;
        }
    }

    // Bland's rule: entering column of smallest index with negative reduced
    // cost; leaving row of minimum ratio, ties by smallest basic variable.
    void solve() {
        const std::size_t num_cols = num_gen_ + rows_;
        for (;;) {
            std::size_t enter = num_cols;
            for (std::size_t j = 0; j < num_cols; ++j) {
                if (reduced_cost(j).sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == num_cols) return;

            std::size_t leave = rows_;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (tab_[r][enter].sign() <= 0) continue;
                Rational ratio = tab_[r].back() / tab_[r][enter];
                if (leave == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
            if (leave == rows_) throw std::logic_error("phase-one objective unbounded");
            pivot(leave, enter);
        }
    }

    Rational objective() const {
        Rational sum;
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] >= num_gen_) sum += tab_[r].back();
        return sum;
    }

    std::vector<Rational> generator_solution() const {
        std::vector<Rational> lambda(num_gen_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < num_gen_) lambda[basis_[r]] = tab_[r].back();
        return lambda;
    }

    // Dual values read off the artificial columns, mapped back through the
    // row sign flips: y with <y, x> = objective and y^T G <= 0 at optimality.
    RatVector dual_separator() const {
        RatVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational yi = Rational(1) - reduced_cost(num_gen_ + i);
            y[i] = flip_[i] ? -yi : yi;
        }
        return y;
    }

private:
    Rational reduced_cost(std::size_t j) const {
        Rational rc = j >= num_gen_ ? 1 : 0;
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] >= num_gen_) rc -= tab_[r][j];
        return rc;
    }

    void pivot(std::size_t leave, std::size_t enter) {
        const Rational p = tab_[leave][enter];
        for (auto& v : tab_[leave]) v /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == leave || tab_[r][enter].is_zero()) continue;
            const Rational f = tab_[r][enter];
            for (std::size_t j = 0; j < tab_[r].size(); ++j) tab_[r][j] -= f * tab_[leave][j];
        }
        basis_[leave] = enter;
    }

    std::size_t rows_;
    std::size_t num_gen_;
    std::vector<bool> flip_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
};

bool in_ccone(const RatVector& x, const std::vector<RatVector>& gens) {
    PhaseOneTableau tableau(x, gens);
    tableau.solve();
    return tableau.objective().is_zero();
}

// Greedy removal of rays that are nonnegative combinations of the remaining
// ones. The result generates the same cone; processing order is the
// deterministic set order.
std::set<RatVector> irredundant(const std::set<RatVector>& rays) {
    std::vector<RatVector> pool(rays.begin(), rays.end());
    std::vector<bool> alive(pool.size(), true);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        std::vector<RatVector> others;
        others.reserve(pool.size() - 1);
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (alive[j] && j != i) others.push_back(pool[j]);
        if (in_ccone(pool[i], others)) alive[i] = false;
    }
    std::set<RatVector> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (alive[i]) out.insert(pool[i]);
    return out;
}

// One double description step: restrict the cone generated by `rays` to the
// halfspace <h, x> <= 0. Every positive/negative ray pair contributes the
// combination lying on the hyperplane; no adjacency filtering is applied.
// Oversized intermediate sets are pruned to an irredundant generating subset.
std::set<RatVector> insert_halfspace(const std::set<RatVector>& rays, const RatVector& h,
                                     const OracleLimits& limits) {
    std::vector<std::pair<RatVector, Rational>> pos, neg;
    std::set<RatVector> kept;
    for (const RatVector& r : rays) {
        Rational s = h.dot(r);
        const int sign = s.sign();
        if (sign > 0) {
            pos.emplace_back(r, std::move(s));
        } else if (sign < 0) {
            kept.insert(r);
            neg.emplace_back(r, std::move(s));
        } else {
            kept.insert(r);
        }
    }
    for (const auto& [rp, sp] : pos) {
        for (const auto& [rn, sn] : neg) {
            RatVector combo = sp * rn - sn * rp;
            if (combo.is_zero()) continue;
            kept.insert(combo.primitive());
            if (kept.size() > limits.max_intermediate_rays)
                throw OracleUnavailableError("double description intermediate ray cap exceeded");
        }
    }
    if (kept.size() > limits.reduce_threshold) kept = irredundant(kept);
    return kept;
}

} // namespace

GeneratorSet dd_generators(const HCone& cone, const OracleLimits& limits) {
    const std::size_t n = cone.ambient_dim();
    const std::size_t rows = cone.num_inequalities() + cone.num_equations();
    if (n > limits.max_dim)
        throw OracleUnavailableError("oracle dimension limit exceeded: n = " + std::to_string(n));
    if (rows > limits.max_rows)
        throw OracleUnavailableError("oracle row limit exceeded: rows = " + std::to_string(rows));

    std::set<RatVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        rays.insert(RatVector::unit(n, i));
        rays.insert(-RatVector::unit(n, i));
    }
    for (std::size_t i = 0; i < cone.num_inequalities(); ++i)
        rays = insert_halfspace(rays, cone.B().row(i), limits);
    for (std::size_t i = 0; i < cone.num_equations(); ++i) {
        const RatVector h = cone.C().row(i);
        rays = insert_halfspace(rays, h, limits);
        rays = insert_halfspace(rays, -h, limits);
    }

    GeneratorSet out(n);
    for (const RatVector& r : rays) out.insert(r);
    return out;
}

MembershipCertificate cone_member_certified(const RatVector& x, const GeneratorSet& gens) {
    if (x.dim() != gens.dim()) throw DimensionError("cone_member dimension mismatch");
    const std::vector<RatVector> columns(gens.vectors().begin(), gens.vectors().end());
    PhaseOneTableau tableau(x, columns);
    tableau.solve();

    MembershipCertificate cert;
    if (tableau.objective().is_zero()) {
        cert.member = true;
        cert.coefficients = tableau.generator_solution();
    } else {
        cert.member = false;
        cert.separator = tableau.dual_separator();
    }
    return cert;
}

bool MembershipCertificate::validate(const RatVector& x, const GeneratorSet& gens) const {
    if (member) {
        if (coefficients.size() != gens.size()) return false;
        RatVector sum(x.dim());
        std::size_t j = 0;
        for (const RatVector& g : gens.vectors()) {
            if (coefficients[j].sign() < 0) return false;
            sum += coefficients[j] * g;
            ++j;
        }
        return sum == x;
    }
    if (separator.dim() != x.dim() || separator.dot(x).sign() <= 0) return false;
    for (const RatVector& g : gens.vectors())
        if (separator.dot(g).sign() > 0) return false;
    return true;
}

bool cone_member(const RatVector& x, const GeneratorSet& gens) {
    return cone_member_certified(x, gens).member;
}

bool Certificate::sound() const {
    return std::all_of(soundness.begin(), soundness.end(), [](bool b) { return b; });
}

bool Certificate::complete() const {
    return std::all_of(completeness.begin(), completeness.end(), [](bool b) { return b; });
}

Certificate verify_conversion(const HCone& cone, const GeneratorSet& gens,
                              const VerifyOptions& options) {
    Certificate cert;

    for (const RatVector& g : gens.vectors()) cert.soundness.push_back(cone.contains(g));

    try {
        const GeneratorSet oracle = dd_generators(cone, options.oracle);
        cert.oracle_available = true;
        cert.oracle_ray_count = oracle.size();
        for (const RatVector& r : oracle.vectors())
            cert.completeness.push_back(cone_member(r, gens));
    } catch (const OracleUnavailableError& e) {
        cert.oracle_available = false;
        cert.oracle_note = e.what();
    }

    if (options.check_qsd) {
        const RatMatrix stacked = cone.stacked();
        bool integer_system = true;
        for (std::size_t r = 0; r < stacked.rows() && integer_system; ++r)
            for (std::size_t c = 0; c < stacked.cols(); ++c)
                if (!stacked(r, c).is_integer()) {
                    integer_system = false;
                    break;
                }
        const Rational bound = hadamard_bound(stacked);
        for (const RatVector& g : gens.vectors()) {
            std::vector<QsdStatus> row;
            row.reserve(g.dim());
            for (std::size_t i = 0; i < g.dim(); ++i) {
                const std::optional<bool> member = qsd_contains(stacked, g[i], options.qsd_cap);
                QsdStatus status;
                if (!member.has_value()) {
                    // the Hadamard bound can still refute membership: for an
                    // integer system every nonzero subdeterminant quotient
                    // has absolute value at most the bound
                    status = integer_system && g[i].abs() > bound ? QsdStatus::non_member
                                                                  : QsdStatus::inconclusive;
                } else if (*member) {
                    status = QsdStatus::member;
                } else {
                    status = g[i].is_zero() ? QsdStatus::zero : QsdStatus::non_member;
                }
                switch (status) {
                    case QsdStatus::member: ++cert.qsd_summary.members; break;
                    case QsdStatus::zero: ++cert.qsd_summary.zeros; break;
                    case QsdStatus::non_member: ++cert.qsd_summary.non_members; break;
                    case QsdStatus::inconclusive: ++cert.qsd_summary.inconclusive; break;
                }
                row.push_back(status);
            }
            cert.qsd.push_back(std::move(row));
        }
    }
    return cert;
}

bool check_lemma_dichotomy(const HCone& cone) {
    const std::size_t n = cone.ambient_dim();
    const std::size_t k = n - rank(cone.stacked());
    const std::size_t m = n - rank(cone.C());
    const bool expect_flat = k + 1 >= m;

    const CaseAnalysis analysis = classify(cone);
    if ((analysis.kind == ConeClass::flat) != expect_flat) return false;
    if (analysis.kind == ConeClass::flat) return true;

    const RatVector& z = analysis.separating;
    if (z.is_zero()) return false;
    if (!(cone.C() * z).is_zero()) return false;

    const RatVector bz = cone.B() * z;
    Rational total;
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < bz.dim(); ++i) {
        total += bz[i];
        if (bz[i].sign() > 0) has_pos = true;
        if (bz[i].sign() < 0) has_neg = true;
    }
    return total.is_zero() && has_pos && has_neg;
}

} // namespace polycone
