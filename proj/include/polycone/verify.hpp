#ifndef POLYCONE_VERIFY_HPP
#define POLYCONE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polycone/cone.hpp"

namespace polycone {

/// Desk-scale limits for the double description oracle. Working sets above
/// `reduce_threshold` rays are pruned to an irredundant generating subset by
/// exact membership tests; pairing stays adjacency-free either way.
struct OracleLimits {
    std::size_t max_dim = 6;
    std::size_t max_rows = 12;
    std::size_t max_intermediate_rays = 200000;
    std::size_t reduce_threshold = 32;
};

/// Independent generator set of K by incremental halfspace insertion
/// (classical double description, no adjacency filtering; rays are kept as
/// primitive directions and may be redundant). Starts from the generators
/// +-e_i of the whole space; equations are inserted as inequality pairs.
/// Throws OracleUnavailableError above the size limits.
GeneratorSet dd_generators(const HCone& cone, const OracleLimits& limits = {});

/// Outcome of an exact membership test of x in ccone(X), with evidence:
/// a nonnegative combination when the answer is yes, and a separating
/// functional y (with <y,x> > 0 and <y,g> <= 0 for every generator) when no.
struct MembershipCertificate {
    bool member = false;
    std::vector<Rational> coefficients; // one per generator, set order
    RatVector separator;

    /// Re-derives the claimed evidence exactly.
    bool validate(const RatVector& x, const GeneratorSet& gens) const;
};

/// Exact phase-one simplex with Bland's rule; always terminates.
MembershipCertificate cone_member_certified(const RatVector& x, const GeneratorSet& gens);

bool cone_member(const RatVector& x, const GeneratorSet& gens);

enum class QsdStatus {
    member,       // exact element of qsd(A) by enumeration
    zero,         // zero component outside sd(A); admitted as 0/1 by the
                  // convention that the homogeneous system [A|0] always has
                  // singular (zero-column) submatrices
    non_member,   // nonzero component provably outside qsd(A)
    inconclusive, // enumeration cap exceeded; Hadamard necessary check only
};

struct QsdSummary {
    std::size_t members = 0;
    std::size_t zeros = 0;
    std::size_t non_members = 0;
    std::size_t inconclusive = 0;
    bool all_admitted() const { return non_members == 0 && inconclusive == 0; }
};

struct VerifyOptions {
    OracleLimits oracle;
    bool check_qsd = true;
    std::uint64_t qsd_cap = kDefaultSubmatrixCap;
};

/// Checkable evidence for a conversion K = ccone(X): soundness of every
/// generator against the system, completeness of X against the oracle rays,
/// and the per-component subdeterminant-quotient report.
struct Certificate {
    std::vector<bool> soundness; // per generator, set order

    bool oracle_available = false;
    std::string oracle_note;       // reason when unavailable
    std::size_t oracle_ray_count = 0;
    std::vector<bool> completeness; // per oracle ray, set order

    std::vector<std::vector<QsdStatus>> qsd; // per generator, per component
    QsdSummary qsd_summary;

    std::optional<ConversionStats> stats; // filled when the caller ran the engine

    bool sound() const;
    bool complete() const; // vacuously true when the oracle part is absent
    bool pass() const { return sound() && complete(); }
};

/// Builds the certificate for the pair (cone, X). An oracle refusal is not an
/// error: the certificate comes back soundness-only with a note.
Certificate verify_conversion(const HCone& cone, const GeneratorSet& gens,
                              const VerifyOptions& options = {});

/// Re-derives the dichotomy dimension test from ranks alone and checks that
/// classify agrees; in the split case also checks z != 0, Cz = 0, the exact
/// zero sum of the entries of Bz, and their mixed signs.
bool check_lemma_dichotomy(const HCone& cone);

} // namespace polycone

#endif
