#include "doctest.h"

#include "polycone/verify.hpp"
#include "support.hpp"

using namespace polycone;
using polycone::testing::InstanceRng;
using polycone::testing::vec;

namespace {

const HCone wedge{RatMatrix{{-1, 0}, {1, -1}}, RatMatrix::zero_rows(2)};

GeneratorSet make_set(std::size_t dim, std::initializer_list<RatVector> vs) {
    GeneratorSet g(dim);
    for (const RatVector& v : vs) g.insert(v);
    return g;
}

} // namespace

TEST_CASE("dd oracle on canonical cones") {
    CHECK(dd_generators(HCone::whole_space(2)) ==
          make_set(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}));

    CHECK(dd_generators(HCone::from_inequalities(RatMatrix::identity(2))) ==
          make_set(2, {vec({-1, 0}), vec({0, -1})}));

    CHECK(dd_generators(wedge) == make_set(2, {vec({0, 1}), vec({1, 1})}));
}

TEST_CASE("dd oracle handles equations as inequality pairs") {
    const HCone line(RatMatrix::zero_rows(2), RatMatrix{{1, 0}});
    CHECK(dd_generators(line) == make_set(2, {vec({0, 1}), vec({0, -1})}));
}

TEST_CASE("dd oracle refuses oversized instances") {
    CHECK_THROWS_AS(dd_generators(HCone::whole_space(7)), OracleUnavailableError);
    OracleLimits tight;
    tight.max_rows = 1;
    CHECK_THROWS_AS(dd_generators(wedge, tight), OracleUnavailableError);
}

TEST_CASE("cone membership basics") {
    const GeneratorSet gens = make_set(2, {vec({0, 1}), vec({1, 1})});
    CHECK(cone_member(vec({0, 0}), gens)); // empty combination
    CHECK(cone_member(vec({1, 1}), gens));
    CHECK(cone_member(vec({1, 3}), gens));
    CHECK_FALSE(cone_member(vec({-1, 0}), gens));
    CHECK_FALSE(cone_member(vec({1, 0}), gens));

    CHECK(cone_member(RatVector(2), GeneratorSet(2)));
    CHECK_FALSE(cone_member(vec({1, 0}), GeneratorSet(2)));
}

TEST_CASE("membership certificates carry validated evidence") {
    InstanceRng rng(97531);
    for (int trial = 0; trial < 120; ++trial) {
        const HCone cone = rng.cone(4, 5, -3, 3);
        const GeneratorSet gens = conic_generators(cone);
        RatVector x(cone.ambient_dim());
        if (trial % 2 == 0) {
            x = rng.cone_point(gens);
        } else {
            for (std::size_t i = 0; i < x.dim(); ++i) x[i] = rng.uniform(-3, 3);
        }
        const MembershipCertificate cert = cone_member_certified(x, gens);
        CHECK(cert.validate(x, gens));
        if (trial % 2 == 0) CHECK(cert.member);
    }
}

TEST_CASE("verify_conversion passes on a correct pair") {
    const Certificate cert = verify_conversion(wedge, conic_generators(wedge));
    CHECK(cert.sound());
    CHECK(cert.oracle_available);
    CHECK(cert.complete());
    CHECK(cert.pass());
    CHECK(cert.qsd_summary.non_members == 0);
    CHECK(cert.qsd_summary.inconclusive == 0);
}

TEST_CASE("verify_conversion flags a missing ray") {
    const Certificate cert = verify_conversion(wedge, make_set(2, {vec({0, 1})}));
    CHECK(cert.sound()); // (0,1) itself is in the cone
    CHECK(cert.oracle_available);
    CHECK_FALSE(cert.complete());
    CHECK_FALSE(cert.pass());
}

TEST_CASE("verify_conversion flags a spurious generator") {
    const Certificate cert =
        verify_conversion(wedge, make_set(2, {vec({0, 1}), vec({1, 1}), vec({1, 0})}));
    CHECK_FALSE(cert.sound()); // B(1,0) has a positive entry
    CHECK_FALSE(cert.pass());
}

TEST_CASE("verify_conversion degrades to soundness-only above oracle limits") {
    OracleLimits tiny;
    tiny.max_dim = 1;
    VerifyOptions options;
    options.oracle = tiny;
    const Certificate cert = verify_conversion(wedge, conic_generators(wedge), options);
    CHECK_FALSE(cert.oracle_available);
    CHECK(cert.sound());
    CHECK(cert.completeness.empty());
    CHECK_FALSE(cert.oracle_note.empty());
}

TEST_CASE("certificates are reproducible") {
    const Certificate a = verify_conversion(wedge, conic_generators(wedge));
    const Certificate b = verify_conversion(wedge, conic_generators(wedge));
    CHECK(a.soundness == b.soundness);
    CHECK(a.completeness == b.completeness);
    CHECK(a.qsd == b.qsd);
}

TEST_CASE("engine and oracle agree on random instances (both directions)") {
    InstanceRng rng(86420);
    for (int trial = 0; trial < 40; ++trial) {
        const HCone cone = rng.cone(3, 5, -2, 2);
        const GeneratorSet engine = conic_generators(cone);
        const GeneratorSet oracle = dd_generators(cone);
        for (const RatVector& r : oracle.vectors()) CHECK(cone_member(r, engine));
        for (const RatVector& g : engine.vectors()) CHECK(cone_member(g, oracle));
    }
}

TEST_CASE("lemma dichotomy holds on spec examples and random cones") {
    CHECK(check_lemma_dichotomy(HCone(RatMatrix::zero_rows(2), RatMatrix{{1, 0}})));
    CHECK(check_lemma_dichotomy(wedge));
    CHECK(check_lemma_dichotomy(HCone::from_inequalities(RatMatrix{{1, 0}})));
    CHECK(check_lemma_dichotomy(HCone::whole_space(3)));

    InstanceRng rng(13579);
    for (int trial = 0; trial < 150; ++trial) CHECK(check_lemma_dichotomy(rng.cone(4, 6, -3, 3)));
}
