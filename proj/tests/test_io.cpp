#include "doctest.h"

#include "polycone/io.hpp"
#include "support.hpp"

using namespace polycone;
using polycone::testing::InstanceRng;
using polycone::testing::vec;

TEST_CASE("parse H-cone") {
    const ProblemFile f = parse_problem("H-cone 2 2 0\n-1 0\n1 -1\n");
    REQUIRE(f.kind() == ProblemKind::h_cone);
    CHECK(f.cone().B() == RatMatrix{{-1, 0}, {1, -1}});
    CHECK(f.cone().num_equations() == 0);
}

TEST_CASE("parse V-rep") {
    const ProblemFile f = parse_problem("V-rep 1 2 0\n0\n1\n");
    REQUIRE(f.kind() == ProblemKind::v_polyhedron);
    CHECK(f.v_polyhedron().points() == std::set<RatVector>{vec({0}), vec({1})});
    CHECK(f.v_polyhedron().rays().empty());
}

TEST_CASE("parse H-rep") {
    const ProblemFile f = parse_problem("H-rep 1 1\n1 1\n");
    REQUIRE(f.kind() == ProblemKind::h_polyhedron);
    CHECK(f.h_polyhedron().A() == RatMatrix{{1}});
    CHECK(f.h_polyhedron().b() == vec({1}));
}

TEST_CASE("parse accepts comments, rationals and blank lines") {
    const ProblemFile f = parse_problem(
        "# outer description\nH-cone 2 1 1 # header\n1/2 -3/4\n\n2/4 0 # equation\n");
    CHECK(f.cone().B() == RatMatrix{{Rational(1, 2), Rational(-3, 4)}});
    CHECK(f.cone().C() == RatMatrix{{Rational(1, 2), 0}}); // 2/4 stored in lowest terms
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_problem("Z-rep 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("H-cone 2 1 0\n1\n"), ParseError); // truncated row
    CHECK_THROWS_AS(parse_problem("H-cone 2 1 0\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("H-cone 2 1 0\n1 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("H-cone 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("V-rep 2 0 1\n0 0\n"), ParseError); // zero ray
    CHECK_THROWS_AS(parse_problem("H-rep 1 1\n1 1\n7\n"), ParseError); // trailing token

    try {
        parse_problem("H-cone 2 1 0\n1 2/0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("write emits sorted rows in lowest terms") {
    const HCone cone(RatMatrix{{1, -1}, {-1, 0}}, RatMatrix::zero_rows(2));
    CHECK(write_hcone(cone) == "H-cone 2 2 0\n-1 0\n1 -1\n");

    GeneratorSet g(2);
    g.insert(vec({1, 1}));
    g.insert(vec({0, 1}));
    CHECK(write_generators(g) == "V-rep 2 0 2\n0 1\n1 1\n");
}

TEST_CASE("parse of written canonical values is the identity") {
    InstanceRng rng(220022);
    for (int trial = 0; trial < 60; ++trial) {
        ProblemFile file{HCone::whole_space(1)};
        const int kind = static_cast<int>(rng.uniform(0, 2));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        if (kind == 0) {
            file.value = rng.cone(3, 4, -3, 3);
        } else if (kind == 1) {
            const auto m = static_cast<std::size_t>(rng.uniform(0, 3));
            RatMatrix a = rng.matrix(m, n, -3, 3);
            RatVector b(m);
            for (std::size_t i = 0; i < m; ++i) b[i] = Rational(rng.uniform(-6, 6), 2);
            file.value = HPolyhedron(std::move(a), std::move(b));
        } else {
            VPolyhedron q(n);
            const long points = rng.uniform(0, 3);
            const long rays = rng.uniform(0, 2);
            for (long i = 0; i < points; ++i) {
                RatVector v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = Rational(rng.uniform(-4, 4), 2);
                q.add_point(v);
            }
            for (long i = 0; i < rays; ++i) {
                RatVector v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = rng.uniform(-2, 2);
                q.add_ray(v);
            }
            file.value = std::move(q);
        }

        // write is canonical: parsing it back and re-writing is a fixpoint
        const std::string text = write_problem(file);
        const ProblemFile reparsed = parse_problem(text);
        CHECK(write_problem(reparsed) == text);
        CHECK(reparsed.kind() == file.kind());
        CHECK(reparsed.dimension() == file.dimension());
        // and for block-sorted values the round trip is literal identity
        const ProblemFile canonical = parse_problem(text);
        CHECK(parse_problem(write_problem(canonical)) == canonical);
    }
}

TEST_CASE("certificate report prints one line per check family") {
    const HCone wedge(RatMatrix{{-1, 0}, {1, -1}}, RatMatrix::zero_rows(2));
    const Certificate cert = verify_conversion(wedge, conic_generators(wedge));
    const std::string report = certificate_report(cert);
    CHECK(report.find("soundness: PASS") != std::string::npos);
    CHECK(report.find("completeness: PASS") != std::string::npos);
    CHECK(report.find("qsd:") != std::string::npos);
    CHECK(report.find("overall: PASS") != std::string::npos);

    GeneratorSet bad(2);
    bad.insert(vec({1, 0}));
    const std::string failing = certificate_report(verify_conversion(wedge, bad));
    CHECK(failing.find("soundness FAIL") != std::string::npos);
    CHECK(failing.find("overall: FAIL") != std::string::npos);
}
