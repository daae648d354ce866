#ifndef POLYCONE_IO_HPP
#define POLYCONE_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "polycone/polyhedron.hpp"
#include "polycone/verify.hpp"

namespace polycone {

enum class ProblemKind { h_cone, h_polyhedron, v_polyhedron };

/// A parsed problem file: one cone or polyhedron description.
///
/// Text format (whitespace separated, `#` starts a comment):
///   H-cone n p q   followed by p inequality rows and q equation rows, n
///                  rationals each, meaning { x : Bx <= 0, Cx = 0 }
///   H-rep m n      followed by m rows of n coefficients and one bound,
///                  meaning { x : Ax <= b }
///   V-rep n v w    followed by v point rows and w ray rows of n rationals,
///                  meaning conv(points) + ccone(rays)
/// Rationals are integers or p/q with a positive denominator and are stored
/// in lowest terms.
struct ProblemFile {
    std::variant<HCone, HPolyhedron, VPolyhedron> value;

    ProblemKind kind() const {
        if (std::holds_alternative<HCone>(value)) return ProblemKind::h_cone;
        if (std::holds_alternative<HPolyhedron>(value)) return ProblemKind::h_polyhedron;
        return ProblemKind::v_polyhedron;
    }
    std::size_t dimension() const;

    const HCone& cone() const { return std::get<HCone>(value); }
    const HPolyhedron& h_polyhedron() const { return std::get<HPolyhedron>(value); }
    const VPolyhedron& v_polyhedron() const { return std::get<VPolyhedron>(value); }

    friend bool operator==(const ProblemFile& a, const ProblemFile& b) = default;
};

/// Parses a problem file. Throws ParseError with a 1-based line/column
/// position on malformed input.
ProblemFile parse_problem(std::string_view text);

/// Canonical text form: header plus rows sorted lexicographically inside each
/// block, rationals in lowest terms. parse_problem(write_problem(f)) == f for
/// canonical (block-sorted) values, and writing is idempotent for all.
std::string write_problem(const ProblemFile& file);

std::string write_hcone(const HCone& cone);
std::string write_hpolyhedron(const HPolyhedron& p);
std::string write_vpolyhedron(const VPolyhedron& q);

/// Generator sets are written as ray-only inner descriptions.
std::string write_generators(const GeneratorSet& gens);

/// Human-readable certificate report with one PASS/FAIL line per check
/// family. Fully deterministic for identical inputs.
std::string certificate_report(const Certificate& cert);

std::string stats_report(const ConversionStats& stats, std::size_t generator_count);

} // namespace polycone

#endif
