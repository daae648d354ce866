// polycone: exact conversion between outer (inequality) and inner (generator)
// descriptions of polyhedral cones and polyhedra, with independent
// verification and subdeterminant-quotient certificates.
//
// Exit codes: 0 success or verification pass, 1 verification failure,
// 2 usage or parse error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "polycone/io.hpp"

namespace {

using nlohmann::json;
using namespace polycone;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json vector_json(const RatVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(v[i].str());
    return arr;
}

json vectors_json(const std::set<RatVector>& vs) {
    json arr = json::array();
    for (const RatVector& v : vs) arr.push_back(vector_json(v));
    return arr;
}

json stats_json(const ConversionStats& stats) {
    return json{{"nodes", stats.nodes},
                {"max_depth", stats.max_depth},
                {"flat_nodes", stats.flat_nodes},
                {"split_nodes", stats.split_nodes},
                {"emitted_vectors", stats.emitted_vectors}};
}

json qsd_summary_json(const QsdSummary& s) {
    return json{{"member", s.members},
                {"zero", s.zeros},
                {"non_member", s.non_members},
                {"inconclusive", s.inconclusive}};
}

json certificate_json(const Certificate& cert) {
    json fail_sound = json::array();
    for (std::size_t i = 0; i < cert.soundness.size(); ++i)
        if (!cert.soundness[i]) fail_sound.push_back(i);
    json fail_complete = json::array();
    for (std::size_t i = 0; i < cert.completeness.size(); ++i)
        if (!cert.completeness[i]) fail_complete.push_back(i);

    json out{{"generators", cert.soundness.size()},
             {"sound", cert.sound()},
             {"soundness_failures", fail_sound},
             {"oracle_available", cert.oracle_available},
             {"pass", cert.pass()}};
    if (cert.oracle_available) {
        out["oracle_rays"] = cert.oracle_ray_count;
        out["complete"] = cert.complete();
        out["completeness_failures"] = fail_complete;
    } else {
        out["oracle_note"] = cert.oracle_note;
    }
    if (!cert.qsd.empty()) {
        out["qsd"] = qsd_summary_json(cert.qsd_summary);
        out["qsd_pass"] = cert.qsd_summary.all_admitted();
    }
    if (cert.stats) out["recursion"] = stats_json(*cert.stats);
    return out;
}

// The cone a file denotes for conversion/verification purposes: an H-cone
// directly, or the homogenization of an H-polyhedron.
HCone cone_of(const ProblemFile& file) {
    switch (file.kind()) {
        case ProblemKind::h_cone: return file.cone();
        case ProblemKind::h_polyhedron: return homogenize(file.h_polyhedron());
        case ProblemKind::v_polyhedron: break;
    }
    throw InputError("this command needs an H-cone or H-rep input");
}

// Generators supplied on disk as a V-rep: rays are taken as cone generators;
// points are lifted with a final 1 (matching the homogenization convention).
GeneratorSet generators_of(const ProblemFile& file, std::size_t cone_dim) {
    if (file.kind() != ProblemKind::v_polyhedron)
        throw InputError("generator input must be a V-rep file");
    const VPolyhedron& q = file.v_polyhedron();
    GeneratorSet gens(cone_dim);
    if (q.ambient_dim() == cone_dim) {
        if (!q.points().empty())
            throw InputError("cone generators must be rays; found points in V-rep");
        for (const RatVector& w : q.rays()) gens.insert(w);
    } else if (q.ambient_dim() + 1 == cone_dim) {
        for (const RatVector& v : q.points()) {
            RatVector lifted(cone_dim);
            for (std::size_t i = 0; i + 1 < cone_dim; ++i) lifted[i] = v[i];
            lifted[cone_dim - 1] = 1;
            gens.insert(lifted);
        }
        for (const RatVector& w : q.rays()) {
            RatVector lifted(cone_dim);
            for (std::size_t i = 0; i + 1 < cone_dim; ++i) lifted[i] = w[i];
            gens.insert(lifted);
        }
    } else {
        throw InputError("generator dimension does not match the cone");
    }
    return gens;
}

int run_convert(const std::string& path, bool canonical, bool as_json) {
    const ProblemFile file = parse_problem(read_file(path));
    const ConversionOptions options{canonical, false};

    switch (file.kind()) {
        case ProblemKind::h_cone: {
            const ConversionResult result = convert_cone(file.cone(), options);
            if (as_json) {
                std::cout << json{{"kind", "generator-set"},
                                  {"dim", result.generators.dim()},
                                  {"rays", vectors_json(result.generators.vectors())},
                                  {"recursion", stats_json(result.stats)}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << write_generators(result.generators);
            }
            return kExitPass;
        }
        case ProblemKind::h_polyhedron: {
            const VPolyhedron v = h_to_v(file.h_polyhedron(), options);
            if (as_json) {
                std::cout << json{{"kind", "v-rep"},
                                  {"dim", v.ambient_dim()},
                                  {"points", vectors_json(v.points())},
                                  {"rays", vectors_json(v.rays())}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << write_vpolyhedron(v);
            }
            return kExitPass;
        }
        case ProblemKind::v_polyhedron: {
            const HPolyhedron h = v_to_h(file.v_polyhedron(), options);
            if (as_json) {
                json rows = json::array();
                for (std::size_t r = 0; r < h.num_rows(); ++r) {
                    json row{{"coefficients", vector_json(h.A().row(r))},
                             {"bound", h.b()[r].str()}};
                    rows.push_back(row);
                }
                std::cout << json{{"kind", "h-rep"}, {"dim", h.ambient_dim()}, {"rows", rows}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << write_hpolyhedron(h);
            }
            return kExitPass;
        }
    }
    return kExitUsage;
}

int run_verify(const std::string& cone_path, const std::string& gens_path, bool canonical,
               bool as_json) {
    const ProblemFile file = parse_problem(read_file(cone_path));
    const HCone cone = cone_of(file);

    GeneratorSet gens(cone.ambient_dim());
    std::optional<ConversionStats> stats;
    if (gens_path.empty()) {
        const ConversionResult result = convert_cone(cone, ConversionOptions{canonical, false});
        gens = result.generators;
        stats = result.stats;
    } else {
        gens = generators_of(parse_problem(read_file(gens_path)), cone.ambient_dim());
    }

    VerifyOptions options;
    options.check_qsd = !canonical; // canonical rescaling invalidates the qsd claim
    Certificate cert = verify_conversion(cone, gens, options);
    cert.stats = stats;

    if (as_json) {
        std::cout << certificate_json(cert).dump(2) << '\n';
    } else {
        std::cout << certificate_report(cert);
    }
    if (!cert.oracle_available) return kExitResourceCap;
    return cert.pass() ? kExitPass : kExitVerificationFailure;
}

int run_qsd_check(const std::string& cone_path, const std::string& gens_path, std::uint64_t limit,
                  bool as_json) {
    const ProblemFile file = parse_problem(read_file(cone_path));
    const HCone cone = cone_of(file);

    GeneratorSet gens(cone.ambient_dim());
    if (gens_path.empty()) {
        gens = conic_generators(cone);
    } else {
        gens = generators_of(parse_problem(read_file(gens_path)), cone.ambient_dim());
    }

    VerifyOptions options;
    options.oracle.max_dim = 0; // qsd only: skip the oracle by making it refuse
    options.qsd_cap = limit;
    const Certificate cert = verify_conversion(cone, gens, options);
    const QsdSummary& s = cert.qsd_summary;

    if (as_json) {
        std::cout << json{{"limit", limit},
                          {"generators", gens.size()},
                          {"components", qsd_summary_json(s)},
                          {"pass", s.all_admitted()}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "qsd components: " << s.members << " member, " << s.zeros << " zero, "
                  << s.non_members << " non-member, " << s.inconclusive << " inconclusive\n"
                  << "qsd: " << (s.all_admitted() ? "PASS" : "FAIL") << '\n';
    }
    if (s.inconclusive > 0) return kExitResourceCap;
    return s.non_members == 0 ? kExitPass : kExitVerificationFailure;
}

json trace_json(const TraceNode& node) {
    json out{{"case", node.kind == ConeClass::flat ? "flat" : "split"},
             {"depth", node.depth},
             {"inequalities", node.inequality_count}};
    if (node.depth > 0) out["moved_row"] = node.moved_row;
    if (node.separating) out["separating"] = vector_json(*node.separating);
    if (node.kind == ConeClass::flat) out["emitted"] = node.emitted;
    if (!node.children.empty()) {
        json kids = json::array();
        for (const auto& child : node.children) kids.push_back(trace_json(*child));
        out["children"] = kids;
    }
    return out;
}

int run_stats(const std::string& path, bool as_json, bool with_trace) {
    const ProblemFile file = parse_problem(read_file(path));
    const ConversionOptions options{false, with_trace};

    ConversionResult result{GeneratorSet(1), {}, nullptr};
    switch (file.kind()) {
        case ProblemKind::h_cone:
            result = convert_cone(file.cone(), options);
            break;
        case ProblemKind::h_polyhedron:
            result = convert_cone(homogenize(file.h_polyhedron()), options);
            break;
        case ProblemKind::v_polyhedron: {
            // stats of the polar conversion performed by v_to_h
            const VPolyhedron& q = file.v_polyhedron();
            if (q.empty_set()) throw InputError("stats: empty inner description");
            RatMatrix lifted(0, q.ambient_dim() + 1);
            auto lift = [&](const RatVector& v, const Rational& last) {
                RatVector row(q.ambient_dim() + 1);
                for (std::size_t i = 0; i < q.ambient_dim(); ++i) row[i] = v[i];
                row[q.ambient_dim()] = last;
                lifted.append_row(row);
            };
            if (q.points().empty()) lift(RatVector(q.ambient_dim()), 1);
            for (const RatVector& v : q.points()) lift(v, 1);
            for (const RatVector& w : q.rays()) lift(w, 0);
            result = convert_cone(HCone::from_inequalities(lifted), options);
            break;
        }
    }

    if (as_json) {
        json out = stats_json(result.stats);
        out["generators"] = result.generators.size();
        if (result.trace) out["trace"] = trace_json(*result.trace);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << stats_report(result.stats, result.generators.size());
        if (result.trace) std::cout << trace_json(*result.trace).dump(2) << '\n';
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral cone and polyhedron description conversion"};
    app.require_subcommand(1);

    std::string input, generators;
    bool canonical = false, as_json = false, with_trace = false;
    std::uint64_t limit = kDefaultSubmatrixCap;

    CLI::App* convert = app.add_subcommand("convert", "convert between descriptions");
    convert->add_option("input", input, "problem file")->required();
    convert->add_flag("--canonical-rays", canonical, "rescale rays to primitive directions");
    convert->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "verify a conversion against the oracle");
    verify->add_option("input", input, "H-cone or H-rep file")->required();
    verify->add_option("generators", generators, "V-rep file with the generators to check");
    verify->add_flag("--canonical-rays", canonical,
                     "rescale computed rays (disables the qsd report)");
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* qsd = app.add_subcommand("qsd-check", "subdeterminant-quotient certificate only");
    qsd->add_option("input", input, "H-cone or H-rep file")->required();
    qsd->add_option("generators", generators, "V-rep file with the generators to check");
    qsd->add_option("--limit", limit, "submatrix enumeration cap");
    qsd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* stats = app.add_subcommand("stats", "recursion metrics for a conversion");
    stats->add_option("input", input, "problem file")->required();
    stats->add_flag("--trace", with_trace, "include the recursion tree");
    stats->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (convert->parsed()) return run_convert(input, canonical, as_json);
        if (verify->parsed()) return run_verify(input, generators, canonical, as_json);
        if (qsd->parsed()) return run_qsd_check(input, generators, limit, as_json);
        if (stats->parsed()) return run_stats(input, as_json, with_trace);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EnumerationLimitError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const OracleUnavailableError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
