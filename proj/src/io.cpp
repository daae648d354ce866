#include "polycone/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace polycone {

std::size_t ProblemFile::dimension() const {
    switch (kind()) {
        case ProblemKind::h_cone: return cone().ambient_dim();
        case ProblemKind::h_polyhedron: return h_polyhedron().ambient_dim();
        case ProblemKind::v_polyhedron: return v_polyhedron().ambient_dim();
    }
    return 0;
}

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        Token t{{}, line, column};
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
            t.text.push_back(text[i]);
            ++i;
            ++column;
        }
        tokens.push_back(std::move(t));
    }
    return tokens;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& next(const std::string& expectation) {
        if (pos_ >= tokens_.size()) {
            const Token& last = tokens_.empty() ? eof_ : tokens_.back();
            throw ParseError(last.line, last.column + last.text.size(),
                             "unexpected end of input, expected " + expectation);
        }
        return tokens_[pos_++];
    }

    bool exhausted() const { return pos_ >= tokens_.size(); }

    // Position of the upcoming token (or of the end of input when exhausted).
    const Token& current() const {
        if (pos_ < tokens_.size()) return tokens_[pos_];
        return tokens_.empty() ? eof_ : tokens_.back();
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Token eof_{"", 1, 1};
};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t parse_count(TokenStream& ts, const std::string& what) {
    const Token& t = ts.next(what);
    if (!all_digits(t.text)) throw ParseError(t.line, t.column, "expected " + what);
    try {
        return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, what + " out of range");
    }
}

Rational parse_rational(TokenStream& ts) {
    const Token& t = ts.next("a rational number");
    std::string_view s = t.text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!all_digits(num)) throw ParseError(t.line, t.column, "malformed rational '" + t.text + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(den))
            throw ParseError(t.line, t.column, "malformed rational '" + t.text + "'");
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw ParseError(t.line, t.column, "zero denominator in '" + t.text + "'");
    }
    if (negative) n = -n;
    return Rational(n, d);
}

RatVector parse_row(TokenStream& ts, std::size_t n) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = parse_rational(ts);
    return v;
}

RatMatrix parse_block(TokenStream& ts, std::size_t rows, std::size_t cols) {
    RatMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(parse_row(ts, cols));
    return m;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    TokenStream ts(tokenize(text));
    const Token header = ts.next("a header (H-cone, H-rep or V-rep)");

    ProblemFile out{HCone::whole_space(1)};
    if (header.text == "H-cone") {
        const std::size_t n = parse_count(ts, "the ambient dimension");
        if (n == 0) throw ParseError(header.line, header.column, "dimension must be at least 1");
        const std::size_t p = parse_count(ts, "the inequality count");
        const std::size_t q = parse_count(ts, "the equation count");
        RatMatrix b = parse_block(ts, p, n);
        RatMatrix c = parse_block(ts, q, n);
        out.value = HCone(std::move(b), std::move(c));
    } else if (header.text == "H-rep") {
        const std::size_t m = parse_count(ts, "the row count");
        const std::size_t n = parse_count(ts, "the ambient dimension");
        if (n == 0) throw ParseError(header.line, header.column, "dimension must be at least 1");
        RatMatrix a(0, n);
        RatVector b(m);
        for (std::size_t r = 0; r < m; ++r) {
            a.append_row(parse_row(ts, n)); // coefficients first,
            b[r] = parse_rational(ts);      // then the bound
        }
        out.value = HPolyhedron(std::move(a), std::move(b));
    } else if (header.text == "V-rep") {
        const std::size_t n = parse_count(ts, "the ambient dimension");
        if (n == 0) throw ParseError(header.line, header.column, "dimension must be at least 1");
        const std::size_t nv = parse_count(ts, "the point count");
        const std::size_t nw = parse_count(ts, "the ray count");
        VPolyhedron q(n);
        for (std::size_t i = 0; i < nv; ++i) q.add_point(parse_row(ts, n));
        for (std::size_t i = 0; i < nw; ++i) {
            const Token& at = ts.current();
            RatVector w = parse_row(ts, n);
            if (w.is_zero()) throw ParseError(at.line, at.column, "zero vector used as a ray");
            q.add_ray(w);
        }
        out.value = std::move(q);
    } else {
        throw ParseError(header.line, header.column, "unknown header '" + header.text + "'");
    }

    if (!ts.exhausted()) {
        const Token& extra = ts.current();
        throw ParseError(extra.line, extra.column, "unexpected trailing token '" + extra.text + "'");
    }
    return out;
}

namespace {

std::vector<RatVector> sorted_rows(const RatMatrix& m) {
    std::vector<RatVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::sort(rows.begin(), rows.end());
    return rows;
}

void write_rows(std::ostringstream& os, const std::vector<RatVector>& rows) {
    for (const RatVector& r : rows) os << r.str() << '\n';
}

} // namespace

std::string write_hcone(const HCone& cone) {
    std::ostringstream os;
    os << "H-cone " << cone.ambient_dim() << ' ' << cone.num_inequalities() << ' '
       << cone.num_equations() << '\n';
    write_rows(os, sorted_rows(cone.B()));
    write_rows(os, sorted_rows(cone.C()));
    return os.str();
}

std::string write_hpolyhedron(const HPolyhedron& p) {
    std::ostringstream os;
    os << "H-rep " << p.num_rows() << ' ' << p.ambient_dim() << '\n';
    std::vector<RatVector> rows;
    rows.reserve(p.num_rows());
    for (std::size_t r = 0; r < p.num_rows(); ++r) {
        RatVector full(p.ambient_dim() + 1);
        for (std::size_t c = 0; c < p.ambient_dim(); ++c) full[c] = p.A()(r, c);
        full[p.ambient_dim()] = p.b()[r];
        rows.push_back(std::move(full));
    }
    std::sort(rows.begin(), rows.end());
    write_rows(os, rows);
    return os.str();
}

std::string write_vpolyhedron(const VPolyhedron& q) {
    std::ostringstream os;
    os << "V-rep " << q.ambient_dim() << ' ' << q.points().size() << ' ' << q.rays().size()
       << '\n';
    for (const RatVector& v : q.points()) os << v.str() << '\n';
    for (const RatVector& w : q.rays()) os << w.str() << '\n';
    return os.str();
}

std::string write_generators(const GeneratorSet& gens) {
    std::ostringstream os;
    os << "V-rep " << gens.dim() << " 0 " << gens.size() << '\n';
    for (const RatVector& g : gens.vectors()) os << g.str() << '\n';
    return os.str();
}

std::string write_problem(const ProblemFile& file) {
    switch (file.kind()) {
        case ProblemKind::h_cone: return write_hcone(file.cone());
        case ProblemKind::h_polyhedron: return write_hpolyhedron(file.h_polyhedron());
        case ProblemKind::v_polyhedron: return write_vpolyhedron(file.v_polyhedron());
    }
    return {};
}

std::string certificate_report(const Certificate& cert) {
    std::ostringstream os;
    std::size_t sound_fail = 0;
    for (std::size_t i = 0; i < cert.soundness.size(); ++i) {
        if (!cert.soundness[i]) {
            ++sound_fail;
            os << "soundness FAIL: generator " << i + 1 << " violates the system\n";
        }
    }
    os << "soundness: " << (sound_fail == 0 ? "PASS" : "FAIL") << " ("
       << cert.soundness.size() - sound_fail << "/" << cert.soundness.size() << " generators)\n";

    if (cert.oracle_available) {
        std::size_t complete_fail = 0;
        for (std::size_t i = 0; i < cert.completeness.size(); ++i) {
            if (!cert.completeness[i]) {
                ++complete_fail;
                os << "completeness FAIL: oracle ray " << i + 1 << " is not covered\n";
            }
        }
        os << "completeness: " << (complete_fail == 0 ? "PASS" : "FAIL") << " ("
           << cert.completeness.size() - complete_fail << "/" << cert.completeness.size()
           << " oracle rays)\n";
    } else {
        os << "completeness: SKIPPED (" << cert.oracle_note << ")\n";
    }

    if (!cert.qsd.empty()) {
        const QsdSummary& s = cert.qsd_summary;
        os << "qsd components: " << s.members << " member, " << s.zeros << " zero, "
           << s.non_members << " non-member, " << s.inconclusive << " inconclusive\n";
        os << "qsd: " << (s.all_admitted() ? "PASS" : "FAIL") << '\n';
    }

    if (cert.stats) {
        os << "recursion: " << cert.stats->nodes << " nodes, depth " << cert.stats->max_depth
           << '\n';
    }
    os << "overall: " << (cert.pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string stats_report(const ConversionStats& stats, std::size_t generator_count) {
    std::ostringstream os;
    os << "nodes: " << stats.nodes << '\n'
       << "max-depth: " << stats.max_depth << '\n'
       << "flat-nodes: " << stats.flat_nodes << '\n'
       << "split-nodes: " << stats.split_nodes << '\n'
       << "emitted-vectors: " << stats.emitted_vectors << '\n'
       << "generators: " << generator_count << '\n';
    return os.str();
}

} // namespace polycone
