#include "cobord/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cobord/errors.hpp"
#include "cobord/expr.hpp"

namespace cobord {

namespace {

// Header/comment-aware line reader.
struct Lines {
    std::vector<std::string> content;
    size_t next = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            size_t begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                continue;
            size_t end = line.find_last_not_of(" \t\r");
            content.push_back(line.substr(begin, end - begin + 1));
        }
    }

    bool done() const { return next >= content.size(); }
    const std::string& peek() const { return content[next]; }
    std::string take() { return content[next++]; }
};

void expect_header(Lines& lines, const std::string& header, const std::string& what) {
    if (lines.done() || lines.take() != header)
        throw ParseError(what + " must start with '" + header + "'");
}

Signature parse_signature_line(const std::string& line) {
    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    if (keyword != "signature")
        throw ParseError("expected 'signature n s r1 ...', got '" + line + "'");
    Signature sig;
    if (!(in >> sig.n >> sig.s))
        throw ParseError("signature line needs at least n and s: '" + line + "'");
    int r;
    while (in >> r)
        sig.ranks.push_back(r);
    return sig;
}

std::string signature_line(const Signature& sig) {
    std::string out = "signature " + std::to_string(sig.n) + " " + std::to_string(sig.s);
    for (int r : sig.ranks)
        out += " " + std::to_string(r);
    return out;
}

// When the signature has a single divisor or single bundle, "c1D" and "ciE"
// may be written for "c1D1" and "ciE1".
std::string expand_symbol_aliases(const Signature& sig, const std::string& text) {
    if (sig.s != 1 && sig.bundle_count() != 1)
        return text;
    std::string out = text;
    for (size_t i = 0; i < out.size(); ++i) {
        bool divisor = out[i] == 'D' && sig.s == 1;
        bool bundle = out[i] == 'E' && sig.bundle_count() == 1;
        if (!divisor && !bundle)
            continue;
        if (i + 1 == out.size() || !std::isalnum(static_cast<unsigned char>(out[i + 1])))
            out.insert(i + 1, "1");
    }
    return out;
}

GradedPoly parse_chern_polynomial(const Signature& sig, const std::string& text) {
    VarTablePtr base = chern_symbols(sig);
    try {
        return parse_polynomial(text, base);
    } catch (const ParseError&) {
        std::string rewritten = expand_symbol_aliases(sig, text);
        if (rewritten == text)
            throw;
        return parse_polynomial(rewritten, base);
    }
}

// Canonicalizes a monomial name (any factor order, aliases allowed).
std::string normalize_monomial_name(const Signature& sig, const std::string& name) {
    GradedPoly p = parse_chern_polynomial(sig, name);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw ParseError("'" + name + "' is not a plain Chern monomial");
    int weight = p.term_degree(p.terms().begin()->first);
    if (weight != sig.n)
        throw ParseError("'" + name + "' does not have weight n for " + sig.str());
    return monomial_name(sig, ChernMonomial{p.terms().begin()->first});
}

} // namespace

ChernVector parse_chern_vector(const std::string& text) {
    Lines lines(text);
    expect_header(lines, "cobord-chern-vector v1", "Chern vector file");
    if (lines.done())
        throw ParseError("missing signature line");
    Signature sig = parse_signature_line(lines.take());

    std::map<std::string, Rational> values;
    while (!lines.done()) {
        std::istringstream in(lines.take());
        std::string name, value;
        if (!(in >> name >> value))
            throw ParseError("expected 'monomial value' line");
        std::string extra;
        if (in >> extra)
            throw ParseError("trailing data after value for '" + name + "'");
        std::string canonical = normalize_monomial_name(sig, name);
        if (!values.emplace(canonical, parse_rational(value)).second)
            throw ParseError("duplicate entry for '" + canonical + "'");
    }

    ChernVector v;
    v.sig = sig;
    for (const ChernMonomial& m : enumerate_chern_monomials(sig)) {
        auto it = values.find(monomial_name(sig, m));
        if (it == values.end())
            throw ParseError("missing value for '" + monomial_name(sig, m) + "'");
        v.values.push_back(it->second);
        values.erase(it);
    }
    return v;
}

std::string format_chern_vector(const ChernVector& v) {
    std::string out = "cobord-chern-vector v1\n" + signature_line(v.sig) + "\n";
    auto monos = enumerate_chern_monomials(v.sig);
    for (size_t i = 0; i < monos.size(); ++i)
        out += monomial_name(v.sig, monos[i]) + " " + to_string(v.values[i]) + "\n";
    return out;
}

namespace {

// A degree-<=1 expression over the tower generators with integer coefficients.
LineBundleExpr parse_line_bundle(const std::string& text, const TowerVariety& tower) {
    std::string trimmed = text;
    if (trimmed == "0")
        return LineBundleExpr{};
    GradedPoly p = parse_polynomial(trimmed, tower.vars());
    LineBundleExpr expr;
    expr.coeffs.assign(tower.vars()->size(), 0);
    for (const auto& [exps, coeff] : p.terms()) {
        int degree = 0;
        size_t which = 0;
        for (size_t i = 0; i < exps.size(); ++i) {
            degree += exps[i];
            if (exps[i] > 0)
                which = i;
        }
        if (degree != 1)
            throw ParseError("line bundle expression must be linear: '" + text + "'");
        if (coeff.get_den() != 1)
            throw ParseError("line bundle coefficients must be integers: '" + text + "'");
        expr.coeffs[which] = static_cast<int>(coeff.get_num().get_si());
    }
    return expr;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

GeometryData parse_geometry_lines(Lines& lines) {
    GeometryData geom;
    bool saw_stage_section = false;
    while (!lines.done()) {
        const std::string& line = lines.peek();
        if (line.size() >= 2 && line.front() == '[')
            break; // next block of a relation file
        std::istringstream in(lines.take());
        std::string keyword;
        in >> keyword;
        if (keyword == "stage") {
            std::string kind;
            in >> kind;
            if (kind == "proj") {
                int m = -1;
                if (!(in >> m) || m < 0)
                    throw ParseError("stage proj needs a nonnegative dimension");
                geom.tower.add_projective_space(m);
            } else if (kind == "bundle") {
                std::string rest;
                std::getline(in, rest);
                BundleSpec spec;
                for (const std::string& piece : split_on(rest, ','))
                    spec.summands.push_back(parse_line_bundle(
                        piece.find_first_not_of(" \t") == std::string::npos
                            ? "0"
                            : piece.substr(piece.find_first_not_of(" \t")),
                        geom.tower));
                geom.tower.add_projective_bundle(spec);
            } else {
                throw ParseError("unknown stage kind '" + kind + "'");
            }
            saw_stage_section = true;
        } else if (keyword == "divisor") {
            std::string rest;
            std::getline(in, rest);
            size_t begin = rest.find_first_not_of(" \t");
            if (begin == std::string::npos)
                throw ParseError("divisor line needs an expression");
            std::string expr = rest.substr(begin);
            if (expr == "0") {
                geom.divisor_classes.push_back(geom.tower.zero_class());
            } else {
                GradedPoly cls = parse_polynomial(expr, geom.tower.vars());
                int degree = 0;
                if (!cls.is_homogeneous(&degree) || degree != 1)
                    throw ParseError("divisor class must be linear in the generators: '" +
                                     expr + "'");
                geom.divisor_classes.push_back(geom.tower.reduce(cls));
            }
        } else if (keyword == "bundle") {
            std::string rest;
            std::getline(in, rest);
            BundleSpec spec;
            for (const std::string& piece : split_on(rest, ',')) {
                size_t begin = piece.find_first_not_of(" \t");
                spec.summands.push_back(
                    parse_line_bundle(begin == std::string::npos ? "0" : piece.substr(begin),
                                      geom.tower));
            }
            geom.bundles.push_back(std::move(spec));
        } else {
            throw ParseError("unknown geometry keyword '" + keyword + "'");
        }
    }
    if (!saw_stage_section && geom.tower.stage_count() == 0 && geom.divisor_classes.empty() &&
        geom.bundles.empty())
        throw ParseError("empty geometry block");
    return geom;
}

} // namespace

GeometryData parse_geometry(const std::string& text) {
    Lines lines(text);
    expect_header(lines, "cobord-geometry v1", "geometry file");
    GeometryData geom = parse_geometry_lines(lines);
    if (!lines.done())
        throw ParseError("unexpected block marker in a plain geometry file");
    return geom;
}

DegenerationFile parse_dpr_file(const std::string& text) {
    Lines lines(text);
    expect_header(lines, "cobord-dpr v1", "degeneration relation file");
    DegenerationFile file;
    for (int i = 0; i < 4; ++i) {
        std::string marker = "[Y" + std::to_string(i) + "]";
        if (lines.done() || lines.take() != marker)
            throw ParseError("expected block marker " + marker);
        file.pieces[i] = parse_geometry_lines(lines);
    }
    if (!lines.done())
        throw ParseError("trailing content after [Y3] block");
    return file;
}

CoeffTable parse_coeff_table(const std::string& text) {
    Lines lines(text);
    expect_header(lines, "cobord-coeff-table v1", "coefficient table file");
    if (lines.done())
        throw ParseError("missing signature line");
    Signature sig = parse_signature_line(lines.take());
    CoeffTable table(sig);

    while (!lines.done()) {
        std::string line = lines.take();
        std::istringstream in(line);
        std::string keyword;
        in >> keyword;
        if (keyword != "entry")
            throw ParseError("expected 'entry ( beta | delta ) polynomial', got '" + line + "'");
        size_t open = line.find('(');
        size_t close = line.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw ParseError("entry needs a '( beta | delta )' key: '" + line + "'");
        std::string key_text = line.substr(open + 1, close - open - 1);
        size_t bar = key_text.find('|');
        if (bar == std::string::npos)
            throw ParseError("entry key needs 'beta | delta': '" + line + "'");
        TypeMultiset key;
        key.beta = parse_label_multiset(key_text.substr(0, bar));
        key.delta = parse_label_multiset(key_text.substr(bar + 1));

        std::string poly_text = line.substr(close + 1);
        if (poly_text.find_first_not_of(" \t") == std::string::npos)
            throw ParseError("entry is missing its polynomial: '" + line + "'");

        table.set_entry(key, base_to_theta(table, parse_chern_polynomial(sig, poly_text)));
    }
    return table;
}

std::string format_coeff_table(const CoeffTable& table) {
    std::string out = "cobord-coeff-table v1\n" + signature_line(table.sig()) + "\n";
    for (const auto& [key, poly] : table.entries()) {
        // theta variables are named by the monomials themselves
        std::string body = poly.str();
        out += "entry " + key.str() + " " + body + "\n";
    }
    return out;
}

std::vector<SingularityRecord> parse_singularity_table(const std::string& text) {
    Lines lines(text);
    expect_header(lines, "cobord-singularities v1", "singularity table file");
    std::vector<SingularityRecord> records;
    while (!lines.done()) {
        std::string line = lines.take();
        std::vector<std::string> fields = split_on(line, '|');
        if (fields.size() != 4)
            throw ParseError("expected 'label | vars | germ | tau det length': '" + line + "'");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            if (b == std::string::npos)
                return std::string();
            size_t e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        SingularityRecord rec;
        rec.label = trim(fields[0]);
        for (const std::string& v : split_on(trim(fields[1]), ','))
            rec.variables.push_back(trim(v));
        rec.germ = trim(fields[2]);
        std::istringstream nums(fields[3]);
        if (!(nums >> rec.tau >> rec.determinacy >> rec.length))
            throw ParseError("bad invariant triple in '" + line + "'");
        if (rec.label.empty() || rec.germ.empty() || rec.variables.empty())
            throw ParseError("incomplete singularity record: '" + line + "'");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string format_singularity_table(const std::vector<SingularityRecord>& records) {
    std::string out = "cobord-singularities v1\n";
    out += "# label | variables | germ | tau determinacy length\n";
    for (const SingularityRecord& rec : records) {
        std::string vars;
        for (size_t i = 0; i < rec.variables.size(); ++i) {
            if (i)
                vars += ",";
            vars += rec.variables[i];
        }
        out += rec.label + " | " + vars + " | " + rec.germ + " | " + std::to_string(rec.tau) +
               " " + std::to_string(rec.determinacy) + " " + std::to_string(rec.length) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << content;
}

} // namespace cobord
