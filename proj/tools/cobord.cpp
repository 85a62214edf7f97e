#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cobord/cobordism.hpp"
#include "cobord/io.hpp"
#include "cobord/series.hpp"
#include "cobord/severi.hpp"

namespace {

using namespace cobord;

std::vector<int> parse_ranks(const std::string& text) {
    std::vector<int> ranks;
    if (text.empty() || text == "-")
        return ranks;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            ranks.push_back(std::stoi(piece));
        } catch (...) {
            throw ParseError("bad rank list '" + text + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return ranks;
}

std::vector<int> parse_int_list(const std::string& text) {
    return parse_ranks(text);
}

TypeMultiset parse_types(const std::string& text) {
    size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw ParseError("types must be written '<beta labels> | <delta labels>'");
    TypeMultiset m;
    m.beta = parse_label_multiset(text.substr(0, bar));
    m.delta = parse_label_multiset(text.substr(bar + 1));
    return m;
}

CoeffTable load_table(const std::string& path) {
    if (path.empty())
        return kp_surface_table();
    return parse_coeff_table(read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int cmd_basis(int n, int s, const std::string& ranks_text) {
    Signature sig{n, s, parse_ranks(ranks_text)};
    auto lists = enumerate_partition_lists(sig);
    std::cout << "# basis of " << sig.str() << ": " << lists.size() << " elements\n";
    for (size_t i = 0; i < lists.size(); ++i) {
        BasisElement elem = basis_element(sig, lists[i]);
        std::cout << i << "\t" << lists[i].str() << "\t" << lists[i].machine_str() << "\t"
                  << elem.describe() << "\n";
    }
    return 0;
}

int cmd_chern(const std::string& geometry_path, const std::string& out_path) {
    GeometryData geom = parse_geometry(read_file(geometry_path));
    emit(format_chern_vector(geom.to_chern_vector()), out_path);
    return 0;
}

int cmd_pairing_matrix(int n, int s, const std::string& ranks_text, bool show_matrix) {
    Signature sig{n, s, parse_ranks(ranks_text)};
    PairingMatrix m = pairing_matrix(sig);
    std::cout << "# pairing matrix of " << sig.str() << "\n";
    std::cout << "size " << m.basis.size() << "\n";
    std::cout << "det " << to_string(m.det) << "\n";
    std::cout << "triangular " << (check_triangular(m) ? "yes" : "no") << "\n";
    if (show_matrix) {
        std::cout << "# columns:";
        for (const ChernMonomial& mono : m.monomials)
            std::cout << " " << monomial_name(sig, mono);
        std::cout << "\n";
        for (size_t r = 0; r < m.basis.size(); ++r) {
            std::cout << m.basis[r].str() << "\t";
            for (size_t c = 0; c < m.monomials.size(); ++c) {
                if (c)
                    std::cout << " ";
                std::cout << to_string(m.entries.at(r, c));
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_decompose(const std::string& vector_path) {
    ChernVector v = parse_chern_vector(read_file(vector_path));
    auto coords = decompose(v);
    std::cout << "# coordinates in the basis of " << v.sig.str() << "\n";
    for (const auto& [pl, coeff] : coords)
        std::cout << to_string(coeff) << "\t" << pl.str() << "\t" << pl.machine_str() << "\n";
    return 0;
}

int cmd_icis(const std::string& germ_text, const std::string& vars_text, int max_truncation,
             int user_k) {
    std::vector<std::string> vars;
    if (!vars_text.empty()) {
        size_t start = 0;
        while (start <= vars_text.size()) {
            size_t comma = vars_text.find(',', start);
            vars.push_back(vars_text.substr(start, comma == std::string::npos ? comma
                                                                              : comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    GermMap germ = parse_germ(germ_text, vars);
    std::cout << "germ " << germ_text << "\n";
    std::cout << "variables " << germ.num_vars() << "\n";
    std::cout << "dimension " << germ.dim() << "\n";
    std::cout << "tau " << tjurina(germ, max_truncation) << "\n";
    int k = user_k;
    if (k <= 0) {
        try {
            k = determinacy_bound(germ);
            std::cout << "determinacy " << k << "\n";
        } catch (const Unsupported&) {
            std::cout << "determinacy unsupported (not a hypersurface; pass --k)\n";
            return 0;
        }
    } else {
        std::cout << "determinacy " << k << " (given)\n";
    }
    std::cout << "length " << length_N(germ, k) << "\n";
    return 0;
}

int cmd_icis_table(const std::string& out_path) {
    emit(format_singularity_table(builtin_singularities()), out_path);
    return 0;
}

int cmd_count(const std::string& geometry_path, const std::string& types_text,
              const std::string& table_path, int bound, bool symbolic, bool whole_series) {
    CoeffTable table = load_table(table_path);
    TypeMultiset types;
    if (!types_text.empty())
        types = parse_types(types_text);
    else if (!whole_series)
        throw InvalidState("need --types (or --series for the full table)");
    if (bound < 0)
        bound = whole_series ? 3 : types.total_points();
    if (symbolic) {
        GradedPoly poly = universal_polynomial(table, types);
        std::cout << theta_poly_str(poly) << "\n";
        return 0;
    }
    if (geometry_path.empty())
        throw InvalidState("numeric counts need --geometry (or use --symbolic)");
    GeometryData geom = parse_geometry(read_file(geometry_path));
    ChernVector v = geom.to_chern_vector();
    GenSeries series = exp_series(table, v, bound);
    if (whole_series) {
        std::cout << "# series coefficients to bound " << bound << "\n";
        for (const auto& [key, value] : series.coeffs)
            std::cout << key.str() << " " << to_string(value) << "\n";
        return 0;
    }
    std::cout << to_string(series_coefficient(series, types)) << "\n";
    return 0;
}

int cmd_severi(int d, int delta, const std::string& alpha_text, const std::string& beta_text,
               int through, bool machine) {
    if (through > 0) {
        if (!alpha_text.empty() || !beta_text.empty())
            throw InvalidState("--through tables use the default tangency profile");
        if (machine) {
            std::cout << "cobord-severi-table v1\n";
            std::cout << "delta " << delta << "\n";
            for (int dd = d; dd <= through; ++dd)
                std::cout << dd << " " << to_string(severi(severi_state(dd, delta))) << "\n";
        } else {
            std::cout << "   d   N^(d," << delta << ")\n";
            for (int dd = d; dd <= through; ++dd) {
                std::string value = to_string(severi(severi_state(dd, delta)));
                std::cout.width(4);
                std::cout << dd;
                std::cout << "   " << value << "\n";
            }
        }
        return 0;
    }

    CHState state;
    state.d = d;
    state.delta = delta;
    if (alpha_text.empty() && beta_text.empty()) {
        state = severi_state(d, delta);
    } else {
        state.alpha = parse_int_list(alpha_text);
        state.beta = parse_int_list(beta_text);
    }
    std::cout << to_string(severi(state)) << "\n";
    return 0;
}

int cmd_verify_dpr(const std::string& path, const std::string& table_path, int bound) {
    DegenerationFile file = parse_dpr_file(read_file(path));
    ChernVector n0 = file.pieces[0].to_chern_vector();
    ChernVector n1 = file.pieces[1].to_chern_vector();
    ChernVector n2 = file.pieces[2].to_chern_vector();
    ChernVector n3 = file.pieces[3].to_chern_vector();

    bool additive = dpr_check(n0, n1, n2, n3);
    CoeffTable table = load_table(table_path);
    bool series_ok = degeneration_identity_check(table, n0, n1, n2, n3, bound);

    if (additive && series_ok) {
        std::cout << "OK (Chern additivity + series identity)\n";
        return 0;
    }
    if (!additive)
        std::cout << "FAIL: Chern numbers violate n0 = n1 + n2 - n3\n";
    if (!series_ok)
        std::cout << "FAIL: generating series violate T0*T3 = T1*T2 (bound " << bound << ")\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for counting singular subvarieties with tangency conditions"};
    app.require_subcommand(1);

    int n = 0, s = 0;
    std::string ranks, geometry_path, out_path, vector_path, germ_text, vars_text;
    std::string types_text, table_path, alpha_text, beta_text, dpr_path;
    int max_truncation = 16, bound = -1, d = 0, delta = 0, through = 0, user_k = 0;
    int dpr_bound = 4;
    bool show_matrix = false, symbolic = false, machine = false, whole_series = false;

    CLI::App* basis = app.add_subcommand("basis", "list the basis indexed by partition lists");
    basis->add_option("n", n, "total size")->required();
    basis->add_option("s", s, "number of divisor slots")->required();
    basis->add_option("ranks", ranks, "comma-separated bundle ranks, '-' for none");

    CLI::App* chern = app.add_subcommand("chern", "Chern numbers of a geometry file");
    chern->add_option("--geometry", geometry_path, "geometry file")->required();
    chern->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* pairing = app.add_subcommand("pairing-matrix", "pairing of basis against monomials");
    pairing->add_option("n", n, "total size")->required();
    pairing->add_option("s", s, "number of divisor slots")->required();
    pairing->add_option("ranks", ranks, "comma-separated bundle ranks, '-' for none");
    pairing->add_flag("--matrix", show_matrix, "print all entries");

    CLI::App* dec = app.add_subcommand("decompose", "basis coordinates of a Chern vector");
    dec->add_option("--vector", vector_path, "Chern vector file")->required();

    CLI::App* icis_cmd = app.add_subcommand("icis", "invariants of an isolated singularity germ");
    icis_cmd->add_option("germ", germ_text, "e.g. \"x^2 + y^3\" or \"x^2 - y*z; y^2 - x*z\"")
        ->required();
    icis_cmd->add_option("--vars", vars_text, "comma-separated ambient variables");
    icis_cmd->add_option("--max-truncation", max_truncation, "stabilization cap");
    icis_cmd->add_option("--k", user_k, "override the determinacy order for the length");

    CLI::App* icis_table = app.add_subcommand("icis-table", "regenerate the singularity table");
    icis_table->add_option("--write", out_path, "write to a file instead of stdout");

    CLI::App* count = app.add_subcommand("count", "coefficient of a type multiset in the series");
    count->add_option("--geometry", geometry_path, "geometry file (numeric mode)");
    count->add_option("--types", types_text, "'<beta> | <delta>', e.g. 'tan2 | A1:2'");
    count->add_option("--table", table_path, "coefficient table file (default: shipped surface data)");
    count->add_option("--bound", bound, "series truncation bound");
    count->add_flag("--symbolic", symbolic, "print the universal polynomial instead");
    count->add_flag("--series", whole_series, "print every coefficient up to the bound");

    CLI::App* severi_cmd = app.add_subcommand("severi", "Caporaso-Harris invariants");
    severi_cmd->add_option("d", d, "curve degree")->required();
    severi_cmd->add_option("delta", delta, "node count")->required();
    severi_cmd->add_option("--alpha", alpha_text, "assigned contact orders a1,a2,...");
    severi_cmd->add_option("--beta", beta_text, "unassigned contact orders b1,b2,...");
    severi_cmd->add_option("--through", through, "tabulate d..THROUGH");
    severi_cmd->add_flag("--machine", machine, "machine-readable table output");

    CLI::App* verify = app.add_subcommand("verify-dpr", "check a degeneration relation file");
    verify->add_option("file", dpr_path, "relation file with [Y0]..[Y3] blocks")->required();
    verify->add_option("--table", table_path, "coefficient table for the series identity");
    verify->add_option("--bound", dpr_bound, "series truncation bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed())
            return cmd_basis(n, s, ranks);
        if (chern->parsed())
            return cmd_chern(geometry_path, out_path);
        if (pairing->parsed())
            return cmd_pairing_matrix(n, s, ranks, show_matrix);
        if (dec->parsed())
            return cmd_decompose(vector_path);
        if (icis_cmd->parsed())
            return cmd_icis(germ_text, vars_text, max_truncation, user_k);
        if (icis_table->parsed())
            return cmd_icis_table(out_path);
        if (count->parsed())
            return cmd_count(geometry_path, types_text, table_path, bound, symbolic,
                             whole_series);
        if (severi_cmd->parsed())
            return cmd_severi(d, delta, alpha_text, beta_text, through, machine);
        if (verify->parsed())
            return cmd_verify_dpr(dpr_path, table_path, dpr_bound);
    } catch (const cobord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
