#include "treespectra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "treespectra/charpoly.hpp"
#include "treespectra/closed_form.hpp"
#include "treespectra/graph.hpp"
#include "treespectra/randic.hpp"
#include "treespectra/spectra.hpp"

namespace treespectra::cli {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string sqrt_form(const EigenvalueGroup& g) {
    if (g.branch == 0) return "1";
    if (!g.alpha) return {};
    return std::string("1") + (g.branch > 0 ? "+" : "-") + "sqrt(" + g.alpha->to_string() + ")";
}

// Coefficients leading-first, as lossless "num/den" strings.
json coeff_strings_descending(const RationalPolynomial& p) {
    json arr = json::array();
    for (int i = p.degree(); i >= 0; --i) arr.push_back(p.coeff(i).to_string());
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

struct ComputeResult {
    std::string description;
    int n = 0;
    int k = 0;
    std::vector<BigRational> indices;
    RationalPolynomial charpoly;
    RationalPolynomial psi;
    std::vector<EigenvalueGroup> eigenvalues;
    double residual = 0.0;
};

ComputeResult compute_tree(const Tree& t, std::string description, double tol) {
    ComputeResult r;
    r.description = std::move(description);
    r.n = t.n();
    r.charpoly = tree_charpoly(t);
    if (t.n() == 1) {
        // L of an isolated vertex is [0]; the matching-index route needs n >= 2
        r.k = 0;
        r.indices = {BigRational(1)};
        r.psi = RationalPolynomial::constant(BigRational(1));
        r.eigenvalues.push_back({0.0, 1, std::nullopt, +1});
        return r;
    }
    MatchingIndexVector miv = randic_indices_tree(t, -1);
    r.k = miv.k;
    r.indices = miv.values;
    r.psi = reduced_polynomial(miv);
    SpectrumReport report = reconcile(t, tol);
    r.eigenvalues = report.exact.eigenvalues;
    r.residual = report.max_abs_residual;
    return r;
}

json to_json(const ComputeResult& r) {
    json j;
    j["input"] = r.description;
    j["n"] = r.n;
    j["k"] = r.k;
    json idx = json::array();
    for (const auto& v : r.indices) idx.push_back(v.to_string());
    j["indices"] = idx;
    j["charpoly"] = coeff_strings_descending(r.charpoly);
    j["psi"] = coeff_strings_descending(r.psi);
    json eig = json::array();
    for (const auto& g : r.eigenvalues) {
        json e;
        e["value"] = g.value;
        e["multiplicity"] = g.multiplicity;
        std::string form = sqrt_form(g);
        if (form.empty())
            e["sqrt_form"] = nullptr;
        else
            e["sqrt_form"] = form;
        eig.push_back(e);
    }
    j["eigenvalues"] = eig;
    j["residual"] = r.residual;
    return j;
}

void print_text(const ComputeResult& r, std::ostream& out) {
    out << "input:    " << r.description << "\n";
    out << "n: " << r.n << "  k: " << r.k << "\n";
    out << "indices:  ";
    for (size_t i = 0; i < r.indices.size(); ++i)
        out << (i ? ", " : "") << r.indices[i].to_string();
    out << "\n";
    out << "charpoly: " << r.charpoly.to_string("x") << "\n";
    out << "psi:      " << r.psi.to_string("y") << "\n";
    out << "eigenvalues:\n";
    for (const auto& g : r.eigenvalues) {
        out << "  " << format_double(g.value) << "  x" << g.multiplicity;
        std::string form = sqrt_form(g);
        if (!form.empty() && form != "1") out << "  = " << form;
        out << "\n";
    }
    out << "residual: " << format_double(r.residual) << "\n";
}

struct ComputeOptions {
    std::string file;
    int path_n = 0;
    int star_n = 0;
    std::vector<int> starlike;
    std::vector<int> double_starlike;
    std::string format = "json";
    double tol = 1e-9;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    std::optional<Graph> g;
    std::string desc;
    try {
        if (!opt.file.empty()) {
            std::ifstream in(opt.file);
            if (!in) {
                err << "cannot open '" << opt.file << "'\n";
                return 2;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            g = parse_edge_list(buf.str());
            desc = "file(" + opt.file + ")";
        } else if (opt.path_n > 0) {
            g = build_path(opt.path_n).graph();
            desc = "path(" + std::to_string(opt.path_n) + ")";
        } else if (opt.star_n > 0) {
            g = build_star(opt.star_n);
            desc = "star(" + std::to_string(opt.star_n) + ")";
        } else if (!opt.starlike.empty()) {
            StarlikeSpec spec(opt.starlike);
            g = build_starlike(spec).graph();
            desc = "starlike" + spec.to_string().substr(1);
        } else if (!opt.double_starlike.empty()) {
            if (opt.double_starlike.size() != 3) {
                err << "--double-starlike needs m,p,q\n";
                return 2;
            }
            DoubleStarlikeSpec spec(opt.double_starlike[0], opt.double_starlike[1],
                                    opt.double_starlike[2]);
            g = build_double_starlike(spec).graph();
            desc = "double_starlike(" + std::to_string(spec.m()) + "," + std::to_string(spec.p()) +
                   "," + std::to_string(spec.q()) + ")";
        } else {
            err << "compute: give one of --file, --path, --star, --starlike, --double-starlike\n";
            return 2;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "bad input: " << e.what() << "\n";
        return 2;
    }

    if (!g->is_tree_shaped()) {
        err << "input graph is not a tree (n=" << g->n() << ", edges=" << g->edge_count() << ")\n";
        return 3;
    }
    ComputeResult r = compute_tree(Tree(*g), desc, opt.tol);
    if (opt.format == "text")
        print_text(r, out);
    else
        out << to_json(r).dump(2) << "\n";
    return 0;
}

int cmd_table(const std::string& name, std::ostream& out, std::ostream& err) {
    if (name != "starlike8") {
        err << "unknown table '" << name << "' (available: starlike8)\n";
        return 2;
    }
    static const std::vector<std::vector<int>> partitions = {
        {1, 1, 5},       {1, 2, 4},       {1, 3, 3},    {2, 2, 3},    {1, 1, 1, 4},
        {1, 1, 2, 3},    {1, 2, 2, 2},    {1, 1, 1, 1, 3}, {1, 1, 1, 2, 2}, {1, 1, 1, 1, 1, 2}};
    out << "starlike trees on 8 vertices\n";
    out << "row  partition      indices                        eigenvalues\n";
    int row = 0;
    for (const auto& part : partitions) {
        StarlikeSpec spec(part);
        Tree t = build_starlike(spec);
        MatchingIndexVector miv = randic_indices_tree(t, -1);
        ExactSpectrum spectrum = exact_spectrum(t);

        std::string part_str;
        for (size_t i = 0; i < part.size(); ++i)
            part_str += (i ? "," : "") + std::to_string(part[i]);
        std::string idx_str;
        for (int i = 1; i <= miv.k; ++i)
            idx_str += (i > 1 ? ", " : "") + miv.values[static_cast<size_t>(i)].to_string();
        std::string eig_str;
        for (size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
            const auto& g = spectrum.eigenvalues[i];
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", g.value);
            eig_str += (i ? ", " : "") + std::string(buf);
            if (g.multiplicity > 1) eig_str += "^" + std::to_string(g.multiplicity);
        }
        char line[64];
        std::snprintf(line, sizeof(line), "%2d.  %-13s  %-29s  ", ++row, part_str.c_str(),
                      idx_str.c_str());
        out << line << eig_str << "\n";
    }
    return 0;
}

struct VerifyOptions {
    int trees = 500;
    int max_n = 16;
    std::uint64_t seed = 7;
    double tol = 1e-9;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.trees < 1 || opt.max_n < 2) {
        err << "verify: need --trees >= 1 and --max-n >= 2\n";
        return 2;
    }
    std::vector<Tree> corpus = random_tree_corpus(opt.trees, 2, opt.max_n, opt.seed);

    auto fail = [&](const Tree& t, const std::string& what) {
        out << "FAIL: " << what << "\n";
        out << "counterexample edge list:\n" << serialize_edge_list(t.graph());
        return 1;
    };

    // alternating sum of the alpha=-1 indices must vanish exactly
    for (const auto& t : corpus) {
        MatchingIndexVector miv = randic_indices_tree(t, -1);
        BigRational s = verify_zero_sum(miv);
        if (!s.is_zero())
            return fail(t, "zero-sum identity violated, residual " + s.to_string());
    }
    out << "zero-sum identity        " << corpus.size() << "/" << corpus.size() << " trees ok\n";

    // the tree recursion must agree with brute-force enumeration
    for (const auto& t : corpus) {
        for (long alpha : {-1L, 1L}) {
            MatchingIndexVector dp = randic_indices_tree(t, alpha);
            MatchingIndexVector brute = randic_indices_bruteforce(t.graph(), alpha);
            if (dp.k != brute.k || dp.values != brute.values)
                return fail(t, "tree recursion disagrees with brute force at alpha=" +
                                   std::to_string(alpha));
        }
    }
    out << "recursion vs brute force " << corpus.size() << "/" << corpus.size()
        << " trees ok (alpha=-1,1)\n";

    // closed-form double-star recurrences against the generic route
    int ds_checked = 0;
    for (int m = 2; m <= 6; ++m) {
        for (int p = 2; p <= 4; ++p) {
            for (int q = p; q <= 4; ++q) {
                DoubleStarlikeSpec spec(m, p, q);
                Tree t = build_double_starlike(spec);
                MatchingIndexVector dp = randic_indices_tree(t, -1);
                MatchingIndexVector cf = double_starlike_indices(spec);
                if (dp.k != cf.k || dp.values != cf.values)
                    return fail(t, "double-star index recurrence disagrees on " + spec.to_string());
                if (double_starlike_reduced(spec) != reduced_polynomial(dp))
                    return fail(t, "double-star psi recurrence disagrees on " + spec.to_string());
                ++ds_checked;
            }
        }
    }
    out << "double-star recurrences  " << ds_checked << "/" << ds_checked << " specs ok\n";

    // exact spectra against the dense numeric eigensolver
    for (const auto& t : corpus) {
        SpectrumReport report = reconcile(t, opt.tol);
        if (!report.matched)
            return fail(t, "exact vs numeric spectra residual " +
                               format_double(report.max_abs_residual) + " above tol " +
                               format_double(opt.tol));
    }
    out << "exact vs jacobi spectra  " << corpus.size() << "/" << corpus.size() << " trees ok (tol "
        << format_double(opt.tol) << ")\n";

    out << "all checks passed\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact normalized-Laplacian spectra of trees via matching indices"};
    app.require_subcommand(1);

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "indices, polynomials and spectrum of one tree");
    auto* f_file = compute->add_option("--file", copt.file, "edge-list file");
    auto* f_path = compute->add_option("--path", copt.path_n, "path on N vertices");
    auto* f_star = compute->add_option("--star", copt.star_n, "star on N vertices");
    auto* f_starlike =
        compute->add_option("--starlike", copt.starlike, "branch lengths l1,l2,...")->delimiter(',');
    auto* f_ds = compute->add_option("--double-starlike", copt.double_starlike, "m,p,q")
                     ->delimiter(',');
    for (auto* a : {f_file, f_path, f_star, f_starlike, f_ds})
        for (auto* b : {f_file, f_path, f_star, f_starlike, f_ds})
            if (a != b) a->excludes(b);
    compute->add_option("--format", copt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    compute->add_option("--tol", copt.tol, "reconciliation tolerance");

    std::string table_name;
    auto* table = app.add_subcommand("table", "regenerate a built-in reference table");
    table->add_option("name", table_name, "table name (starlike8)")->required();

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run the randomized cross-check suite");
    verify->add_option("--trees", vopt.trees, "number of random trees");
    verify->add_option("--max-n", vopt.max_n, "maximum tree size");
    verify->add_option("--seed", vopt.seed, "corpus seed");
    verify->add_option("--tol", vopt.tol, "reconciliation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(copt, out, err);
        if (table->parsed()) return cmd_table(table_name, out, err);
        if (verify->parsed()) return cmd_verify(vopt, out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

}  // namespace treespectra::cli
