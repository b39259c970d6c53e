#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <lascoux/lascoux.hpp>

// lask: compute Lascoux polynomials, key polynomials and atoms, enumerate
// set-valued tableaux, query right keys, export crystal graphs and run the
// cross-route verification suite.
//
// Exit codes: 0 success, 1 usage/validation error, 2 cross-check mismatch.

namespace {

using namespace lascoux;

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw parse_error("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw parse_error("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("expected a comma-separated integer list");
    return out;
}

WeakComposition parse_composition(const std::string& s) {
    return WeakComposition(parse_ints(s));
}

Partition parse_partition(const std::string& s) {
    return Partition(parse_ints(s));
}

void emit(const std::string& text, const std::string& out_path) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw error("cannot open output file: " + out_path);
    f << body;
}

std::string render(const Polynomial& p, const std::string& format) {
    if (format == "latex") return p.latex();
    if (format == "json") return polynomial_to_json(p).dump();
    return p.str();
}

/// One-line display form: rows joined by " / ", multi-value cells braced.
std::string rows_string(const SetValuedTableau& t) {
    std::ostringstream os;
    for (int r = 1; r <= t.shape().rows(); ++r) {
        if (r > 1) os << " / ";
        os << "[";
        for (int c = 1; c <= t.shape().part(r); ++c) {
            if (c > 1) os << ",";
            const IntegerSet& s = t.cell(r, c);
            if (s.size() == 1) {
                os << s.front();
            } else {
                os << "{";
                for (std::size_t k = 0; k < s.size(); ++k)
                    os << (k ? "," : "") << s[k];
                os << "}";
            }
        }
        os << "]";
    }
    return os.str();
}

std::string render(const SetValuedTableau& t, const std::string& format) {
    if (format == "plain") return rows_string(t);
    return tableau_to_string(t);
}

/// Listing order: excess ascending, then weight graded-lex with the larger
/// vector first (so the polynomial's leading monomials come first), then the
/// serialized form as a final tiebreak.  Mirrors the term order used when
/// printing polynomials, so the semistandard stratum leads.
bool display_before(const SetValuedTableau& a, const SetValuedTableau& b) {
    if (a.excess() != b.excess()) return a.excess() < b.excess();
    WeakComposition wa = a.weight(), wb = b.weight();
    if (wa.sum() != wb.sum()) return wa.sum() < wb.sum();
    if (wa != wb) return wb.entries() < wa.entries();
    return tableau_to_string(a) < tableau_to_string(b);
}

int default_vars(const WeakComposition& alpha, int requested) {
    if (requested == 0) return std::max(1, alpha.support());
    if (requested < alpha.support())
        throw too_few_variables("--n is smaller than the support of alpha");
    return requested;
}

struct PolyOpts {
    std::string alpha;
    int n = 0;
    std::string method = "operator";
    std::string format = "plain";
    std::string out;
};

void add_poly_flags(CLI::App* cmd, PolyOpts& o, const std::string& what) {
    cmd->add_option("--alpha", o.alpha, "Weak composition, comma separated")->required();
    cmd->add_option("--n", o.n, "Number of variables (default: support of alpha)");
    cmd->add_option("--method", o.method,
                    "Computation route: " + what + " ('both' cross-checks)")
        ->check(CLI::IsMember({"operator", "svt", "both"}));
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    cmd->add_option("--out", o.out, "Write output to a file instead of stdout");
}

int run_two_route(const PolyOpts& o, const std::string& what,
                  const std::function<Polynomial(const WeakComposition&, int)>& by_operators,
                  const std::function<Polynomial(const WeakComposition&, int)>& by_tableaux) {
    WeakComposition alpha = parse_composition(o.alpha);
    int n = default_vars(alpha, o.n);
    Polynomial result(n);
    if (o.method == "operator") {
        result = by_operators(alpha, n);
    } else if (o.method == "svt") {
        result = by_tableaux(alpha, n);
    } else {
        result = by_operators(alpha, n);
        Polynomial other = by_tableaux(alpha, n);
        if (result != other)
            throw mismatch_error(what + ": operator recursion gives " + result.str() +
                                 " but the tableau sum gives " + other.str());
    }
    emit(render(result, o.format), o.out);
    return 0;
}

int run_lascoux(const PolyOpts& o) {
    return run_two_route(
        o, "lascoux", [](const WeakComposition& a, int n) { return lascoux::lascoux(a, n); },
        [](const WeakComposition& a, int n) {
            return generating_function(generate_svt(a), n);
        });
}

int run_key(const PolyOpts& o) {
    return run_two_route(
        o, "key", [](const WeakComposition& a, int n) { return key_poly(a, n); },
        [](const WeakComposition& a, int n) {
            return generating_function(generate_ssyt(a), n);
        });
}

int run_atom(const PolyOpts& o) {
    return run_two_route(
        o, "atom", [](const WeakComposition& a, int n) { return atom(a, n); },
        [](const WeakComposition& a, int n) {
            TableauSet kept;
            for (const auto& t : generate_svt(a))
                if (in_atom(t, a)) kept.insert(t);
            return generating_function(kept, n);
        });
}

struct GrothOpts {
    std::string lambda;
    int n = 0;
    std::string method = "svt";
    std::string format = "plain";
    std::string out;
};

int run_grothendieck(const GrothOpts& o) {
    Partition shape = parse_partition(o.lambda);
    if (o.n < shape.rows())
        throw too_few_variables("--n is smaller than the number of rows");
    // the stable Grothendieck polynomial of a partition equals the Lascoux
    // polynomial of its weakly increasing rearrangement in the same variables
    std::vector<int> rev(o.n, 0);
    for (int r = 1; r <= shape.rows(); ++r) rev[o.n - r] = shape.part(r);
    WeakComposition alpha(rev);
    Polynomial result(o.n);
    if (o.method == "operator") {
        result = lascoux::lascoux(alpha, o.n);
    } else if (o.method == "svt") {
        result = grothendieck(shape, o.n);
    } else {
        result = grothendieck(shape, o.n);
        Polynomial other = lascoux::lascoux(alpha, o.n);
        if (result != other)
            throw mismatch_error("grothendieck: tableau sum gives " + result.str() +
                                 " but the operator route gives " + other.str());
    }
    emit(render(result, o.format), o.out);
    return 0;
}

struct EnumOpts {
    std::string alpha;
    bool atoms = false;
    bool ssyt = false;
    bool count = false;
    long long limit = 100000;
    std::string format = "json";
    std::string out;
};

int run_enumerate(const EnumOpts& o) {
    WeakComposition alpha = parse_composition(o.alpha);
    TableauSet set;
    if (o.ssyt) {
        set = generate_ssyt(alpha);
    } else {
        set = generate_svt(alpha);
        if (o.atoms) {
            TableauSet kept;
            for (const auto& t : set)
                if (in_atom(t, alpha)) kept.insert(t);
            set = std::move(kept);
        }
    }
    if (static_cast<long long>(set.size()) > o.limit)
        throw size_guard_exceeded("enumeration produced " + std::to_string(set.size()) +
                                  " tableaux, above --limit");
    if (o.count) {
        emit(std::to_string(set.size()), o.out);
        return 0;
    }
    std::vector<SetValuedTableau> listed(set.begin(), set.end());
    std::sort(listed.begin(), listed.end(), display_before);
    std::ostringstream os;
    for (const auto& t : listed) os << render(t, o.format) << '\n';
    emit(os.str(), o.out);
    return 0;
}

struct RightKeyOpts {
    std::string file = "-";
    bool oracle = false;
    long long limit = 100000;
    std::string format = "json";
    std::string out;
};

int run_rightkey(const RightKeyOpts& o) {
    std::string text;
    if (o.file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(o.file);
        if (!f) throw error("cannot open input file: " + o.file);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    SetValuedTableau t = tableau_from_string(text);
    KeyTableau key = right_key_svt(t);
    if (o.oracle) {
        KeyTableau check = right_key_oracle(t, o.limit);
        if (check != key)
            throw mismatch_error("right key " + rows_string(key.tableau()) +
                                 " disagrees with the expansion oracle " +
                                 rows_string(check.tableau()));
    }
    emit(render(key.tableau(), o.format), o.out);
    return 0;
}

struct CrystalOpts {
    std::string alpha;
    std::string lambda;
    int n = 0;
    std::vector<int> is;
    long long limit = 10000;
    std::string out;
};

int run_crystal(const CrystalOpts& o) {
    TableauSet nodes;
    int n = 0;
    if (!o.alpha.empty()) {
        if (!o.lambda.empty() || o.n)
            throw parse_error("--alpha excludes --lambda/--n");
        WeakComposition alpha = parse_composition(o.alpha);
        n = std::max(1, alpha.support());
        nodes = generate_svt(alpha);
        if (static_cast<long long>(nodes.size()) > o.limit)
            throw size_guard_exceeded("crystal has " + std::to_string(nodes.size()) +
                                      " nodes, above --limit");
    } else if (!o.lambda.empty()) {
        if (o.n <= 0) throw parse_error("--lambda requires --n");
        n = o.n;
        nodes = generate_Bn(parse_partition(o.lambda), n, o.limit);
    } else {
        throw parse_error("give either --alpha or --lambda with --n");
    }
    std::vector<int> is = o.is;
    if (is.empty())
        for (int i = 1; i + 1 <= n; ++i) is.push_back(i);
    for (int i : is)
        if (i < 1) throw parse_error("--i must be positive");

    std::map<SetValuedTableau, int> id;
    for (const auto& t : nodes) id.emplace(t, static_cast<int>(id.size()));
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n";
    for (const auto& [t, k] : id)
        os << "  n" << k << " [label=\"" << rows_string(t) << "\"];\n";
    for (const auto& [t, k] : id) {
        for (int i : is) {
            if (auto down = f(t, i); down) {
                auto it = id.find(*down);
                if (it != id.end())
                    os << "  n" << k << " -> n" << it->second << " [label=\"" << i
                       << "\" style=solid];\n";
            }
            if (auto half = f_prime(t, i); half) {
                auto it = id.find(*half);
                if (it != id.end())
                    os << "  n" << k << " -> n" << it->second << " [label=\"" << i
                       << "\" style=dashed];\n";
            }
        }
    }
    os << "}\n";
    emit(os.str(), o.out);
    return 0;
}

struct VerifyOpts {
    VerifyBounds bounds;
    bool inject_fault = false;
    std::string out;
};

int run_verify(const VerifyOpts& o) {
    auto results = run_verification(o.bounds, o.inject_fault);
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : results) {
        if (r.passed) {
            os << "[PASS] " << r.name << " (" << r.cases << " cases)\n";
        } else {
            os << "[FAIL] " << r.name << ": " << r.detail << "\n";
            ok = false;
        }
    }
    emit(os.str(), o.out);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lascoux polynomials, keys and atoms via Demazure operators "
                 "and set-valued tableau crystals"};
    app.require_subcommand(1);

    PolyOpts lascoux_opts, key_opts, atom_opts;
    auto* cmd_lascoux = app.add_subcommand(
        "lascoux", "Lascoux polynomial of a weak composition");
    add_poly_flags(cmd_lascoux, lascoux_opts, "operator recursion or tableau sum");
    auto* cmd_key = app.add_subcommand("key", "Key polynomial of a weak composition");
    add_poly_flags(cmd_key, key_opts, "operator recursion or semistandard sum");
    auto* cmd_atom = app.add_subcommand("atom", "Lascoux atom of a weak composition");
    add_poly_flags(cmd_atom, atom_opts, "operator recursion or right-key filter");

    GrothOpts groth_opts;
    auto* cmd_groth = app.add_subcommand(
        "grothendieck", "Stable Grothendieck polynomial of a partition");
    cmd_groth->add_option("--lambda", groth_opts.lambda, "Partition, comma separated")
        ->required();
    cmd_groth->add_option("--n", groth_opts.n, "Number of variables")->required();
    cmd_groth->add_option("--method", groth_opts.method, "Computation route")
        ->check(CLI::IsMember({"operator", "svt", "both"}));
    cmd_groth->add_option("--format", groth_opts.format, "Output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    cmd_groth->add_option("--out", groth_opts.out, "Write output to a file");

    EnumOpts enum_opts;
    auto* cmd_svt = app.add_subcommand(
        "svt", "Enumerate the set-valued tableaux attached to a composition");
    cmd_svt->add_option("--alpha", enum_opts.alpha, "Weak composition")->required();
    auto* atoms_flag = cmd_svt->add_flag("--atoms", enum_opts.atoms,
                                         "Only tableaux whose right key equals the key");
    cmd_svt->add_flag("--ssyt", enum_opts.ssyt, "Semistandard tableaux only")
        ->excludes(atoms_flag);
    cmd_svt->add_flag("--count", enum_opts.count, "Print the cardinality only");
    cmd_svt->add_option("--limit", enum_opts.limit, "Refuse to list more than this many");
    cmd_svt->add_option("--format", enum_opts.format, "Line format")
        ->check(CLI::IsMember({"plain", "json"}));
    cmd_svt->add_option("--out", enum_opts.out, "Write output to a file");

    RightKeyOpts rk_opts;
    auto* cmd_rightkey = app.add_subcommand(
        "rightkey", "Right key of a tableau given as JSON (file or '-')");
    cmd_rightkey->add_option("file", rk_opts.file, "Input file, '-' for stdin");
    cmd_rightkey->add_flag("--oracle", rk_opts.oracle,
                           "Cross-check against the expansion maximum");
    cmd_rightkey->add_option("--limit", rk_opts.limit,
                             "Expansion budget for the oracle");
    cmd_rightkey->add_option("--format", rk_opts.format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));
    cmd_rightkey->add_option("--out", rk_opts.out, "Write output to a file");

    CrystalOpts crystal_opts;
    auto* cmd_crystal = app.add_subcommand(
        "crystal", "Export a crystal graph (solid f edges, dashed f' edges) as DOT");
    cmd_crystal->add_option("--alpha", crystal_opts.alpha,
                            "Weak composition: nodes are its set-valued tableaux");
    cmd_crystal->add_option("--lambda", crystal_opts.lambda,
                            "Partition: nodes are all fillings with entries up to --n");
    cmd_crystal->add_option("--n", crystal_opts.n, "Alphabet bound for --lambda");
    cmd_crystal->add_option("--i", crystal_opts.is,
                            "Edge colours to draw (repeatable; default all)");
    cmd_crystal->add_option("--limit", crystal_opts.limit, "Node budget");
    cmd_crystal->add_option("--out", crystal_opts.out, "Write output to a file");

    VerifyOpts verify_opts;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run the cross-route verification suites within bounds");
    cmd_verify->add_option("--max-support", verify_opts.bounds.max_support,
                           "Composition support bound");
    cmd_verify->add_option("--max-entry", verify_opts.bounds.max_entry,
                           "Composition entry bound");
    cmd_verify->add_option("--max-n", verify_opts.bounds.max_n, "Alphabet bound");
    cmd_verify->add_option("--seed", verify_opts.bounds.seed,
                           "Seed for the operator-algebra samples");
    cmd_verify->add_option("--samples", verify_opts.bounds.samples,
                           "Random polynomials to draw");
    cmd_verify->add_flag("--inject-fault", verify_opts.inject_fault)->group("");
    cmd_verify->add_option("--out", verify_opts.out, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_lascoux)) return run_lascoux(lascoux_opts);
        if (app.got_subcommand(cmd_key)) return run_key(key_opts);
        if (app.got_subcommand(cmd_atom)) return run_atom(atom_opts);
        if (app.got_subcommand(cmd_groth)) return run_grothendieck(groth_opts);
        if (app.got_subcommand(cmd_svt)) return run_enumerate(enum_opts);
        if (app.got_subcommand(cmd_rightkey)) return run_rightkey(rk_opts);
        if (app.got_subcommand(cmd_crystal)) return run_crystal(crystal_opts);
        if (app.got_subcommand(cmd_verify)) return run_verify(verify_opts);
    } catch (const mismatch_error& e) {
        std::cerr << "mismatch: " << e.what() << '\n';
        return 2;
    } catch (const lascoux::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
