#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "demazure.hpp"
#include "json_io.hpp"
#include "starkeys.hpp"

// Cross-route verification suites.  Each suite pits an implementation
// against an independent route to the same answer (operator recursion vs
// tableau generating functions, star right keys vs expansion maxima, crystal
// generation vs brute-force enumeration, axioms vs definitions) over a
// bounded search space.  The CLI `verify` subcommand and the acceptance
// binary both run these.

namespace lascoux {

struct VerifyBounds {
    int max_support = 3;   // compositions range over {0..max_entry}^max_support
    int max_entry = 3;
    int max_n = 4;         // alphabet bound; shapes range inside staircase(max_n)
    unsigned seed = 20240811;
    int samples = 100;     // random polynomials for the operator-algebra suite
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long cases = 0;
    std::string detail;  // first failure, empty when passed
};

using FPrimeFn =
    std::function<std::optional<SetValuedTableau>(const SetValuedTableau&, int)>;

/// All integer vectors in {0..max_entry}^max_support, as compositions.
inline std::vector<WeakComposition> compositions_up_to(int max_support, int max_entry) {
    std::vector<WeakComposition> out;
    std::vector<int> v(max_support, 0);
    while (true) {
        out.emplace_back(v);
        int k = 0;
        while (k < max_support && ++v[k] > max_entry) v[k++] = 0;
        if (k == max_support) break;
    }
    return out;
}

/// All partitions contained in the given shape (the empty one included).
inline std::vector<Partition> sub_shapes(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row) -> void {
        out.emplace_back(parts);
        if (row > outer.rows()) return;
        int hi = std::min(outer.part(row),
                          parts.empty() ? outer.part(row) : parts.back());
        for (int p = 1; p <= hi; ++p) {
            parts.push_back(p);
            self(self, row + 1);
            parts.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// The staircase (n-1, n-2, ..., 1).
inline Partition staircase(int n) {
    std::vector<int> parts;
    for (int p = n - 1; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

/// Definition-level enumeration of the set-valued family of alpha: filter
/// all fillings of the sorted shape with entries up to support(alpha) by the
/// right-key membership test.  Entirely independent of crystal generation.
inline TableauSet brute_force_svt(const WeakComposition& alpha) {
    TableauSet out;
    for (const auto& t : generate_Bn(alpha.sorted(), alpha.support()))
        if (in_svt(t, alpha)) out.insert(t);
    return out;
}

/// Same, with the membership test sharpened to right-key equality.
inline TableauSet brute_force_atom(const WeakComposition& alpha) {
    TableauSet out;
    for (const auto& t : generate_Bn(alpha.sorted(), alpha.support()))
        if (in_atom(t, alpha)) out.insert(t);
    return out;
}

/// Crystal generation with a pluggable square-root lowering operator.
inline TableauSet generate_svt_with(const FPrimeFn& fp, const WeakComposition& alpha) {
    return detail::generate_from_highest(alpha, [&fp](const TableauSet& s, int i) {
        return detail::closure(s, i, fp);
    });
}

/// Deliberately wrong square-root operator for negative-control runs: in the
/// combined-form branch it deletes i+1 instead of i (an edit that always
/// leaves the tableau valid but derails generation).
inline std::optional<SetValuedTableau> f_prime_faulty(const SetValuedTableau& t, int i) {
    IWord w = i_word(t, i);
    FormDecomposition d = decompose_forms(w);
    if (d.has_combined()) {
        const FormClass& cls = d.classes[d.combined];
        const CellRef& at = detail::origin_of(w, cls.first_token, IToken::both, "f'!");
        return detail::edit(t, at, i + 1, 0);
    }
    if (d.phi > 0) {
        const FormClass& cls = d.classes[d.last_right];
        const CellRef& at = detail::origin_of(w, cls.last_token, IToken::right, "f'!");
        return detail::edit(t, at, 0, i + 1);
    }
    return std::nullopt;
}

namespace detail {

inline bool same(const std::optional<SetValuedTableau>& a,
                 const std::optional<SetValuedTableau>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

inline std::string describe(const WeakComposition& alpha) {
    std::ostringstream os;
    os << "alpha=(";
    for (int i = 1; i <= alpha.support(); ++i)
        os << (i > 1 ? "," : "") << alpha.at(i);
    os << ")";
    return os.str();
}

}  // namespace detail

/// Operator recursion vs crystal generation vs brute-force enumeration, for
/// both the semistandard and the set-valued family of every composition in
/// range.  `fp` substitutes the square-root operator used for generation.
inline SuiteResult check_svt_rule(const VerifyBounds& b, const FPrimeFn& fp = nullptr) {
    FPrimeFn op = fp ? fp : [](const SetValuedTableau& t, int i) { return f_prime(t, i); };
    SuiteResult res;
    res.name = "lascoux-svt-rule";
    for (const auto& alpha : compositions_up_to(b.max_support, b.max_entry)) {
        const int n = alpha.support();
        TableauSet generated = generate_svt_with(op, alpha);
        TableauSet brute = brute_force_svt(alpha);
        if (generated != brute) {
            res.passed = false;
            res.detail = detail::describe(alpha) + ": crystal generation produced " +
                         std::to_string(generated.size()) + " tableaux, enumeration " +
                         std::to_string(brute.size());
            return res;
        }
        Polynomial by_operators = lascoux(alpha, n);
        Polynomial by_tableaux = generating_function(generated, n);
        if (by_operators != by_tableaux) {
            res.passed = false;
            res.detail = detail::describe(alpha) + ": operator recursion gives " +
                         by_operators.str() + ", tableau sum gives " + by_tableaux.str();
            return res;
        }
        TableauSet ssyt = generate_ssyt(alpha);
        TableauSet ssyt_brute;
        for (const auto& t : brute)
            if (t.is_singleton()) ssyt_brute.insert(t);
        if (ssyt != ssyt_brute) {
            res.passed = false;
            res.detail = detail::describe(alpha) + ": semistandard generation mismatch";
            return res;
        }
        ++res.cases;
    }
    return res;
}

/// Atom recursion vs right-key-equality enumeration, and the decomposition
/// of each set-valued family into atoms over the key-dominated rearrangements.
inline SuiteResult check_atom_rule(const VerifyBounds& b) {
    SuiteResult res;
    res.name = "atom-decomposition";
    auto all = compositions_up_to(b.max_support, b.max_entry);
    for (const auto& alpha : all) {
        const int n = alpha.support();
        TableauSet atoms = brute_force_atom(alpha);
        Polynomial by_operators = atom(alpha, n);
        if (by_operators != generating_function(atoms, n)) {
            res.passed = false;
            res.detail = detail::describe(alpha) + ": atom recursion disagrees with " +
                         "right-key-equality enumeration";
            return res;
        }
        // the family of alpha splits into the atoms of the rearrangements
        // gamma of the same partition whose key is dominated by key(alpha)
        KeyTableau bound = key_of(alpha);
        Polynomial atom_sum(n);
        TableauSet svt = brute_force_svt(alpha);
        std::size_t covered = 0;
        std::set<WeakComposition> seen;
        for (const auto& gamma : all) {
            if (!seen.insert(gamma).second) continue;  // canonical duplicates
            if (gamma.sorted() != alpha.sorted()) continue;
            if (!key_leq(key_of(gamma), bound)) continue;
            TableauSet part = brute_force_atom(gamma);
            atom_sum += generating_function(part, n);
            for (const auto& t : part) {
                if (!svt.count(t)) {
                    res.passed = false;
                    res.detail = detail::describe(alpha) + ": atom of " +
                                 detail::describe(gamma) + " escapes the family";
                    return res;
                }
                ++covered;
            }
        }
        if (covered != svt.size() || atom_sum != lascoux(alpha, n)) {
            res.passed = false;
            res.detail = detail::describe(alpha) + ": atoms do not tile the family";
            return res;
        }
        ++res.cases;
    }
    return res;
}

/// Star right keys vs the expansion-maximum oracle, exhaustively over small
/// shapes, with cell sizes capped to keep expansions reasonable.
inline SuiteResult check_right_key(const VerifyBounds& b, int max_cell_size = 3) {
    SuiteResult res;
    res.name = "right-key";
    for (const auto& shape : sub_shapes(staircase(b.max_n))) {
        for (const auto& t : generate_Bn(shape, b.max_n, 10000000, max_cell_size)) {
            if (right_key_svt(t) != right_key_oracle(t)) {
                res.passed = false;
                res.detail = "right keys disagree on " + tableau_to_string(t);
                return res;
            }
            ++res.cases;
        }
    }
    return res;
}

/// Crystal axioms and string laws over every filling of every shape inside
/// the staircase, for every alphabet size up to the bound.
inline SuiteResult check_crystal_axioms(const VerifyBounds& b) {
    SuiteResult res;
    res.name = "crystal-axioms";
    auto fail = [&res](const SetValuedTableau& t, int i, const std::string& why) {
        res.passed = false;
        std::ostringstream os;
        os << why << " (i=" << i << ", tableau " << tableau_to_string(t) << ")";
        res.detail = os.str();
        return res;
    };
    for (const auto& shape : sub_shapes(staircase(b.max_n))) {
        for (int n = std::max(1, shape.rows()); n <= b.max_n; ++n) {
            TableauSet bn = generate_Bn(shape, n);
            for (int i = 1; i + 1 <= n; ++i) {
                for (const auto& t : bn) {
                    ++res.cases;
                    // raising and lowering invert each other
                    auto up = e(t, i);
                    if (up) {
                        if (!detail::same(f(*up, i), t))
                            return fail(t, i, "f does not undo e");
                        if (epsilon(*up, i) != epsilon(t, i) - 1 ||
                            phi(*up, i) != phi(t, i) + 1)
                            return fail(t, i, "string statistics broken by e");
                        WeakComposition w = up->weight(), v = t.weight();
                        std::vector<int> adj(v.entries());
                        adj.resize(std::max<std::size_t>(adj.size(), i + 1), 0);
                        ++adj[i - 1];
                        --adj[i];
                        if (w != WeakComposition(adj))
                            return fail(t, i, "weight not shifted by v_i - v_{i+1} under e");
                    }
                    auto down = f(t, i);
                    if (down && !detail::same(e(*down, i), t))
                        return fail(t, i, "e does not undo f");
                    // statistics match string lengths
                    int steps_up = 0;
                    for (auto cur = up; cur; cur = e(*cur, i)) ++steps_up;
                    if (steps_up != epsilon(t, i))
                        return fail(t, i, "epsilon does not count raising steps");
                    int steps_down = 0;
                    for (auto cur = down; cur; cur = f(*cur, i)) ++steps_down;
                    if (steps_down != phi(t, i))
                        return fail(t, i, "phi does not count lowering steps");
                    // phi - epsilon reads off the weight
                    WeakComposition w = t.weight();
                    if (phi(t, i) - epsilon(t, i) != w.at(i) - w.at(i + 1))
                        return fail(t, i, "phi - epsilon != wt_i - wt_{i+1}");
                    // the full operators are the squares of the square roots
                    if (!detail::same(down, f_prime(f_prime(t, i), i)))
                        return fail(t, i, "f != f' twice");
                    if (!detail::same(up, e_prime(e_prime(t, i), i)))
                        return fail(t, i, "e != e' twice");
                    // square roots invert each other
                    if (auto half = f_prime(t, i); half && !detail::same(e_prime(*half, i), t))
                        return fail(t, i, "e' does not undo f'");
                    if (auto half = e_prime(t, i); half && !detail::same(f_prime(*half, i), t))
                        return fail(t, i, "f' does not undo e'");
                }
                // classical strings: weights are symmetric under reversal + swap
                for (const auto& t : bn) {
                    if (e(t, i)) continue;  // walk each string from its source
                    auto run = i_string(t, i);
                    int k = static_cast<int>(run.size()) - 1;
                    for (int j = 0; j <= k; ++j) {
                        WeakComposition a = run[j].weight().swapped(i);
                        if (a != run[k - j].weight())
                            return fail(t, i, "string weights not swap-symmetric");
                    }
                }
                // double strings: parity, weight steps, right keys
                std::size_t covered = 0;
                for (const auto& t : bn) {
                    if (e_prime(t, i)) continue;
                    auto run = double_string(t, i);
                    covered += run.size();
                    if (run.size() % 2 != 1)
                        return fail(t, i, "double string of even length");
                    for (std::size_t j = 0; j < run.size(); ++j) {
                        bool comb = decompose_forms(i_word(run[j], i)).has_combined();
                        if (comb != (j % 2 == 1))
                            return fail(run[j], i, "combined form on the wrong parity");
                        if (j == 0) continue;
                        WeakComposition prev = run[j - 1].weight();
                        std::vector<int> adj(prev.entries());
                        adj.resize(std::max<std::size_t>(adj.size(), i + 1), 0);
                        if (j % 2 == 1) ++adj[i];       // gains an i+1
                        else --adj[i - 1];              // loses an i
                        if (run[j].weight() != WeakComposition(adj))
                            return fail(run[j], i, "weight step along double string");
                    }
                    KeyTableau source_key = right_key_svt(run[0]);
                    WeakComposition aw = source_key.weight();
                    if (aw.at(i) < aw.at(i + 1))
                        return fail(t, i, "source key weight not i-dominant");
                    if (run.size() > 1) {
                        KeyTableau rest = right_key_svt(run[1]);
                        if (rest != source_key && rest != key_of(aw.swapped(i)))
                            return fail(t, i, "interior key is neither key nor swapped key");
                        for (std::size_t j = 2; j < run.size(); ++j)
                            if (right_key_svt(run[j]) != rest)
                                return fail(run[j], i, "interior right keys differ");
                    }
                    // leaving the right key behind forces a source
                    for (std::size_t j = 0; j < run.size(); ++j) {
                        auto down = f(run[j], i);
                        if (down && right_key_svt(*down) != right_key_svt(run[j]) &&
                            e_prime(run[j], i))
                            return fail(run[j], i, "key change away from a source");
                    }
                }
                if (covered != bn.size())
                    return fail(*bn.begin(), i, "double strings do not tile the crystal");
            }
        }
    }
    // members of a family meet each double string in all of it, nothing, or
    // just its source
    for (const auto& alpha : compositions_up_to(b.max_support, b.max_entry)) {
        TableauSet family = brute_force_svt(alpha);
        const int n = alpha.support();
        TableauSet bn = generate_Bn(alpha.sorted(), n);
        for (int i = 1; i + 1 <= n; ++i) {
            for (const auto& t : bn) {
                if (e_prime(t, i)) continue;
                auto run = double_string(t, i);
                std::size_t inside = 0;
                for (const auto& m : run) inside += family.count(m);
                bool ok = inside == 0 || inside == run.size() ||
                          (inside == 1 && family.count(run[0]));
                if (!ok) return fail(t, i, "family meets a double string irregularly");
                ++res.cases;
            }
        }
    }
    return res;
}

/// Braid relations, commutation, idempotence, nilpotence and fixed points of
/// the divided-difference operators on random sparse polynomials.
inline SuiteResult check_operator_algebra(const VerifyBounds& b) {
    SuiteResult res;
    res.name = "operator-algebra";
    std::mt19937 rng(b.seed);
    const int n = 4;
    std::uniform_int_distribution<int> nterms(1, 5), expo(0, 3), bdeg(0, 2),
        mag(1, 3), sign(0, 1);
    auto random_poly = [&] {
        Polynomial p(n);
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            std::vector<int> e(n);
            do {
                for (int& x : e) x = expo(rng);
            } while (std::accumulate(e.begin(), e.end(), 0) > 5);
            int c = mag(rng) * (sign(rng) ? 1 : -1);
            p.add_term(bdeg(rng), std::move(e), c);
        }
        return p;
    };
    auto fail = [&res](const Polynomial& g, const std::string& why) {
        res.passed = false;
        res.detail = why + " on " + g.str();
        return res;
    };
    for (int s = 0; s < b.samples; ++s) {
        Polynomial g = random_poly();
        for (int i = 1; i + 1 < n; ++i) {
            auto braid = [&](auto&& op) {
                return op(op(op(g, i), i + 1), i) == op(op(op(g, i + 1), i), i + 1);
            };
            auto pb = [](const Polynomial& h, int j) { return pi_beta(h, j); };
            auto pp = [](const Polynomial& h, int j) { return pi(h, j); };
            auto dd = [](const Polynomial& h, int j) { return demazure(h, j); };
            if (!braid(pb)) return fail(g, "deformed pi braid fails");
            if (!braid(pp)) return fail(g, "pi braid fails");
            if (!braid(dd)) return fail(g, "divided difference braid fails");
        }
        if (pi_beta(pi_beta(g, 1), 3) != pi_beta(pi_beta(g, 3), 1))
            return fail(g, "distant operators do not commute");
        for (int i = 1; i < n; ++i) {
            Polynomial once = pi_beta(g, i);
            if (pi_beta(once, i) != once) return fail(g, "deformed pi not idempotent");
            if (!demazure(demazure(g, i), i).is_zero())
                return fail(g, "divided difference not nilpotent");
            Polynomial sym = g + swap_vars(g, i);
            if (pi_beta(sym, i) != sym) return fail(g, "symmetric input moved");
            if (swap_vars(once, i) != once) return fail(g, "image not symmetric");
        }
        ++res.cases;
    }
    return res;
}

inline std::vector<SuiteResult> run_verification(const VerifyBounds& b,
                                                 bool inject_fault = false) {
    FPrimeFn fp = nullptr;
    if (inject_fault)
        fp = [](const SetValuedTableau& t, int i) { return f_prime_faulty(t, i); };
    return {
        check_svt_rule(b, fp),
        check_atom_rule(b),
        check_right_key(b),
        check_crystal_axioms(b),
        check_operator_algebra(b),
    };
}

}  // namespace lascoux
