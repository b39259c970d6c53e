#pragma once

#include "crystal.hpp"
#include "polynomial.hpp"
#include "tableaux.hpp"

// Demazure-type divided difference operators and the polynomial families
// they generate.  The bare operator is
//
//   d_i(g) = (g - s_i g) / (x_i - x_{i+1}),
//
// computed exactly, term by term: the antisymmetric pair x^a y^b - x^b y^a
// (a > b) telescopes into (x - y) * sum_{t=0}^{a-b-1} x^{b+t} y^{a-1-t},
// so no polynomial division ever happens and the quotient is exact by
// construction.  From it:
//
//   pi_i(g)       = d_i(x_i g)                      (key recursion)
//   d_i^b(g)      = d_i(g + b x_{i+1} g)
//   pi_i^b(g)     = d_i^b(x_i g)                    (Lascoux recursion)
//   pibar_i^b(g)  = pi_i^b(g) - g                   (atom recursion)

namespace lascoux {

inline void check_operator_index(const Polynomial& g, int i) {
    if (i < 1 || i >= g.nvars())
        throw index_out_of_range("operator index needs 1 <= i < n");
}

/// Divided difference d_i(g) = (g - s_i g)/(x_i - x_{i+1}), exact.
inline Polynomial demazure(const Polynomial& g, int i) {
    check_operator_index(g, i);
    Polynomial out(g.nvars());
    for (const auto& [m, c] : g.terms()) {
        const int a = m.exps[i - 1], b = m.exps[i];
        if (a == b) continue;  // symmetric in x_i, x_{i+1}: contributes nothing
        std::vector<int> e = m.exps;
        if (a > b) {
            for (int t = 0; t < a - b; ++t) {
                e[i - 1] = b + t;
                e[i] = a - 1 - t;
                out.add_term(m.beta, e, c);
            }
        } else {
            for (int t = 0; t < b - a; ++t) {
                e[i - 1] = a + t;
                e[i] = b - 1 - t;
                out.add_term(m.beta, e, -c);
            }
        }
    }
    return out;
}

/// Isobaric divided difference pi_i(g) = d_i(x_i g); fixes anything
/// symmetric in x_i, x_{i+1} and is idempotent.
inline Polynomial pi(const Polynomial& g, int i) {
    check_operator_index(g, i);
    return demazure(g.times_var(i), i);
}

/// Marker deformation of d_i.
inline Polynomial demazure_beta(const Polynomial& g, int i) {
    check_operator_index(g, i);
    return demazure(g + g.times_var(i + 1).times_beta(), i);
}

/// Marker deformation of pi_i; same fixed points, same idempotence, and the
/// braid relations survive the deformation.
inline Polynomial pi_beta(const Polynomial& g, int i) {
    check_operator_index(g, i);
    return demazure_beta(g.times_var(i), i);
}

/// pibar_i^b = pi_i^b - id, the atom recursion operator.
inline Polynomial pibar_beta(const Polynomial& g, int i) {
    return pi_beta(g, i) - g;
}

/// The monomial x^alpha (optionally carrying a marker power) in n variables.
inline Polynomial monomial_of(const WeakComposition& alpha, int nvars, int beta = 0) {
    if (alpha.support() > nvars)
        throw too_few_variables("composition needs more variables than provided");
    std::vector<int> e(nvars, 0);
    for (int i = 1; i <= alpha.support(); ++i) e[i - 1] = alpha.at(i);
    return Polynomial::monomial(nvars, beta, std::move(e));
}

namespace detail {

template <typename Step>
Polynomial run_recursion(const WeakComposition& alpha, int n, Step&& step) {
    if (n < alpha.support())
        throw too_few_variables("need at least support(alpha) variables");
    auto [lambda, word] = sort_to_partition(alpha);
    Polynomial g = monomial_of(lambda.as_composition(), n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = step(g, *it);
    return g;
}

}  // namespace detail

/// Lascoux polynomial of alpha in x_1..x_n: x^alpha for partitions, built up
/// by pi^b along a minimal sorting word otherwise.
inline Polynomial lascoux(const WeakComposition& alpha, int n) {
    return detail::run_recursion(alpha, n, [](const Polynomial& g, int i) {
        return pi_beta(g, i);
    });
}

/// Key polynomial: the marker-free part of the Lascoux polynomial.
inline Polynomial key_poly(const WeakComposition& alpha, int n) {
    return lascoux(alpha, n).at_beta_zero();
}

/// Lascoux atom: same recursion with pibar^b.
inline Polynomial atom(const WeakComposition& alpha, int n) {
    return detail::run_recursion(alpha, n, [](const Polynomial& g, int i) {
        return pibar_beta(g, i);
    });
}

/// Sum of x^{weight} * b^{excess} over a collection of tableaux.
template <typename Range>
Polynomial generating_function(const Range& tableaux, int n) {
    Polynomial out(n);
    for (const SetValuedTableau& t : tableaux) {
        if (t.max_entry() > n)
            throw entry_exceeds_variables("tableau entry exceeds the variable count");
        WeakComposition w = t.weight();
        std::vector<int> e(n, 0);
        for (int i = 1; i <= w.support(); ++i) e[i - 1] = w.at(i);
        out.add_term(t.excess(), std::move(e), 1);
    }
    return out;
}

/// Stable Grothendieck polynomial of a partition shape in x_1..x_n: the
/// generating function of all set-valued tableaux of that shape with entries
/// at most n.  Symmetric, and equal to the Lascoux polynomial of the weakly
/// increasing rearrangement of the shape.
inline Polynomial grothendieck(const Partition& shape, int n,
                               long long max_results = 10000000) {
    return generating_function(generate_Bn(shape, n, max_results), n);
}

}  // namespace lascoux
