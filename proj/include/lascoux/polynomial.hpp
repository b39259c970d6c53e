#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

// Sparse exact polynomials in x_1..x_n over Z[b], where b is the formal
// marker weighting the excess statistic.  Coefficients are arbitrary
// precision.  Terms live in a map under the canonical order (b-degree
// ascending, then total x-degree ascending, then exponent vectors
// lexicographically descending), so iteration and printing are canonical.

namespace lascoux {

using Coeff = boost::multiprecision::cpp_int;

struct Monomial {
    int beta = 0;            // exponent of the marker b
    std::vector<int> exps;   // exponents of x_1..x_n

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool operator==(const Monomial&) const = default;
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.beta != b.beta) return a.beta < b.beta;
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps > b.exps;  // within a degree, x_1-heavy terms first
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw error("variable count must be non-negative");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial one(int nvars) {
        return monomial(nvars, 0, std::vector<int>(nvars, 0));
    }

    static Polynomial variable(int nvars, int i) {
        if (i < 1 || i > nvars) throw index_out_of_range("variable index outside 1..n");
        std::vector<int> e(nvars, 0);
        e[i - 1] = 1;
        return monomial(nvars, 0, std::move(e));
    }

    static Polynomial monomial(int nvars, int beta, std::vector<int> exps,
                               Coeff c = 1) {
        Polynomial p(nvars);
        p.add_term(beta, std::move(exps), c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Polynomial& add_term(int beta, std::vector<int> exps, const Coeff& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw error("exponent vector length must equal the variable count");
        if (beta < 0) throw error("marker exponent must be non-negative");
        for (int e : exps)
            if (e < 0) throw error("exponents must be non-negative");
        if (c == 0) return *this;
        Monomial m{beta, std::move(exps)};
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m.beta, m.exps, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m.beta, m.exps, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        Polynomial out(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<int> e = ma.exps;
                for (int i = 0; i < a.nvars_; ++i) e[i] += mb.exps[i];
                out.add_term(ma.beta + mb.beta, std::move(e), ca * cb);
            }
        return out;
    }

    friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
        Polynomial out(p.nvars_);
        if (c == 0) return out;
        for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
        return out;
    }

    /// Multiply by x_i.
    Polynomial times_var(int i) const {
        if (i < 1 || i > nvars_) throw index_out_of_range("variable index outside 1..n");
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            std::vector<int> e = m.exps;
            ++e[i - 1];
            out.terms_.emplace(Monomial{m.beta, std::move(e)}, c);
        }
        return out;
    }

    /// Multiply by the marker b.
    Polynomial times_beta() const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(Monomial{m.beta + 1, m.exps}, c);
        return out;
    }

    /// Exchange the variables x_i and x_{i+1}.
    Polynomial swapped(int i) const {
        if (i < 1 || i >= nvars_)
            throw index_out_of_range("swap needs 1 <= i < n");
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            std::vector<int> e = m.exps;
            std::swap(e[i - 1], e[i]);
            out.add_term(m.beta, std::move(e), c);
        }
        return out;
    }

    /// Specialize the marker b to zero.
    Polynomial at_beta_zero() const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.beta == 0) out.terms_.emplace(m, c);
        return out;
    }

    int max_beta_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.beta);
        return d;
    }

    /// Canonical text form, e.g. "x1^2*x2 + 2*b^1*x1^2*x2*x3".  The marker
    /// always carries its exponent; variables drop an exponent of one.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Coeff mag = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::vector<std::string> factors;
            if (m.beta > 0) factors.push_back("b^" + std::to_string(m.beta));
            for (int i = 0; i < nvars_; ++i) {
                if (m.exps[i] == 0) continue;
                std::string f = "x" + std::to_string(i + 1);
                if (m.exps[i] > 1) f += "^" + std::to_string(m.exps[i]);
                factors.push_back(std::move(f));
            }
            if (mag != 1 || factors.empty()) os << mag << (factors.empty() ? "" : "*");
            for (std::size_t k = 0; k < factors.size(); ++k)
                os << (k ? "*" : "") << factors[k];
        }
        return os.str();
    }

    /// LaTeX form, e.g. "x_1 + x_2 + \beta x_1 x_2".
    std::string latex() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Coeff mag = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            auto script = [](char mark, int e) {
                std::string s = std::to_string(e);
                return s.size() > 1 ? mark + ("{" + s + "}") : mark + s;
            };
            std::vector<std::string> factors;
            if (m.beta == 1) factors.push_back("\\beta");
            else if (m.beta > 1) factors.push_back("\\beta" + script('^', m.beta));
            for (int i = 0; i < nvars_; ++i) {
                if (m.exps[i] == 0) continue;
                std::string f = "x" + script('_', i + 1);
                if (m.exps[i] > 1) f += script('^', m.exps[i]);
                factors.push_back(std::move(f));
            }
            if (mag != 1 || factors.empty()) os << mag << (factors.empty() ? "" : " ");
            for (std::size_t k = 0; k < factors.size(); ++k)
                os << (k ? " " : "") << factors[k];
        }
        return os.str();
    }

    bool operator==(const Polynomial&) const = default;

private:
    int nvars_;
    TermMap terms_;

    void check_same_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw error("polynomials live in different variable counts");
    }
};

/// Exchange x_i and x_{i+1} (the simple transposition s_i acting on f).
inline Polynomial swap_vars(const Polynomial& f, int i) { return f.swapped(i); }

}  // namespace lascoux
