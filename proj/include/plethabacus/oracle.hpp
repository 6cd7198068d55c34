#pragma once

// Brute-force polynomial arithmetic used as ground truth for the Schur
// expansions in symfunc.hpp. Nothing here looks at abaci or border strips.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plethabacus/error.hpp"
#include "plethabacus/partition.hpp"
#include "plethabacus/schur_expansion.hpp"

namespace plethabacus::oracle {

using exponent = std::vector<int>;

inline int degree_of(const exponent& e) {
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

/// A polynomial in n variables with integer coefficients, every monomial stored.
class polynomial {
public:
    explicit polynomial(int variables) : n_(variables) {
        if (n_ < 1)
            throw error("need at least one variable");
    }

    int variables() const noexcept { return n_; }
    const std::map<exponent, integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const exponent& e, const integer& c) {
        if (static_cast<int>(e.size()) != n_)
            throw error("exponent vector of length " + std::to_string(e.size()) + " in " + std::to_string(n_) +
                        " variables");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted && (it->second += c) == 0)
            terms_.erase(it);
    }

    integer coefficient(const exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? integer(0) : it->second;
    }

    polynomial& operator+=(const polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    polynomial& operator-=(const polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        a.check_same(b);
        polynomial out(a.n_);
        exponent e(static_cast<std::size_t>(a.n_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend polynomial operator*(const integer& k, const polynomial& a) {
        polynomial out(a.n_);
        for (const auto& [e, c] : a.terms_)
            out.add_term(e, k * c);
        return out;
    }

    /// Swaps variables i and j (0-based).
    polynomial transposed(int i, int j) const {
        polynomial out(n_);
        for (const auto& [original, c] : terms_) {
            exponent e = original;
            std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
            out.add_term(e, c);
        }
        return out;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < n_; ++i)
            if (transposed(i, i + 1) != *this)
                return false;
        return true;
    }

    bool operator==(const polynomial&) const = default;

private:
    void check_same(const polynomial& o) const {
        if (o.n_ != n_)
            throw error("variable counts differ");
    }

    int n_;
    std::map<exponent, integer> terms_;
};

namespace detail {

// Weakly decreasing exponent vectors of length n summing to d.
inline std::vector<exponent> dominant_exponents(int d, int n) {
    std::vector<exponent> out;
    for (const auto& lambda : partitions_of(d)) {
        if (static_cast<int>(lambda.length()) > n)
            continue;
        exponent e(lambda.parts());
        e.resize(static_cast<std::size_t>(n), 0);
        out.push_back(std::move(e));
    }
    return out;
}

inline exponent sorted_down(exponent e) {
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

}  // namespace detail

/// A symmetric polynomial in n variables. Only the coefficients of dominant
/// (weakly decreasing) exponent vectors are stored; every other monomial has
/// the coefficient of its sorted rearrangement.
class symmetric_polynomial {
public:
    explicit symmetric_polynomial(int variables) : n_(variables) {
        if (n_ < 1)
            throw error("need at least one variable");
    }

    static symmetric_polynomial constant(int variables, const integer& c) {
        symmetric_polynomial out(variables);
        out.add_term(exponent(static_cast<std::size_t>(variables), 0), c);
        return out;
    }

    int variables() const noexcept { return n_; }
    const std::map<exponent, integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c to the coefficient of x^e and, implicitly, of every rearrangement of e.
    void add_term(const exponent& e, const integer& c) {
        if (static_cast<int>(e.size()) != n_)
            throw error("exponent vector of length " + std::to_string(e.size()) + " in " + std::to_string(n_) +
                        " variables");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(detail::sorted_down(e), c);
        if (!inserted && (it->second += c) == 0)
            terms_.erase(it);
    }

    integer coefficient(const exponent& e) const {
        auto it = terms_.find(detail::sorted_down(e));
        return it == terms_.end() ? integer(0) : it->second;
    }

    // Lexicographically largest exponent with a nonzero coefficient.
    std::optional<exponent> leading_exponent() const {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first;
    }

    // Degree if all terms share one, nullopt otherwise (or for zero).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            const int de = degree_of(e);
            if (d && *d != de)
                return std::nullopt;
            d = de;
        }
        return d;
    }

    symmetric_polynomial& operator+=(const symmetric_polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    symmetric_polynomial& operator-=(const symmetric_polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend symmetric_polynomial operator+(symmetric_polynomial a, const symmetric_polynomial& b) { return a += b; }
    friend symmetric_polynomial operator-(symmetric_polynomial a, const symmetric_polynomial& b) { return a -= b; }

    friend symmetric_polynomial operator*(const integer& k, const symmetric_polynomial& a) {
        symmetric_polynomial out(a.n_);
        for (const auto& [e, c] : a.terms_)
            out.add_term(e, k * c);
        return out;
    }

    /// (fg)_mu = sum over all a + b = mu of f_a g_b, for each dominant mu.
    friend symmetric_polynomial operator*(const symmetric_polynomial& f, const symmetric_polynomial& g) {
        f.check_same(g);
        symmetric_polynomial out(f.n_);
        const auto fd = f.by_degree();
        const auto gd = g.by_degree();
        for (const auto& [df, fterms] : fd) {
            for (const auto& [dg, gterms] : gd) {
                for (const auto& mu : detail::dominant_exponents(df + dg, f.n_)) {
                    integer total = 0;
                    exponent a(mu.size(), 0);
                    split(mu, 0, df, a, fterms, gterms, total);
                    out.add_term(mu, total);
                }
            }
        }
        return out;
    }

    bool operator==(const symmetric_polynomial&) const = default;

private:
    using term_map = std::map<exponent, integer>;

    void check_same(const symmetric_polynomial& o) const {
        if (o.n_ != n_)
            throw error("variable counts differ");
    }

    std::map<int, term_map> by_degree() const {
        std::map<int, term_map> out;
        for (const auto& [e, c] : terms_)
            out[degree_of(e)].emplace(e, c);
        return out;
    }

    // Enumerates a <= mu componentwise with |a| = df, accumulating f_a g_{mu-a}.
    static void split(const exponent& mu, std::size_t i, int remaining, exponent& a, const term_map& f,
                      const term_map& g, integer& total) {
        if (i == mu.size()) {
            if (remaining != 0)
                return;
            exponent b(mu.size());
            for (std::size_t k = 0; k < mu.size(); ++k)
                b[k] = mu[k] - a[k];
            auto fi = f.find(detail::sorted_down(a));
            if (fi == f.end())
                return;
            auto gi = g.find(detail::sorted_down(b));
            if (gi == g.end())
                return;
            total += fi->second * gi->second;
            return;
        }
        int capacity = 0;
        for (std::size_t k = i + 1; k < mu.size(); ++k)
            capacity += mu[k];
        for (int x = std::max(0, remaining - capacity); x <= std::min(mu[i], remaining); ++x) {
            a[i] = x;
            split(mu, i + 1, remaining - x, a, f, g, total);
        }
        a[i] = 0;
    }

    int n_;
    term_map terms_;
};

/// Full form: every rearrangement of every stored exponent.
inline polynomial expand(const symmetric_polynomial& f) {
    polynomial out(f.variables());
    for (const auto& [e, c] : f.terms()) {
        exponent perm(e.rbegin(), e.rend());
        do {
            out.add_term(perm, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

/// Inverse of expand; throws not_symmetric if f is not invariant under permutations.
inline symmetric_polynomial collect(const polynomial& f) {
    symmetric_polynomial out(f.variables());
    for (const auto& [e, c] : f.terms())
        if (std::is_sorted(e.begin(), e.end(), std::greater<>()))
            out.add_term(e, c);
    if (expand(out) != f)
        throw not_symmetric("polynomial is not symmetric");
    return out;
}

/// Complete homogeneous h_m(x_1..x_n); h_0 = 1 and h_m = 0 for m < 0.
inline symmetric_polynomial poly_h(int m, int n) {
    symmetric_polynomial out(n);
    if (m < 0)
        return out;
    for (const auto& e : detail::dominant_exponents(m, n))
        out.add_term(e, 1);
    return out;
}

/// Power sum p_r(x_1..x_n).
inline symmetric_polynomial poly_p(int r, int n) {
    if (r < 1)
        throw error("power sum degree must be positive");
    symmetric_polynomial out(n);
    exponent e(static_cast<std::size_t>(n), 0);
    e[0] = r;
    out.add_term(e, 1);
    return out;
}

inline bool schur_vanishes(const partition& lambda, int n) noexcept {
    return static_cast<int>(lambda.length()) > n;
}

/// s_lambda(x_1..x_n) as the Jacobi–Trudi determinant det(h_{lambda_i - i + j}).
/// Zero when lambda has more than n parts (see schur_vanishes).
inline symmetric_polynomial poly_schur(const partition& lambda, int n) {
    const int len = static_cast<int>(lambda.length());
    if (len == 0)
        return symmetric_polynomial::constant(n, 1);
    if (len > 30)
        throw error("partition too long for the Jacobi-Trudi expansion");

    std::unordered_map<int, symmetric_polynomial> h;
    auto entry = [&](int row, int col) -> const symmetric_polynomial* {
        const int k = lambda.row(row + 1) - row + col;
        if (k < 0)
            return nullptr;
        auto it = h.find(k);
        if (it == h.end())
            it = h.emplace(k, poly_h(k, n)).first;
        return &it->second;
    };

    // Laplace expansion along rows, memoized on the set of used columns.
    std::unordered_map<std::uint32_t, symmetric_polynomial> memo;
    std::function<symmetric_polynomial(std::uint32_t)> minor = [&](std::uint32_t used) -> symmetric_polynomial {
        const int row = std::popcount(used);
        if (row == len)
            return symmetric_polynomial::constant(n, 1);
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        symmetric_polynomial total(n);
        int position = 0;
        for (int col = 0; col < len; ++col) {
            if (used & (1u << col))
                continue;
            if (const auto* a = entry(row, col)) {
                auto rest = minor(used | (1u << col));
                if (!rest.is_zero()) {
                    auto term = *a * rest;
                    if (position % 2 == 0)
                        total += term;
                    else
                        total -= term;
                }
            }
            ++position;
        }
        memo.emplace(used, total);
        return total;
    };
    return minor(0);
}

/// p_r o f for symmetric f: substitute x_i -> x_i^r.
inline symmetric_polynomial pleth_pr(const symmetric_polynomial& f, int r) {
    if (r < 1)
        throw error("plethysm degree must be positive");
    symmetric_polynomial out(f.variables());
    for (const auto& [original, c] : f.terms()) {
        exponent e = original;
        for (int& x : e)
            x *= r;
        out.add_term(e, c);
    }
    return out;
}

/// Schur expansion of a homogeneous symmetric polynomial of degree D in n >= D
/// variables, peeling off the lexicographically leading term each round.
inline schur_expansion schur_decompose(symmetric_polynomial f) {
    schur_expansion out;
    if (f.is_zero())
        return out;
    const auto degree = f.homogeneous_degree();
    if (!degree)
        throw error("schur_decompose needs a homogeneous polynomial");
    if (f.variables() < *degree)
        throw too_few_variables("degree " + std::to_string(*degree) + " in only " + std::to_string(f.variables()) +
                                " variables");
    while (auto lead = f.leading_exponent()) {
        const partition lambda(*lead);
        const integer c = f.coefficient(*lead);
        out.add(lambda, c);
        f -= c * poly_schur(lambda, f.variables());
        if (auto next = f.leading_exponent(); next && *next >= *lead)
            throw non_terminating("leading term " + lambda.to_string() + " did not decrease");
    }
    return out;
}

inline schur_expansion schur_decompose(const polynomial& f) {
    return schur_decompose(collect(f));
}

/// Checks m h_m = sum_{l=1}^m p_l h_{m-l} by full polynomial arithmetic.
inline bool newton_check(int m, int n) {
    const polynomial lhs = integer(m) * expand(poly_h(m, n));
    polynomial rhs(n);
    for (int l = 1; l <= m; ++l)
        rhs += expand(poly_p(l, n)) * expand(poly_h(m - l, n));
    return lhs == rhs;
}

/// Ground truth for s_nu (p_r o h_m).
inline schur_expansion oracle_plethystic_mn(const partition& nu, int r, int m, int n) {
    if (n < r * m + nu.size())
        throw too_few_variables("need at least " + std::to_string(r * m + nu.size()) + " variables");
    return schur_decompose(poly_schur(nu, n) * pleth_pr(poly_h(m, n), r));
}

/// Ground truth for s_nu p_r.
inline schur_expansion oracle_mn_multiply(const partition& nu, int r, int n) {
    if (n < r + nu.size())
        throw too_few_variables("need at least " + std::to_string(r + nu.size()) + " variables");
    return schur_decompose(poly_schur(nu, n) * poly_p(r, n));
}

}  // namespace plethabacus::oracle
