#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plethabacus/abacus.hpp"
#include "plethabacus/error.hpp"
#include "plethabacus/partition.hpp"

namespace plethabacus {

struct border_strip {
    partition outer;
    partition inner;
    int length = 0;
    int height = 0;
    box top_right;
    box bottom_left;

    int sign() const noexcept { return height % 2 == 0 ? 1 : -1; }

    bool operator==(const border_strip&) const = default;
};

namespace detail {

// The strip removed from `lambda` by moving bead beta of `a` (an abacus for
// lambda) to the gap at beta - s.
inline border_strip strip_for_bead(const partition& lambda, const abacus& a, int beta, int s) {
    border_strip strip;
    strip.outer = lambda;
    strip.inner = partition_of(swap_bead(a, beta, s));
    strip.length = s;
    strip.height = strip_height(a, beta, s);
    const int row = a.row_of(beta);
    strip.top_right = {row, lambda.row(row)};
    const int bottom = row + strip.height;
    strip.bottom_left = {bottom, strip.inner.row(bottom) + 1};
    return strip;
}

}  // namespace detail

/// All s-border-strips of lambda, top-right box in the highest row first.
inline std::vector<border_strip> border_strips(const partition& lambda, int s) {
    const auto a = normalized_abacus(lambda);
    auto beads = movable_beads(a, s);
    std::vector<border_strip> out;
    out.reserve(beads.size());
    for (auto it = beads.rbegin(); it != beads.rend(); ++it)
        out.push_back(detail::strip_for_bead(lambda, a, *it, s));
    return out;
}

/// (-1)^height if outer/inner is a nonempty border strip, 0 otherwise.
inline int strip_sign(const partition& outer, const partition& inner) {
    if (!outer.contains(inner) || outer == inner)
        return 0;
    const int b = static_cast<int>(outer.length());
    const auto a = normalized_abacus(outer);
    const auto c = abacus_for(inner, b);
    std::vector<int> left, arrived;
    std::ranges::set_difference(a.beads(), c.beads(), std::back_inserter(left));
    std::ranges::set_difference(c.beads(), a.beads(), std::back_inserter(arrived));
    if (left.size() != 1)
        return 0;
    return a.beads_between(arrived.front(), left.front()) % 2 == 0 ? 1 : -1;
}

/// The r-border-strip outer/mu containing box (d, outer_d), d being the first
/// row where outer and inner differ, such that mu still contains inner.
inline std::optional<border_strip> final_border_strip(const skew_partition& sk, int r) {
    const auto d = minimal_distinct_row(sk);
    if (!d)
        throw empty_skew("final strip of the empty skew shape " + sk.to_string());
    const auto& lambda = sk.outer();
    std::optional<border_strip> found;
    for (auto& strip : border_strips(lambda, r)) {
        if (strip.inner.row(*d) < lambda.row(*d) && strip.inner.contains(sk.inner())) {
            assert(!found && "final strips are unique");
            found = std::move(strip);
        }
    }
    return found;
}

/// Abacus form of the final-strip test, for abaci a (outer) and c (inner) with
/// equal bead counts where c is reachable from a by removing r-strips: a final
/// r-strip exists iff the largest moved bead has a gap r positions above it.
inline bool final_strip_exists_abacus(const abacus& a, const abacus& c, int r) {
    if (a.bead_count() != c.bead_count())
        throw incompatible_abaci("bead counts differ");
    std::vector<int> moved;
    std::ranges::set_difference(a.beads(), c.beads(), std::back_inserter(moved));
    if (moved.empty())
        throw empty_skew("abaci are equal");
    const int beta = moved.back();
    return beta - r >= 0 && !a.has_bead(beta - r);
}

/// A chain lambda = mu(0) > mu(1) > ... > mu(m) = nu of final r-strip removals.
struct decomposition {
    int strip_length = 1;
    int bead_count = 0;
    std::vector<partition> chain;
    std::vector<int> heights;
    // Bead moves on the bead_count-bead abacus of chain.front().
    move_sequence moves;

    int sign() const noexcept {
        int total = 0;
        for (int h : heights)
            total += h;
        return total % 2 == 0 ? 1 : -1;
    }
};

inline std::optional<decomposition> r_decompose(const skew_partition& sk, int r) {
    if (r < 1 || sk.size() % r != 0)
        return std::nullopt;
    decomposition dec;
    dec.strip_length = r;
    dec.bead_count = static_cast<int>(sk.outer().length());
    dec.chain.push_back(sk.outer());
    auto current = abacus_for(sk.outer(), dec.bead_count);
    while (dec.chain.back() != sk.inner()) {
        auto strip = final_border_strip(skew_partition(dec.chain.back(), sk.inner()), r);
        if (!strip)
            return std::nullopt;
        auto next = abacus_for(strip->inner, dec.bead_count);
        std::vector<int> from, to;
        std::ranges::set_difference(current.beads(), next.beads(), std::back_inserter(from));
        std::ranges::set_difference(next.beads(), current.beads(), std::back_inserter(to));
        dec.moves.push_back({from.front(), to.front()});
        dec.heights.push_back(strip->height);
        dec.chain.push_back(std::move(strip->inner));
        current = std::move(next);
    }
    return dec;
}

/// sgn_r(outer/inner): the sign of the final-strip decomposition, 0 if none.
inline int sgn_r(const skew_partition& sk, int r) {
    const auto dec = r_decompose(sk, r);
    if (!dec)
        return 0;
    assert(inversion_sign(abacus_for(sk.outer(), dec->bead_count), dec->moves).sign == dec->sign());
    return dec->sign();
}

namespace detail {

inline void check_compatible(const abacus& a, const abacus& c, int r) {
    if (r < 1)
        throw bad_runner("need at least one runner");
    if (a.bead_count() != c.bead_count())
        throw incompatible_abaci("bead counts differ: " + std::to_string(a.bead_count()) + " vs " +
                                 std::to_string(c.bead_count()));
    for (int t = 0; t < r; ++t)
        if (runner_beads(a, r, t).size() != runner_beads(c, r, t).size())
            throw incompatible_abaci("runner " + std::to_string(t) + " holds different numbers of beads");
}

// Order-preserving destinations of the beads on every runner when c is
// reached from a by single-step moves; nullopt if some bead would have to move down.
inline std::optional<std::map<int, int>> single_step_destinations(const abacus& a, const abacus& c, int r) {
    std::map<int, int> dest;
    for (int t = 0; t < r; ++t) {
        const auto from = runner_beads(a, r, t);
        const auto to = runner_beads(c, r, t);
        if (from.size() != to.size())
            return std::nullopt;
        for (std::size_t k = 0; k < from.size(); ++k) {
            if (to[k] > from[k])
                return std::nullopt;
            dest.emplace(from[k], to[k]);
        }
    }
    return dest;
}

// Single-step moves taking a to c: runners in order, topmost bead first.
inline move_sequence single_step_moves(const abacus& a, const abacus& c, int r) {
    const auto dest = single_step_destinations(a, c, r);
    if (!dest)
        throw incompatible_abaci("target abacus is not reachable by single-step moves");
    move_sequence moves;
    for (int t = 0; t < r; ++t)
        for (int beta : runner_beads(a, r, t))
            for (int pos = beta; pos > dest->at(beta); pos -= r)
                moves.push_back({pos, pos - r});
    return moves;
}

}  // namespace detail

/// The common sign of every sequence of r-strip removals from lambda to nu,
/// computed from bead inversions on the abacus; 0 if nu is unreachable.
inline int order_independent_sign(const partition& lambda, const partition& nu, int r) {
    if (r < 1 || !lambda.contains(nu) || (lambda.size() - nu.size()) % r != 0)
        return 0;
    const int b = static_cast<int>(lambda.length());
    const auto a = abacus_for(lambda, b);
    const auto dest = detail::single_step_destinations(a, abacus_for(nu, b), r);
    if (!dest)
        return 0;
    int inversions = 0;
    for (auto lo = dest->begin(); lo != dest->end(); ++lo)
        for (auto hi = std::next(lo); hi != dest->end(); ++hi)
            inversions += lo->second > hi->second;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Runner t of a is r-decomposable relative to c if c's runner arises by moving
/// beads beta_k into gaps alpha_k with alpha_1 < beta_1 < ... < alpha_c < beta_c
/// and only gaps on the runner from alpha_k up to beta_k.
inline bool runner_is_decomposable(const abacus& a, const abacus& c, int r, int t) {
    detail::check_compatible(a, c, r);
    const auto from_a = runner_beads(a, r, t);
    const auto from_c = runner_beads(c, r, t);
    std::vector<int> betas, alphas;
    std::ranges::set_difference(from_a, from_c, std::back_inserter(betas));
    std::ranges::set_difference(from_c, from_a, std::back_inserter(alphas));
    for (std::size_t k = 0; k < betas.size(); ++k) {
        if (alphas[k] >= betas[k])
            return false;
        if (k + 1 < betas.size() && betas[k] >= alphas[k + 1])
            return false;
        for (int pos = alphas[k] + r; pos < betas[k]; pos += r)
            if (a.has_bead(pos))
                return false;
    }
    return true;
}

enum class runner_type { I, II, III };

inline const char* to_string(runner_type type) noexcept {
    switch (type) {
    case runner_type::I:
        return "I";
    case runner_type::II:
        return "II";
    case runner_type::III:
        return "III";
    }
    return "?";
}

/// Swaps on runner t (bead at epsilon, gap at gamma < epsilon) after which the
/// runner becomes r-decomposable. Ordered by gamma, then epsilon descending.
inline std::vector<position_pair> repairing_swaps(const abacus& a, const abacus& c, int r, int t) {
    detail::check_compatible(a, c, r);
    std::vector<position_pair> out;
    const auto beads = runner_beads(a, r, t);
    for (int gamma = t; gamma < a.max_position(); gamma += r) {
        if (a.has_bead(gamma))
            continue;
        for (auto it = beads.rbegin(); it != beads.rend(); ++it)
            if (*it > gamma && runner_is_decomposable(detail::relocate(a, *it, gamma), c, r, t))
                out.emplace_back(*it, gamma);
    }
    return out;
}

inline runner_type classify_runner(const abacus& a, const abacus& c, int r, int t) {
    if (runner_is_decomposable(a, c, r, t))
        return runner_type::I;
    return repairing_swaps(a, c, r, t).empty() ? runner_type::III : runner_type::II;
}

inline std::vector<runner_type> classify_runners(const abacus& a, const abacus& c, int r) {
    std::vector<runner_type> out;
    for (int t = 0; t < r; ++t)
        out.push_back(classify_runner(a, c, r, t));
    return out;
}

/// Runner types of outer/inner on abaci with outer's length as bead count;
/// nullopt when the two abaci hold different numbers of beads on some runner.
inline std::optional<std::vector<runner_type>> runner_types(const skew_partition& sk, int r) {
    const int b = static_cast<int>(sk.outer().length());
    try {
        return classify_runners(abacus_for(sk.outer(), b), abacus_for(sk.inner(), b), r);
    } catch (const incompatible_abaci&) {
        return std::nullopt;
    }
}

/// One cancelling pair: moving d (at delta) or d* (at delta_star) into the gap gamma.
struct pairing_term {
    int gamma = 0;
    partition mu;       // from the move (delta, gamma)
    partition mu_star;  // from the move (delta_star, gamma)
    int alpha = 0;       // final position of d along A -> B -> C
    int alpha_star = 0;  // final position of d* along A -> B -> C
    move_sequence moves;       // A -> B -> C
    move_sequence moves_star;  // A -> B* -> B -> C
    inversion_result inversions;       // J
    inversion_result inversions_star;  // J*
    int summand = 0;       // sgn(lambda/mu) sgn_r(mu/nu)
    int summand_star = 0;  // sgn(lambda/mu*) sgn_r(mu*/nu)
};

/// Witness of the sign-reversing pairing when exactly one runner has type II
/// and all others type I.
struct type_ii_pairing {
    int runner = 0;
    int delta = 0;
    int delta_star = 0;
    int alpha = 0;
    int alpha_star = 0;
    std::vector<position_pair> swaps;  // the set P of (epsilon, gamma)
    std::vector<pairing_term> terms;   // one per gamma
};

inline type_ii_pairing pairing_witness(const abacus& a, const abacus& c, int r) {
    const auto types = classify_runners(a, c, r);
    if (std::ranges::count(types, runner_type::II) != 1 || std::ranges::count(types, runner_type::III) != 0)
        throw not_type_ii_case("pairing needs exactly one type II runner and all others type I");

    type_ii_pairing w;
    w.runner = static_cast<int>(std::ranges::find(types, runner_type::II) - types.begin());
    const int t = w.runner;

    // delta: the largest bead whose single-step destination is at or above the bead below it.
    const auto from = runner_beads(a, r, t);
    const auto to = runner_beads(c, r, t);
    bool found = false;
    for (std::size_t k = from.size(); k-- > 1;) {
        if (to[k] <= from[k - 1]) {
            w.delta = from[k];
            w.delta_star = from[k - 1];
            found = true;
            break;
        }
    }
    if (!found)
        throw std::logic_error("type II runner without a crossing bead pair");

    w.swaps = repairing_swaps(a, c, r, t);
    std::vector<int> gammas;
    for (const auto& [epsilon, gamma] : w.swaps) {
        if (epsilon != w.delta && epsilon != w.delta_star)
            throw std::logic_error("repairing swap moves a bead other than d or d*");
        if (gammas.empty() || gammas.back() != gamma)
            gammas.push_back(gamma);
    }

    const auto lambda = partition_of(a);
    const auto nu = partition_of(c);
    auto summand = [&](const partition& mu) {
        return strip_sign(lambda, mu) * sgn_r(skew_partition(mu, nu), r);
    };
    for (int gamma : gammas) {
        pairing_term term;
        term.gamma = gamma;
        const auto b = detail::relocate(a, w.delta, gamma);
        const auto b_star = detail::relocate(a, w.delta_star, gamma);
        term.mu = partition_of(b);
        term.mu_star = partition_of(b_star);
        const auto tail = detail::single_step_moves(b, c, r);

        term.moves.push_back({w.delta, gamma});
        term.moves.insert(term.moves.end(), tail.begin(), tail.end());

        term.moves_star.push_back({w.delta_star, gamma});
        for (int pos = w.delta; pos > w.delta_star; pos -= r)
            term.moves_star.push_back({pos, pos - r});
        term.moves_star.insert(term.moves_star.end(), tail.begin(), tail.end());

        const auto dest = apply_moves(a, term.moves).destination;
        term.alpha = dest.at(w.delta);
        term.alpha_star = dest.at(w.delta_star);
        term.inversions = inversion_sign(a, term.moves);
        term.inversions_star = inversion_sign(a, term.moves_star);
        term.summand = summand(term.mu);
        term.summand_star = summand(term.mu_star);
        w.terms.push_back(std::move(term));
    }
    if (!w.terms.empty()) {
        w.alpha = w.terms.front().alpha;
        w.alpha_star = w.terms.front().alpha_star;
    }
    return w;
}

struct recursion_summand {
    partition mu;
    bead_move move;  // on the abacus of the outer shape
    int runner = 0;
    int height = 0;     // of the strip outer/mu
    int rest_sign = 0;  // sgn_r(mu/inner)
    int value = 0;      // (-1)^height * rest_sign
};

struct recursion_report {
    int m = 0;
    int lhs = 0;  // m * sgn_r(outer/inner)
    int rhs = 0;  // sum of summand values
    std::vector<recursion_summand> summands;

    int nonzero_count() const noexcept {
        return static_cast<int>(std::ranges::count_if(summands, [](const auto& s) { return s.value != 0; }));
    }
    bool holds() const noexcept { return lhs == rhs; }
};

/// Both sides of m sgn_r(lambda/nu) = sum_mu sgn(lambda/mu) sgn_r(mu/nu), the
/// sum over mu containing nu with lambda/mu a strip of length divisible by r.
/// Summands are listed by runner, then by bead position descending, then by
/// strip length.
inline recursion_report sign_recursion_check(const skew_partition& sk, int r) {
    if (r < 1 || sk.size() % r != 0)
        throw not_divisible(std::to_string(r) + " does not divide |" + sk.to_string() + "| = " +
                            std::to_string(sk.size()));
    recursion_report report;
    report.m = sk.size() / r;
    report.lhs = report.m * sgn_r(sk, r);
    const auto a = normalized_abacus(sk.outer());
    for (int t = 0; t < r; ++t) {
        const auto beads = runner_beads(a, r, t);
        for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
            for (int to = *it - r; to >= 0; to -= r) {
                if (a.has_bead(to))
                    continue;
                auto mu = partition_of(detail::relocate(a, *it, to));
                if (!mu.contains(sk.inner()))
                    continue;
                recursion_summand s;
                s.move = {*it, to};
                s.runner = t;
                s.height = a.beads_between(to, *it);
                s.rest_sign = sgn_r(skew_partition(mu, sk.inner()), r);
                s.value = (s.height % 2 == 0 ? 1 : -1) * s.rest_sign;
                s.mu = std::move(mu);
                report.rhs += s.value;
                report.summands.push_back(std::move(s));
            }
        }
    }
    return report;
}

}  // namespace plethabacus
