#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plethabacus/error.hpp"
#include "plethabacus/partition.hpp"

namespace plethabacus {

/// James' abacus: a fixed number of beads on positions numbered from 0.
///
/// Walking the rim of a partition from bottom-left to top-right, each up step
/// is a bead and each right step is a gap. The bead positions are then the
/// beta-numbers lambda_i + b - i. Prepending beads (and shifting everything
/// up) gives another abacus for the same partition, so the bead count is part
/// of the abacus identity: runner structure depends on it.
class abacus {
public:
    abacus() = default;

    abacus(int bead_count, std::vector<int> beads) : bead_count_(bead_count), beads_(std::move(beads)) {
        std::sort(beads_.begin(), beads_.end());
        if (bead_count_ < 0)
            throw invalid_abacus("negative bead count");
        if (static_cast<int>(beads_.size()) != bead_count_)
            throw invalid_abacus("bead count " + std::to_string(bead_count_) + " but " +
                                 std::to_string(beads_.size()) + " positions");
        if (!beads_.empty() && beads_.front() < 0)
            throw invalid_abacus("negative bead position");
        if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
            throw invalid_abacus("repeated bead position");
    }

    int bead_count() const noexcept { return bead_count_; }

    // Ascending.
    const std::vector<int>& beads() const noexcept { return beads_; }

    bool has_bead(int position) const noexcept {
        return std::binary_search(beads_.begin(), beads_.end(), position);
    }

    // -1 for an abacus with no beads.
    int max_position() const noexcept { return beads_.empty() ? -1 : beads_.back(); }

    // Row of [lambda] whose up step is the bead at `position` (1 = top row).
    int row_of(int position) const noexcept {
        auto it = std::lower_bound(beads_.begin(), beads_.end(), position);
        return static_cast<int>(beads_.end() - it);
    }

    // Number of beads strictly between positions lo and hi.
    int beads_between(int lo, int hi) const noexcept {
        if (hi <= lo + 1)
            return 0;
        auto first = std::upper_bound(beads_.begin(), beads_.end(), lo);
        auto last = std::lower_bound(beads_.begin(), beads_.end(), hi);
        return static_cast<int>(last - first);
    }

    auto operator<=>(const abacus&) const = default;
    bool operator==(const abacus&) const = default;

private:
    int bead_count_ = 0;
    std::vector<int> beads_;
};

/// Move of the bead at `from` into the gap at `to`; to < from.
struct bead_move {
    int from = 0;
    int to = 0;

    bool operator==(const bead_move&) const = default;
};

using move_sequence = std::vector<bead_move>;

/// Abacus with exactly `lambda.length()` beads.
inline abacus normalized_abacus(const partition& lambda) {
    const int p = static_cast<int>(lambda.length());
    std::vector<int> beads;
    beads.reserve(lambda.length());
    for (int i = 1; i <= p; ++i)
        beads.push_back(lambda.row(i) + p - i);
    return abacus(p, std::move(beads));
}

inline abacus with_bead_count(const abacus& a, int bead_count) {
    if (bead_count < a.bead_count())
        throw bead_count_too_small("requested " + std::to_string(bead_count) + " beads, abacus has " +
                                   std::to_string(a.bead_count()));
    const int shift = bead_count - a.bead_count();
    std::vector<int> beads;
    beads.reserve(static_cast<std::size_t>(bead_count));
    for (int k = 0; k < shift; ++k)
        beads.push_back(k);
    for (int b : a.beads())
        beads.push_back(b + shift);
    return abacus(bead_count, std::move(beads));
}

/// Abacus for lambda with the given number of beads (at least lambda's length).
inline abacus abacus_for(const partition& lambda, int bead_count) {
    return with_bead_count(normalized_abacus(lambda), bead_count);
}

inline partition partition_of(const abacus& a) {
    const int b = a.bead_count();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(b));
    const auto& beads = a.beads();
    for (int i = 1; i <= b; ++i)
        parts.push_back(beads[static_cast<std::size_t>(b - i)] - (b - i));
    return partition(std::move(parts));
}

/// Bead positions beta with beta - s a gap (and beta - s >= 0). These are in
/// bijection with the s-border-strips of partition_of(a): the bead is the up
/// step of the strip's top-right box.
inline std::vector<int> movable_beads(const abacus& a, int s) {
    std::vector<int> out;
    for (int beta : a.beads())
        if (beta - s >= 0 && !a.has_bead(beta - s))
            out.push_back(beta);
    return out;
}

namespace detail {

inline void require_movable(const abacus& a, int beta, int s) {
    if (s < 1 || !a.has_bead(beta) || beta - s < 0 || a.has_bead(beta - s))
        throw not_movable("no bead at " + std::to_string(beta) + " with a gap at " + std::to_string(beta - s));
}

inline abacus relocate(const abacus& a, int from, int to) {
    std::vector<int> beads = a.beads();
    *std::lower_bound(beads.begin(), beads.end(), from) = to;
    return abacus(a.bead_count(), std::move(beads));
}

}  // namespace detail

/// Removes the s-border-strip whose top-right box corresponds to bead beta.
inline abacus swap_bead(const abacus& a, int beta, int s) {
    detail::require_movable(a, beta, s);
    return detail::relocate(a, beta, beta - s);
}

/// Height of the s-border-strip for bead beta: beads strictly between beta - s and beta.
inline int strip_height(const abacus& a, int beta, int s) {
    detail::require_movable(a, beta, s);
    return a.beads_between(beta - s, beta);
}

/// Occupancy of runner t (positions t, t+r, ...) up to max_position() + r, top first.
inline std::vector<bool> runner_positions(const abacus& a, int r, int t) {
    if (r < 1 || t < 0 || t >= r)
        throw bad_runner("runner " + std::to_string(t) + " does not exist on a " + std::to_string(r) + "-runner abacus");
    std::vector<bool> out;
    for (int pos = t; pos <= a.max_position() + r; pos += r)
        out.push_back(a.has_bead(pos));
    return out;
}

/// Bead positions on runner t, ascending.
inline std::vector<int> runner_beads(const abacus& a, int r, int t) {
    if (r < 1 || t < 0 || t >= r)
        throw bad_runner("runner " + std::to_string(t) + " does not exist on a " + std::to_string(r) + "-runner abacus");
    std::vector<int> out;
    for (int beta : a.beads())
        if (beta % r == t)
            out.push_back(beta);
    return out;
}

struct move_result {
    abacus final;
    // original bead position -> position after all moves
    std::map<int, int> destination;
};

inline move_result apply_moves(const abacus& a, std::span<const bead_move> moves) {
    // position -> original position of the bead sitting there
    std::map<int, int> occupant;
    for (int beta : a.beads())
        occupant.emplace(beta, beta);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        const auto [from, to] = moves[k];
        if (to < 0 || to >= from)
            throw illegal_move(k, "(" + std::to_string(from) + "," + std::to_string(to) + ") does not move a bead up");
        auto it = occupant.find(from);
        if (it == occupant.end())
            throw illegal_move(k, "no bead at " + std::to_string(from));
        if (occupant.contains(to))
            throw illegal_move(k, "no gap at " + std::to_string(to));
        const int id = it->second;
        occupant.erase(it);
        occupant.emplace(to, id);
    }
    move_result out;
    std::vector<int> beads;
    for (const auto& [pos, id] : occupant) {
        beads.push_back(pos);
        out.destination.emplace(id, pos);
    }
    out.final = abacus(a.bead_count(), std::move(beads));
    return out;
}

using position_pair = std::pair<int, int>;

struct inversion_result {
    int sign = 1;
    // Pairs {beta, beta'} of starting positions, beta < beta', whose beads end
    // in the opposite order. Sorted.
    std::vector<position_pair> pairs;
};

/// Sign (-1)^|J| of a move sequence, J being the inverted bead pairs. When the
/// moves remove border strips this is the product of their signs.
inline inversion_result inversion_sign(const abacus& a, std::span<const bead_move> moves) {
    const auto result = apply_moves(a, moves);
    inversion_result out;
    for (auto lo = result.destination.begin(); lo != result.destination.end(); ++lo)
        for (auto hi = std::next(lo); hi != result.destination.end(); ++hi)
            if (lo->second > hi->second)
                out.pairs.emplace_back(lo->first, hi->first);
    out.sign = out.pairs.size() % 2 == 0 ? 1 : -1;
    return out;
}

/// r columns, one header row of runner indices, then positions top to bottom:
/// `X` for a bead, `o` for a gap. Rows cover positions up to the last bead.
inline std::string render_runners(const abacus& a, int r) {
    if (r < 1)
        throw bad_runner("need at least one runner");
    std::vector<std::string> header;
    std::size_t width = 1;
    for (int t = 0; t < r; ++t) {
        header.push_back(std::to_string(t));
        width = std::max(width, header.back().size());
    }
    auto cell = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    std::string out;
    for (int t = 0; t < r; ++t)
        out += (t ? " " : "") + cell(header[static_cast<std::size_t>(t)]);
    out += '\n';
    for (int base = 0; base <= a.max_position(); base += r) {
        for (int t = 0; t < r; ++t)
            out += (t ? " " : "") + cell(a.has_bead(base + t) ? "X" : "o");
        out += '\n';
    }
    return out;
}

}  // namespace plethabacus
