#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plethabacus/error.hpp"

namespace plethabacus {

/// An integer partition: weakly decreasing positive parts. Trailing zeros are
/// stripped on construction, so every partition has exactly one representation
/// and the empty partition is the unique partition of 0.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw invalid_partition("negative part " + std::to_string(parts_[i]));
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_partition("parts increase at index " + std::to_string(i));
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }

    // Number of (nonzero) parts.
    std::size_t length() const noexcept { return parts_.size(); }

    bool empty() const noexcept { return parts_.empty(); }

    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 0-based access, padded with zeros past the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    // 1-based row length, matching box coordinates.
    int row(int i) const noexcept { return i >= 1 ? (*this)[static_cast<std::size_t>(i - 1)] : 0; }

    // True iff `inner` fits inside this partition, comparing zero-padded parts.
    bool contains(const partition& inner) const noexcept {
        if (inner.length() > length())
            return false;
        for (std::size_t i = 0; i < inner.length(); ++i)
            if (inner.parts_[i] > parts_[i])
                return false;
        return true;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    auto operator<=>(const partition&) const = default;
    bool operator==(const partition&) const = default;

private:
    std::vector<int> parts_;
};

inline partition make_partition(std::span<const int> parts) {
    return partition(std::vector<int>(parts.begin(), parts.end()));
}

/// A box (row, column) of a Young diagram, both 1-based, row 1 on top.
struct box {
    int row = 1;
    int column = 1;

    auto operator<=>(const box&) const = default;
};

/// A skew shape outer/inner with inner contained in outer.
class skew_partition {
public:
    skew_partition() = default;

    skew_partition(partition outer, partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw not_contained(inner_.to_string() + " is not contained in " + outer_.to_string());
    }

    const partition& outer() const noexcept { return outer_; }
    const partition& inner() const noexcept { return inner_; }

    int size() const noexcept { return outer_.size() - inner_.size(); }
    bool empty() const noexcept { return outer_ == inner_; }

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

    bool operator==(const skew_partition&) const = default;

private:
    partition outer_;
    partition inner_;
};

inline skew_partition make_skew(partition outer, partition inner) {
    return skew_partition(std::move(outer), std::move(inner));
}

/// Boxes of [lambda] in row-major order.
inline std::vector<box> young_diagram(const partition& lambda) {
    std::vector<box> boxes;
    boxes.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            boxes.push_back({i, j});
    return boxes;
}

inline bool in_diagram(const partition& lambda, box b) noexcept {
    return b.row >= 1 && b.column >= 1 && b.column <= lambda.row(b.row);
}

/// Boxes (i,j) of [lambda] with (i+1,j+1) outside [lambda], row-major.
inline std::vector<box> rim(const partition& lambda) {
    std::vector<box> out;
    for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
        for (int j = std::max(1, lambda.row(i + 1)); j <= lambda.row(i); ++j)
            out.push_back({i, j});
    return out;
}

/// Smallest row d with outer_d > inner_d; nullopt for an empty skew shape.
inline std::optional<int> minimal_distinct_row(const skew_partition& sk) {
    const auto& lambda = sk.outer();
    for (int d = 1; d <= static_cast<int>(lambda.length()); ++d)
        if (lambda.row(d) > sk.inner().row(d))
            return d;
    return std::nullopt;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<partition> partitions_of(int n) {
    std::vector<partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/// All partitions of n containing `inner`, in decreasing lexicographic order.
inline std::vector<partition> partitions_containing(const partition& inner, int n) {
    std::vector<partition> out;
    for (auto& lambda : partitions_of(n))
        if (lambda.contains(inner))
            out.push_back(std::move(lambda));
    return out;
}

}  // namespace plethabacus
