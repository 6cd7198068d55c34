#pragma once

// Schur polynomials by direct enumeration of semistandard tableaux.

#include <vector>

#include "plethabacus/oracle.hpp"
#include "plethabacus/partition.hpp"

namespace tableaux {

namespace detail {

inline void fill(const plethabacus::partition& shape, int n, std::size_t row, int col,
                 std::vector<std::vector<int>>& t, plethabacus::oracle::polynomial& out) {
    if (row == shape.length()) {
        plethabacus::oracle::exponent weight(static_cast<std::size_t>(n), 0);
        for (const auto& r : t)
            for (int v : r)
                ++weight[static_cast<std::size_t>(v - 1)];
        out.add_term(weight, 1);
        return;
    }
    if (col == shape.row(static_cast<int>(row) + 1)) {
        fill(shape, n, row + 1, 0, t, out);
        return;
    }
    int lo = 1;
    if (col > 0)
        lo = t[row][static_cast<std::size_t>(col - 1)];
    if (row > 0)
        lo = std::max(lo, t[row - 1][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
        t[row][static_cast<std::size_t>(col)] = v;
        fill(shape, n, row, col + 1, t, out);
    }
}

}  // namespace detail

/// Sum over semistandard tableaux of shape lambda with entries 1..n of x^weight.
inline plethabacus::oracle::polynomial schur(const plethabacus::partition& lambda, int n) {
    plethabacus::oracle::polynomial out(n);
    std::vector<std::vector<int>> t;
    for (int part : lambda.parts())
        t.emplace_back(static_cast<std::size_t>(part), 0);
    detail::fill(lambda, n, 0, 0, t, out);
    return out;
}

}  // namespace tableaux
