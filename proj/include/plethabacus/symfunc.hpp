#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plethabacus/abacus.hpp"
#include "plethabacus/error.hpp"
#include "plethabacus/partition.hpp"
#include "plethabacus/schur_expansion.hpp"
#include "plethabacus/strips.hpp"

namespace plethabacus {

/// s_nu p_r = sum over r-strips lambda/nu of (-1)^height s_lambda.
inline schur_expansion mn_multiply(const partition& nu, int r) {
    if (r < 1)
        throw error("power sum degree must be positive");
    const int b = static_cast<int>(nu.length()) + r;
    const auto c = abacus_for(nu, b);
    schur_expansion out;
    for (int beta : c.beads()) {
        if (c.has_bead(beta + r))
            continue;
        const auto grown = detail::relocate(c, beta, beta + r);
        out.add(partition_of(grown), strip_height(grown, beta + r, r) % 2 == 0 ? 1 : -1);
    }
    return out;
}

inline schur_expansion mn_multiply(const schur_expansion& f, int r) {
    schur_expansion out;
    for (const auto& [nu, c] : f.terms())
        out += c * mn_multiply(nu, r);
    return out;
}

namespace detail {

// Partitions lambda containing nu obtained by adding m r-strips in succession.
inline std::set<partition> strip_additions(const partition& nu, int r, int m) {
    const int b = static_cast<int>(nu.length()) + r * m;
    std::set<abacus> frontier{abacus_for(nu, b)};
    for (int step = 0; step < m; ++step) {
        std::set<abacus> next;
        for (const auto& a : frontier)
            for (int beta : a.beads())
                if (!a.has_bead(beta + r))
                    next.insert(relocate(a, beta, beta + r));
        frontier = std::move(next);
    }
    std::set<partition> out;
    for (const auto& a : frontier)
        out.insert(partition_of(a));
    return out;
}

}  // namespace detail

/// s_nu (p_r o h_m) = sum over lambda of sgn_r(lambda/nu) s_lambda.
inline schur_expansion plethystic_mn(const partition& nu, int r, int m) {
    if (r < 1 || m < 1)
        throw error("plethystic MN needs r >= 1 and m >= 1");
    schur_expansion out;
    for (const auto& lambda : detail::strip_additions(nu, r, m))
        out.add(lambda, sgn_r(skew_partition(lambda, nu), r));
    return out;
}

inline schur_expansion plethystic_mn(const schur_expansion& f, int r, int m) {
    schur_expansion out;
    for (const auto& [nu, c] : f.terms())
        out += c * plethystic_mn(nu, r, m);
    return out;
}

/// s_nu (p_r o h_{m_1} ... h_{m_d}), using that p_r o - is multiplicative.
inline schur_expansion plethystic_mn_multi(const partition& nu, int r, std::span<const int> ms) {
    schur_expansion out{{nu, 1}};
    for (int m : ms)
        out = plethystic_mn(out, r, m);
    return out;
}

/// s_nu ((p_{r_1} ... p_{r_c}) o h_m) = s_nu prod_i (p_{r_i} o h_m).
inline schur_expansion power_product_pleth(const partition& nu, std::span<const int> rs, int m) {
    schur_expansion out{{nu, 1}};
    for (int r : rs)
        out = plethystic_mn(out, r, m);
    return out;
}

}  // namespace plethabacus
