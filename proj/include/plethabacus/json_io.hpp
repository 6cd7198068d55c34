#pragma once

// nlohmann::json bindings for the library's value types.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plethabacus/abacus.hpp"
#include "plethabacus/partition.hpp"
#include "plethabacus/schur_expansion.hpp"
#include "plethabacus/strips.hpp"

namespace plethabacus {

inline void to_json(nlohmann::json& j, const partition& p) { j = p.parts(); }

inline void from_json(const nlohmann::json& j, partition& p) { p = partition(j.get<std::vector<int>>()); }

inline void to_json(nlohmann::json& j, const skew_partition& sk) {
    j = {{"outer", sk.outer()}, {"inner", sk.inner()}};
}

inline void from_json(const nlohmann::json& j, skew_partition& sk) {
    sk = skew_partition(j.at("outer").get<partition>(), j.at("inner").get<partition>());
}

inline void to_json(nlohmann::json& j, const abacus& a) {
    j = {{"bead_count", a.bead_count()}, {"beads", a.beads()}};
}

inline void from_json(const nlohmann::json& j, abacus& a) {
    a = abacus(j.at("bead_count").get<int>(), j.at("beads").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const bead_move& m) { j = {m.from, m.to}; }

inline void to_json(nlohmann::json& j, const box& b) { j = {b.row, b.column}; }

inline void to_json(nlohmann::json& j, const decomposition& d) {
    j = {{"chain", d.chain}, {"heights", d.heights}, {"sign", d.sign()}, {"moves", d.moves}};
}

namespace detail {

inline nlohmann::json pair_list(const std::vector<position_pair>& pairs) {
    auto out = nlohmann::json::array();
    for (const auto& [a, b] : pairs)
        out.push_back({a, b});
    return out;
}

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline nlohmann::json integer_json(const integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string())
        return integer(j.get<std::string>());
    return integer(j.get<std::int64_t>());
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const type_ii_pairing& w) {
    auto terms = nlohmann::json::array();
    for (const auto& t : w.terms) {
        terms.push_back({{"gamma", t.gamma},
                         {"mu", t.mu},
                         {"mu_star", t.mu_star},
                         {"alpha", t.alpha},
                         {"alpha_star", t.alpha_star},
                         {"J", detail::pair_list(t.inversions.pairs)},
                         {"J_star", detail::pair_list(t.inversions_star.pairs)},
                         {"summand", t.summand},
                         {"summand_star", t.summand_star}});
    }
    j = {{"runner", w.runner},         {"delta", w.delta}, {"delta_star", w.delta_star},
         {"alpha", w.alpha},           {"alpha_star", w.alpha_star},
         {"P", detail::pair_list(w.swaps)}, {"terms", terms}};
}

inline void to_json(nlohmann::json& j, const recursion_report& rep) {
    auto summands = nlohmann::json::array();
    for (const auto& s : rep.summands)
        summands.push_back({{"mu", s.mu},
                            {"move", s.move},
                            {"runner", s.runner},
                            {"height", s.height},
                            {"rest_sign", s.rest_sign},
                            {"value", s.value}});
    j = {{"m", rep.m}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"summands", summands}};
}

inline void to_json(nlohmann::json& j, const schur_expansion& e) {
    auto terms = nlohmann::json::array();
    for (const auto& [lambda, c] : e.terms())
        terms.push_back({{"lambda", lambda}, {"coeff", detail::integer_json(c)}});
    j = {{"degree", e.degree() ? nlohmann::json(*e.degree()) : nlohmann::json(nullptr)}, {"terms", terms}};
}

inline void from_json(const nlohmann::json& j, schur_expansion& e) {
    e = schur_expansion();
    for (const auto& term : j.at("terms"))
        e.add(term.at("lambda").get<partition>(), detail::integer_from_json(term.at("coeff")));
    const auto& degree = j.at("degree");
    if (!degree.is_null() && e.degree() && *e.degree() != degree.get<int>())
        throw error("expansion degree field disagrees with its terms");
}

}  // namespace plethabacus
