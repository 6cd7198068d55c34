#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "plethabacus/error.hpp"
#include "plethabacus/partition.hpp"

namespace plethabacus {

using integer = boost::multiprecision::cpp_int;

/// A homogeneous integer combination of Schur functions, iterated in
/// decreasing lexicographic order of the indexing partitions.
class schur_expansion {
public:
    using term_map = std::map<partition, integer, std::greater<>>;

    schur_expansion() = default;

    schur_expansion(std::initializer_list<std::pair<partition, int>> terms) {
        for (const auto& [lambda, c] : terms)
            add(lambda, c);
    }

    void add(const partition& lambda, const integer& coeff) {
        if (coeff == 0)
            return;
        if (degree_ && *degree_ != lambda.size())
            throw error("inhomogeneous expansion: s" + lambda.to_string() + " in degree " + std::to_string(*degree_));
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
        degree_ = terms_.empty() ? std::nullopt : std::optional<int>(lambda.size());
    }

    integer coefficient(const partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? integer(0) : it->second;
    }

    const term_map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    // Common size of the indexing partitions; nullopt for the zero expansion.
    std::optional<int> degree() const noexcept { return degree_; }

    schur_expansion& operator+=(const schur_expansion& other) {
        for (const auto& [lambda, c] : other.terms_)
            add(lambda, c);
        return *this;
    }

    friend schur_expansion operator*(const integer& k, const schur_expansion& e) {
        schur_expansion out;
        for (const auto& [lambda, c] : e.terms_)
            out.add(lambda, k * c);
        return out;
    }

    bool operator==(const schur_expansion& other) const { return terms_ == other.terms_; }

    /// `+ s[4] - s[3,1] + 2 s[2,2]`; `0` when empty.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [lambda, c] : terms_) {
            if (!out.empty())
                out += ' ';
            out += c < 0 ? "- " : "+ ";
            const integer mag = c < 0 ? integer(-c) : c;
            if (mag != 1)
                out += mag.str() + ' ';
            out += "s[";
            for (std::size_t i = 0; i < lambda.length(); ++i)
                out += (i ? "," : "") + std::to_string(lambda[i]);
            out += ']';
        }
        return out;
    }

private:
    term_map terms_;
    std::optional<int> degree_;
};

}  // namespace plethabacus
