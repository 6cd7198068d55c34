#pragma once

// Batch cross-check of the plethystic rule against the polynomial oracle, and
// of the sign recursion on every skew shape in range.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "plethabacus/error.hpp"
#include "plethabacus/oracle.hpp"
#include "plethabacus/partition.hpp"
#include "plethabacus/strips.hpp"
#include "plethabacus/symfunc.hpp"

namespace plethabacus {

struct verify_config {
    int max_nu_size = 4;
    int r_min = 1;
    int r_max = 3;
    int m_min = 1;
    int m_max = 3;
    int max_degree = 12;
    int jobs = 1;

    static constexpr int degree_limit = 14;

    void validate() const {
        if (max_nu_size < 0)
            throw error("max nu size must be non-negative");
        if (r_min < 1 || r_max < r_min)
            throw error("r range must be a non-empty range of positive integers");
        if (m_min < 1 || m_max < m_min)
            throw error("m range must be a non-empty range of positive integers");
        if (max_degree < 0 || max_degree > degree_limit)
            throw error("max degree must lie in 0.." + std::to_string(degree_limit));
        if (jobs < 1)
            throw error("jobs must be positive");
    }
};

struct verify_summary {
    int expansion_cases = 0;
    int expansion_failures = 0;
    int recursion_cases = 0;
    int recursion_failures = 0;
    std::optional<std::string> first_counterexample;

    bool passed() const noexcept { return expansion_failures == 0 && recursion_failures == 0; }
};

namespace detail {

// Empty if the shape passes; otherwise a description of the failure.
inline std::string recursion_failure(const skew_partition& sk, int r) {
    const auto report = sign_recursion_check(sk, r);
    const std::string where = "sign recursion on " + sk.to_string() + " with r=" + std::to_string(r);
    if (!report.holds())
        return where + ": lhs " + std::to_string(report.lhs) + " != rhs " + std::to_string(report.rhs);
    const auto types = runner_types(sk, r);
    if (!types)
        return {};
    if (std::ranges::all_of(*types, [](auto t) { return t == runner_type::I; })) {
        if (report.nonzero_count() != report.m)
            return where + ": all runners type I but " + std::to_string(report.nonzero_count()) +
                   " nonzero summands for m=" + std::to_string(report.m);
    } else if (std::ranges::count(*types, runner_type::III) > 0 || std::ranges::count(*types, runner_type::II) > 1) {
        if (report.lhs != 0 || report.rhs != 0)
            return where + ": degenerate runner profile with nonzero sides";
    } else {
        const int b = static_cast<int>(sk.outer().length());
        const auto w = pairing_witness(abacus_for(sk.outer(), b), abacus_for(sk.inner(), b), r);
        for (const auto& t : w.terms)
            if (t.summand != -t.summand_star)
                return where + ": pairing at gamma=" + std::to_string(t.gamma) + " does not cancel";
    }
    return {};
}

struct verify_task {
    partition nu;
    int r = 1;
    int m = 1;
    verify_summary result;
};

inline void run_task(verify_task& task) {
    auto fail = [&](int& counter, std::string message) {
        ++counter;
        if (!task.result.first_counterexample)
            task.result.first_counterexample = std::move(message);
    };
    const int degree = task.r * task.m + task.nu.size();
    const std::string label =
        "nu=" + task.nu.to_string() + " r=" + std::to_string(task.r) + " m=" + std::to_string(task.m);
    try {
        ++task.result.expansion_cases;
        const auto rule = plethystic_mn(task.nu, task.r, task.m);
        const auto truth = oracle::oracle_plethystic_mn(task.nu, task.r, task.m, degree);
        if (rule != truth)
            fail(task.result.expansion_failures,
                 "expansion " + label + ": rule " + rule.to_string() + " vs oracle " + truth.to_string());
    } catch (const std::exception& e) {
        fail(task.result.expansion_failures, "expansion " + label + " threw: " + e.what());
    }
    for (const auto& lambda : partitions_containing(task.nu, degree)) {
        ++task.result.recursion_cases;
        try {
            auto message = recursion_failure(skew_partition(lambda, task.nu), task.r);
            if (!message.empty())
                fail(task.result.recursion_failures, std::move(message));
        } catch (const std::exception& e) {
            fail(task.result.recursion_failures,
                 "sign recursion " + lambda.to_string() + "/" + task.nu.to_string() + " threw: " + e.what());
        }
    }
}

}  // namespace detail

/// Sweeps every (nu, r, m) in range with r m + |nu| <= max_degree. Progress
/// lines, one per (r, m) block, go to `progress` when given.
inline verify_summary run_verify(const verify_config& config, std::ostream* progress = nullptr) {
    config.validate();
    verify_summary total;
    for (int r = config.r_min; r <= config.r_max; ++r) {
        for (int m = config.m_min; m <= config.m_max; ++m) {
            std::vector<detail::verify_task> tasks;
            for (int size = 0; size <= config.max_nu_size && r * m + size <= config.max_degree; ++size)
                for (auto& nu : partitions_of(size))
                    tasks.push_back({std::move(nu), r, m, {}});

            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++)
                    detail::run_task(tasks[i]);
            };
            const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), tasks.size());
            std::vector<std::jthread> pool;
            for (std::size_t k = 1; k < workers; ++k)
                pool.emplace_back(worker);
            worker();
            pool.clear();

            verify_summary block;
            for (auto& task : tasks) {
                block.expansion_cases += task.result.expansion_cases;
                block.expansion_failures += task.result.expansion_failures;
                block.recursion_cases += task.result.recursion_cases;
                block.recursion_failures += task.result.recursion_failures;
                if (!total.first_counterexample && task.result.first_counterexample)
                    total.first_counterexample = task.result.first_counterexample;
            }
            total.expansion_cases += block.expansion_cases;
            total.expansion_failures += block.expansion_failures;
            total.recursion_cases += block.recursion_cases;
            total.recursion_failures += block.recursion_failures;
            if (progress)
                *progress << "r=" << r << " m=" << m << ": " << block.expansion_cases << " expansions ("
                          << block.expansion_failures << " failed), " << block.recursion_cases << " shapes ("
                          << block.recursion_failures << " failed)\n";
        }
    }
    return total;
}

}  // namespace plethabacus
