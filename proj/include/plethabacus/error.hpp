#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plethabacus {

// Base of every exception thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_partition : error {
    using error::error;
};

struct not_contained : error {
    using error::error;
};

struct invalid_abacus : error {
    using error::error;
};

struct bead_count_too_small : error {
    using error::error;
};

struct not_movable : error {
    using error::error;
};

struct bad_runner : error {
    using error::error;
};

// Carries the index of the first move in a sequence that could not be applied.
struct illegal_move : error {
    illegal_move(std::size_t index, const std::string& what)
        : error("illegal move #" + std::to_string(index) + ": " + what), index(index) {}
    std::size_t index;
};

struct empty_skew : error {
    using error::error;
};

struct incompatible_abaci : error {
    using error::error;
};

struct not_type_ii_case : error {
    using error::error;
};

struct not_divisible : error {
    using error::error;
};

struct not_symmetric : error {
    using error::error;
};

struct too_few_variables : error {
    using error::error;
};

struct non_terminating : error {
    using error::error;
};

}  // namespace plethabacus
