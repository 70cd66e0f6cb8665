/*
 * error.hpp
 * ---------
 * Error taxonomy used across the library. Each class maps to a distinct
 * CLI exit code (see tools/lpa.cpp).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Malformed input files, unknown names, bad expressions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated precondition
// (ring mismatch, intersecting cycles where disjointness is required, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A configurable cap (term count, cycle count, BFS budget) was exceeded.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lpa
