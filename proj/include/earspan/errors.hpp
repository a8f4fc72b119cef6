#pragma once

#include <stdexcept>
#include <string>

namespace earspan {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input graph is not 2-vertex-connected (required by the approximation pipeline).
struct not_two_connected : error {
    explicit not_two_connected(const std::string& msg) : error(msg) {}
};

// Input graph has a vertex of degree below the pipeline's minimum-degree requirement.
struct min_degree_too_low : error {
    explicit min_degree_too_low(const std::string& msg) : error(msg) {}
};

// An exact/brute-force routine was asked to run beyond its size guard.
struct instance_too_large : error {
    explicit instance_too_large(const std::string& msg) : error(msg) {}
};

// A documented precondition of an operation failed; message names the clause.
struct precondition_violated : error {
    explicit precondition_violated(const std::string& msg) : error(msg) {}
};

// A routine requiring a nice ear decomposition was given one that is not nice.
struct not_nice : precondition_violated {
    explicit not_nice(const std::string& msg) : precondition_violated(msg) {}
};

// The vertex map / graph pair passed to gadget lifting does not describe a valid gadget expansion.
struct gadget_malformed : error {
    explicit gadget_malformed(const std::string& msg) : error(msg) {}
};

// Input file could not be parsed; message carries the line number where known.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Parsed input describes a multigraph (self-loop or parallel edge); we only handle simple graphs.
struct not_simple : parse_error {
    explicit not_simple(const std::string& msg) : parse_error(msg) {}
};

// Random generation failed to produce a valid instance within the retry budget.
struct generation_failed : error {
    explicit generation_failed(const std::string& msg) : error(msg) {}
};

// An internal invariant that the algorithms guarantee was observed to fail.
// Seeing this means a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

namespace detail {
inline void require(bool cond, const char* what) {
    if (!cond) throw internal_error(std::string("internal invariant violated: ") + what);
}
inline void require(bool cond, const std::string& what) {
    if (!cond) throw internal_error("internal invariant violated: " + what);
}
} // namespace detail

} // namespace earspan
