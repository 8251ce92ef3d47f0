#pragma once

#include <stdexcept>
#include <string>

namespace tko {

// Structured failure reasons. Every throwing operation in the library uses
// one of these codes so callers (CLI, tests) can dispatch without parsing
// messages.
enum class errc {
    // simplicial complex validation
    non_pure,
    unused_vertex,
    index_out_of_range,
    duplicate_facet,
    empty_facet_list,
    negative_h_entry,
    not_a_sphere,
    // characteristic matrix validation
    dimension_mismatch,
    singular_at_facet,
    singular_at_facet_mod2,
    // face ring
    rank_mismatch,
    degree_overflow,
    no_top_class,
    // Steenrod / spin
    chain_complex_violation,
    pairing_degenerate,
    inconsistent_witness,
    // KO groups
    collapse_not_established,
    unsupported_torsion,
    // generic
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Input-text errors carry the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tko
