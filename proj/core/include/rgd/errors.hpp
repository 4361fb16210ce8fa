#pragma once

#include <stdexcept>
#include <string>

namespace rgd {

// Stable failure categories; the CLI maps these to exit codes.
enum class errc {
    bad_argument,           // invalid parameters or unknown names
    parse_error,            // malformed file content
    not_regular,            // graph is not regular
    girth_too_small,        // graph has a cycle shorter than 5
    duplicate_block,        // development produced the same block twice
    no_design_exists,       // a proven refutation
    recovery_failed,        // design does not determine a usable graph
    unsupported,            // valid input outside the implemented constructions
    precondition_violated,  // operation applied outside its domain
    generation_failed,      // random generation exhausted its retry budget
    dimension_mismatch,     // design and graph orders differ
    missing_ingredient,     // no ingredient design for a group size
    verification_failed,    // composed design failed re-verification
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace rgd
