#pragma once

#include <stdexcept>
#include <string>

namespace ratdiag {

// Machine-readable error codes. The CLI prints these names on stderr and
// maps them to exit codes; library users can switch on them.
enum class Errc {
    syntax_error,
    bad_rational,
    empty_factors,
    parallel_lines,
    concurrent_triple,
    vertex_not_on_line,
    zero_direction,
    boundary_direction,
    degenerate_numerator,
    degenerate_denominator,
    zero_coefficient,
    too_few_rows,
    invalid_model,
    io_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace ratdiag
