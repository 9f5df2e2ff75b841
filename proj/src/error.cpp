#include "ratdiag/error.hpp"

namespace ratdiag {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::bad_rational: return "BadRational";
    case Errc::empty_factors: return "EmptyFactors";
    case Errc::parallel_lines: return "ParallelLines";
    case Errc::concurrent_triple: return "ConcurrentTriple";
    case Errc::vertex_not_on_line: return "VertexNotOnLine";
    case Errc::zero_direction: return "ZeroDirection";
    case Errc::boundary_direction: return "BoundaryDirection";
    case Errc::degenerate_numerator: return "DegenerateNumerator";
    case Errc::degenerate_denominator: return "DegenerateDenominator";
    case Errc::zero_coefficient: return "ZeroCoefficient";
    case Errc::too_few_rows: return "TooFewRows";
    case Errc::invalid_model: return "InvalidModel";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace ratdiag
