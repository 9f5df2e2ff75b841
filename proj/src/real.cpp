#include "ratdiag/real.hpp"

#include <sstream>

namespace ratdiag {

Real to_real(const Int& n) {
    if (n.fits_slong_p()) return Real(n.get_si());
    return Real(n.get_str());
}

Real to_real(const Rational& r) {
    return to_real(Int(r.get_num())) / to_real(Int(r.get_den()));
}

std::string format_real(const Real& x, int significant_digits) {
    std::ostringstream os;
    os.precision(significant_digits);
    os << x;
    return os.str();
}

} // namespace ratdiag
