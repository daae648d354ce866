#include "polycone/rational.hpp"

#include <ostream>

namespace polycone {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace polycone
