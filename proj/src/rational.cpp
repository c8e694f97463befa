#include "wavemaps/rational.hpp"

#include <ostream>

namespace wavemaps {

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace wavemaps
