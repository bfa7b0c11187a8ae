#include "lident/pi_algebra.hpp"

#include <sstream>

namespace lident {

std::string PiScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (k == 1)
      os << "*pi";
    else if (k > 1)
      os << "*pi^" << k;
  }
  return os.str();
}

std::string PiPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first == 1)
      os << "*x";
    else if (it->first > 1)
      os << "*x^" << it->first;
  }
  return os.str();
}

}  // namespace lident
