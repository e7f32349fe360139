#include "shellbound/exactpoly/rational.hpp"

#include "shellbound/errors.hpp"

namespace shellbound {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

bool fits_int64(const BigInt& v) {
  return v.fits_slong_p();
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw PreconditionError("integer exceeds 64 bits: " + v.get_str());
  return v.get_si();
}


}  // namespace shellbound
