#include "checker/rational.hpp"

#include "checker/error.hpp"

namespace checker {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0 || r.get_den() == 0)
    throw SchemaError("not a rational number: \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

Rational factorial(std::uint64_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational falling_factorial(std::uint64_t k, std::uint64_t j) {
  if (j > k) return 0;
  mpz_class f = 1;
  for (std::uint64_t i = 0; i < j; ++i) f *= (k - i);
  return Rational(f);
}

Rational binomial(std::uint64_t k, std::uint64_t j) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), k, j);
  return Rational(b);
}

}  // namespace checker
