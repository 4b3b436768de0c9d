#include "excedance/combinatorics.hpp"

namespace excedance {

Integer binomial(std::uint32_t n, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(n)) {
    return Integer(0);
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Integer factorial(std::uint32_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Integer(std::move(r));
}

} // namespace excedance
