#include "betti/ratio.hpp"

namespace betti {

std::string ratio_string(const mpq_class& q) { return q.get_str(); }

std::string decimal_string(const mpq_class& q, int significant_digits) {
  if (q == 0) return "0.0";
  mpz_class a = abs(q.get_num());
  mpz_class b = q.get_den();
  mpz_class integer_part = a / b;

  long frac_digits;
  if (integer_part > 0) {
    long int_digits = static_cast<long>(integer_part.get_str().size());
    frac_digits = std::max<long>(significant_digits - int_digits, 1);
  } else {
    long leading_zeros = 0;
    mpz_class t = a * 10;
    while (t / b == 0) {
      t *= 10;
      ++leading_zeros;
    }
    frac_digits = leading_zeros + significant_digits;
  }

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  mpz_class scaled = (a * pow10 * 2 + b) / (2 * b); // round half up

  std::string s = scaled.get_str();
  if (static_cast<long>(s.size()) <= frac_digits)
    s.insert(0, static_cast<std::size_t>(frac_digits + 1 - static_cast<long>(s.size())), '0');
  s.insert(s.size() - static_cast<std::size_t>(frac_digits), ".");

  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;
  s.erase(last + 1);
  if (q < 0) s.insert(0, "-");
  return s;
}

} // namespace betti
