#include "swl/rational.hpp"

#include "swl/error.hpp"

namespace swl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw UsageError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw UsageError("bad rational '" + std::string(text) + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-") throw UsageError("bad rational '" + std::string(text) + "'");
    Integer num;
    if (num.set_str(digits, 10) != 0) throw UsageError("bad rational '" + std::string(text) + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  for (char c : s)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) throw UsageError("bad rational '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(s, 10) != 0) throw UsageError("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign_of(const Rational& q) { return sgn(q); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace swl
