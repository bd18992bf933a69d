#include "jpcount/common.hpp"

#include <algorithm>
#include <cmath>

namespace jp {

bool fits_fast_path(const BigInt& v) {
  if (sgn(v) < 0) return false;
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= kFastPathBits;
}

u128 to_u128(const BigInt& v) {
  BigInt high = v >> 64;
  BigInt low = v - (high << 64);
  return (u128(mpz_get_ui(high.get_mpz_t())) << 64) | mpz_get_ui(low.get_mpz_t());
}

BigInt to_bigint(u128 v) {
  BigInt high;
  mpz_set_ui(high.get_mpz_t(), uint64_t(v >> 64));
  BigInt out = high << 64;
  BigInt low;
  mpz_set_ui(low.get_mpz_t(), uint64_t(v));
  return out + low;
}

std::string decimal_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

IneqStatus check_le(double lhs, double rhs) {
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
  double margin = rhs - lhs;
  if (margin > kRelSlack * scale) return IneqStatus::Holds;
  if (margin < -kRelSlack * scale) return IneqStatus::Fails;
  return IneqStatus::Inconclusive;
}

double rel_margin(double lhs, double rhs) {
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
  return (rhs - lhs) / scale;
}

}  // namespace jp
