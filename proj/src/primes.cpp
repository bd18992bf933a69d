#include "jpcount/primes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jp {

PrimeTable::PrimeTable(uint64_t limit, uint64_t budget) : limit_(limit) {
  if (limit > budget) {
    throw ResourceLimitError("sieve limit " + std::to_string(limit) +
                             " exceeds budget " + std::to_string(budget));
  }
  if (limit < 2) return;

  // Odds-only Eratosthenes; bit k represents 2k+1.
  uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> odd(half, true);
  odd[0] = false;  // 1
  for (uint64_t k = 1; (2 * k + 1) * (2 * k + 1) <= limit; ++k) {
    if (!odd[k]) continue;
    uint64_t p = 2 * k + 1;
    for (uint64_t s = (p * p) / 2; s < half; s += p) odd[s] = false;
  }
  primes_.push_back(2);
  for (uint64_t k = 1; k < half; ++k) {
    if (odd[k]) primes_.push_back(2 * k + 1);
  }
}

uint64_t PrimeTable::count_upto(uint64_t x) const {
  if (x > limit_) {
    throw std::out_of_range("count_upto(" + std::to_string(x) +
                            ") beyond table limit " + std::to_string(limit_));
  }
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return uint64_t(it - primes_.begin());
}

uint64_t PrimeTable::nth(uint64_t k) const {
  if (k == 0 || k > primes_.size()) {
    throw std::out_of_range("nth(" + std::to_string(k) + ") out of table");
  }
  return primes_[k - 1];
}

bool PrimeTable::contains(uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeTable sieve(uint64_t limit, uint64_t budget) { return PrimeTable(limit, budget); }

uint64_t legendre_exponent(uint64_t m, uint64_t p) {
  // Sum of floor(m / p^i), looping by dividing m so p^i is never formed.
  uint64_t total = 0;
  uint64_t t = m;
  while (t > 0) {
    t /= p;
    total += t;
  }
  return total;
}

uint64_t ExponentVector::exponent(uint64_t p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, uint64_t v) { return e.first < v; });
  if (it == entries_.end() || it->first != p) return 0;
  return it->second;
}

uint64_t ExponentVector::max_prime() const { return entries_.back().first; }

BigInt ExponentVector::value() const {
  BigInt out = 1;
  BigInt pw;
  for (const auto& [p, e] : entries_) {
    mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
    out *= pw;
  }
  return out;
}

void ExponentVector::push(uint64_t p, uint64_t e) {
  if (e == 0) return;
  if (!entries_.empty() && entries_.back().first >= p) {
    throw std::invalid_argument("ExponentVector entries must be pushed in prime order");
  }
  entries_.emplace_back(p, e);
}

void ExponentVector::multiply(const ExponentVector& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void ExponentVector::raise(uint64_t k) {
  if (k == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= k;
}

bool ExponentVector::divisible_by(const ExponentVector& d) const {
  auto a = entries_.begin();
  for (const auto& [p, e] : d.entries_) {
    while (a != entries_.end() && a->first < p) ++a;
    if (a == entries_.end() || a->first != p || a->second < e) return false;
  }
  return true;
}

ExponentVector ExponentVector::divided_by(const ExponentVector& d) const {
  ExponentVector out;
  auto b = d.entries_.begin();
  for (const auto& [p, e] : entries_) {
    uint64_t sub = 0;
    while (b != d.entries_.end() && b->first < p) {
      throw std::invalid_argument("divided_by: not divisible");
    }
    if (b != d.entries_.end() && b->first == p) {
      sub = b->second;
      ++b;
    }
    if (sub > e) throw std::invalid_argument("divided_by: not divisible");
    if (e - sub > 0) out.push(p, e - sub);
  }
  if (b != d.entries_.end()) throw std::invalid_argument("divided_by: not divisible");
  return out;
}

ExponentVector factorial_exponents(uint64_t m) {
  ExponentVector out;
  if (m < 2) return out;
  PrimeTable table = sieve(m);
  for (uint64_t p : table.primes()) out.push(p, legendre_exponent(m, p));
  return out;
}

BigInt simplex_count(uint64_t k, uint64_t r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), k + r, r);
  return out;
}

double theta(uint64_t x, const PrimeTable& table) {
  if (x > table.limit()) {
    throw std::out_of_range("theta argument beyond table limit");
  }
  double sum = 0.0;
  for (uint64_t p : table.primes()) {
    if (p > x) break;
    sum += std::log(double(p));
  }
  return sum;
}

namespace {

std::string pair_str(uint64_t p, uint64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

AuditReport audit_exponent_ratio(uint64_t m) {
  AuditReport report{.name = "exponent-ratio m=" + std::to_string(m)};
  if (m < 3) {
    report.fail("requires m >= 3");
    return report;
  }
  ExponentVector fv = factorial_exponents(m);
  const auto& entries = fv.entries();
  uint64_t pairs = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      auto [p, ap] = entries[i];
      auto [q, aq] = entries[j];
      ++pairs;
      // Integer cross-multiplied form: alpha_p >= floor(q/p) * alpha_q.
      if (ap < (q / p) * aq) {
        report.fail("pair " + pair_str(p, q) + ": alpha_p=" + std::to_string(ap) +
                    " < floor(q/p)*alpha_q=" + std::to_string((q / p) * aq));
        return report;
      }
    }
  }
  report.note(std::to_string(pairs) + " prime pairs checked, no violation");
  return report;
}

AuditReport audit_rosser(uint64_t k_max) {
  AuditReport report{.name = "rosser k_max=" + std::to_string(k_max)};
  if (k_max < 6) {
    report.fail("requires k_max >= 6");
    return report;
  }
  // Sieve past p_{k_max} using the very bound under audit, with headroom.
  double bound = double(k_max) * (std::log(double(k_max)) + std::log(std::log(double(k_max))));
  PrimeTable table = sieve(uint64_t(bound * 1.2) + 100);
  if (table.primes().size() < k_max) {
    report.fail("sieve produced too few primes");
    return report;
  }
  double min_upper_margin = 1e300;
  double min_lower_margin = 1e300;
  for (uint64_t k = 1; k <= k_max; ++k) {
    double pk = double(table.nth(k));
    double lk = std::log(double(k));
    double lower = double(k) * lk;  // k log k; 0 at k = 1
    if (!(pk > lower)) {
      report.fail("p_" + std::to_string(k) + " <= k log k");
      return report;
    }
    min_lower_margin = std::min(min_lower_margin, pk - lower);
    if (k >= 6) {
      double upper = double(k) * lk + double(k) * std::log(lk);
      if (!(pk < upper)) {
        report.fail("p_" + std::to_string(k) + " >= k log k + k log log k");
        return report;
      }
      min_upper_margin = std::min(min_upper_margin, upper - pk);
    }
  }
  std::ostringstream os;
  os << "min margin below upper bound: " << min_upper_margin
     << ", min margin above lower bound: " << min_lower_margin;
  report.note(os.str());
  return report;
}

AuditReport audit_stirling(uint64_t n_max) {
  AuditReport report{.name = "stirling n_max=" + std::to_string(n_max)};
  if (n_max < 2) {
    report.fail("requires n_max >= 2");
    return report;
  }
  constexpr double kLog2 = 0.6931471805599453;
  BigInt fact = 1;
  double prev_err = 1e300;
  double err_at_100 = -1.0;
  double err = 0.0;
  for (uint64_t n = 1; n <= n_max; ++n) {
    fact *= n;
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, fact.get_mpz_t());
    double log_fact = std::log(mant) + double(exp2) * kLog2;

    double ln_n = std::log(double(n));
    double weak = double(n) * (ln_n - 1.0);  // log of (n/e)^n
    if (check_le(weak, log_fact) == IneqStatus::Fails) {
      report.fail("n! <= (n/e)^n at n=" + std::to_string(n));
      return report;
    }
    if (n < 2) continue;

    double log_approx = weak + 0.5 * std::log(2.0 * M_PI * double(n)) +
                        std::log1p(1.0 / (12.0 * double(n)));
    err = std::fabs(std::expm1(log_approx - log_fact));
    // Error must shrink as n grows (tiny slack so FP noise at large n cannot
    // flag a genuinely non-increasing sequence).
    if (err > prev_err * (1.0 + 1e-3) + 1e-12) {
      report.fail("approximation error grew at n=" + std::to_string(n));
      return report;
    }
    prev_err = err;
    if (n == 100) err_at_100 = err;
  }
  if (n_max >= 100) {
    if (!(err_at_100 < 1e-3)) {
      report.fail("relative error at n=100 not below 1e-3");
      return report;
    }
    std::ostringstream os;
    os << "relative error at n=100: " << err_at_100;
    report.note(os.str());
  }
  std::ostringstream os;
  os << "relative error at n=" << n_max << ": " << err;
  report.note(os.str());
  return report;
}

AuditReport audit_binomial_bound(uint64_t max_ab) {
  AuditReport report{.name = "binomial-bound max=" + std::to_string(max_ab)};
  for (uint64_t a = 1; a <= max_ab; ++a) {
    for (uint64_t b = 1; b <= max_ab; ++b) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), a + b, a);
      signed long exp2;
      double mant = mpz_get_d_2exp(&exp2, binom.get_mpz_t());
      double log_binom = std::log(mant) + double(exp2) * 0.6931471805599453;
      double log_bound = double(a) * (1.0 + std::log(double(a + b)) - std::log(double(a)));
      if (check_le(log_binom, log_bound) == IneqStatus::Fails) {
        report.fail("C(a+b,a) > (e(a+b)/a)^a at a=" + std::to_string(a) +
                    " b=" + std::to_string(b));
        return report;
      }
    }
  }
  report.note("binomial bound holds on the full grid");
  return report;
}

namespace {

uint64_t count_tuples(uint64_t k, uint64_t r) {
  if (k == 0) return 1;  // the empty tuple
  uint64_t total = 0;
  for (uint64_t first = 0; first <= r; ++first) total += count_tuples(k - 1, r - first);
  return total;
}

}  // namespace

uint64_t simplex_count_bruteforce(uint64_t k, uint64_t r) { return count_tuples(k, r); }

AuditReport audit_simplex(uint64_t k_max, uint64_t r_max) {
  AuditReport report{.name = "simplex k<=" + std::to_string(k_max) +
                             " r<=" + std::to_string(r_max)};
  for (uint64_t k = 1; k <= k_max; ++k) {
    for (uint64_t r = 0; r <= r_max; ++r) {
      BigInt expected(std::to_string(simplex_count_bruteforce(k, r)));
      if (simplex_count(k, r) != expected) {
        report.fail("mismatch at k=" + std::to_string(k) + " r=" + std::to_string(r));
        return report;
      }
    }
  }
  report.note("matches brute-force tuple enumeration on the full grid");
  return report;
}

}  // namespace jp
