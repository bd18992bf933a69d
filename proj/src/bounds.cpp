#include "jpcount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "jpcount/jordan_polya.hpp"

namespace jp {

namespace {

constexpr double kEE = 15.154262241479262;  // e^e

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

SmoothCounter::SmoothCounter(uint64_t x_cap, uint64_t sieve_budget)
    : x_cap_(x_cap), sieve_budget_(sieve_budget) {}

uint64_t SmoothCounter::psi(uint64_t x, uint64_t y) {
  if (x < 1 || y < 1) throw std::invalid_argument("psi requires x >= 1, y >= 1");
  if (x > x_cap_) {
    throw ResourceLimitError("psi x=" + std::to_string(x) + " exceeds cap " +
                             std::to_string(x_cap_));
  }
  // Primes beyond x never divide an n <= x, so y can be clamped to x; with
  // y >= x every n <= x qualifies.
  if (y >= x) return x;
  if (sieved_to_ < y) {
    sieved_to_ = std::max<uint64_t>(y, 16);
    primes_ = sieve(sieved_to_, sieve_budget_).primes();
  }
  auto it = std::upper_bound(primes_.begin(), primes_.end(), y);
  return rec(x, uint64_t(it - primes_.begin()));
}

uint64_t SmoothCounter::rec(uint64_t x, uint64_t j) {
  if (x == 0) return 0;
  // Clamp to the primes that can actually divide some n <= x.
  auto it = std::upper_bound(primes_.begin(), primes_.begin() + j, x);
  j = uint64_t(it - primes_.begin());
  if (j == 0) return 1;  // n = 1 only

  uint64_t key = (x << 27) | j;
  auto found = memo_.find(key);
  if (found != memo_.end()) return found->second;

  // Psi(x, j) = 1 + sum_{i<=j} Psi(x / p_i, i): split on the smallest prime
  // actually used. Each subcall shrinks x by at least a factor 2, so the
  // recursion depth stays logarithmic.
  uint64_t total = 1;
  for (uint64_t i = 1; i <= j; ++i) total += rec(x / primes_[i - 1], i);

  memo_.emplace(key, total);
  return total;
}

uint64_t psi(uint64_t x, uint64_t y) {
  SmoothCounter counter;
  return counter.psi(x, y);
}

AuditReport audit_granville(uint64_t x, uint64_t y) {
  AuditReport report{.name = "granville x=" + std::to_string(x) + " y=" + std::to_string(y)};
  SmoothCounter counter;
  uint64_t count = counter.psi(x, y);
  report.note("psi(x,y) = " + std::to_string(count));

  double log_x = std::log(double(x));
  uint64_t pi_y = y >= 2 ? sieve(y).primes().size() : 0;
  if (pi_y == 0 || log_x <= double(y)) {
    report.note("out of asymptotic regime (needs log x > e*y); no ratio asserted");
    if (pi_y == 0) return report;
  } else if (log_x <= std::exp(1.0) * double(y)) {
    report.note("out of asymptotic regime (needs log x > e*y)");
  }
  double denom = double(pi_y) * std::log(log_x / double(y));
  if (denom > 0.0 && count > 0) {
    std::ostringstream os;
    os << "log psi / (pi(y) log(log x / y)) = " << std::log(double(count)) / denom;
    report.note(os.str());
  } else {
    report.note("ratio undefined at these arguments");
  }
  return report;
}

namespace {

uint64_t ennola_rec(const std::vector<double>& weights, std::size_t idx, double budget,
                    uint64_t cap) {
  if (budget < 0.0) return 0;  // rounding at a tie boundary can land here
  if (idx == 0) return 1;
  double a = weights[idx - 1];
  uint64_t t_max = uint64_t(std::floor(budget / a));
  uint64_t total = 0;
  for (uint64_t t = 0; t <= t_max; ++t) {
    total += ennola_rec(weights, idx - 1, budget - double(t) * a, cap);
    if (total > cap) {
      throw ResourceLimitError("lattice count exceeds cap of " + std::to_string(cap));
    }
  }
  return total;
}

}  // namespace

uint64_t ennola_count(const LatticeInstance& instance, uint64_t cap) {
  if (instance.weights.empty()) throw std::invalid_argument("instance needs k >= 1 weights");
  for (double a : instance.weights) {
    if (!(a > 0.0)) throw std::invalid_argument("weights must be positive");
  }
  if (instance.budget < 0.0) return 0;
  return ennola_rec(instance.weights, instance.weights.size(), instance.budget, cap);
}

AuditReport audit_ennola(const LatticeInstance& instance) {
  AuditReport report{.name = "ennola k=" + std::to_string(instance.weights.size()) +
                             " z=" + fmt(instance.budget)};
  uint64_t n = ennola_count(instance);

  double k = double(instance.weights.size());
  double log_kfact = 0.0;
  for (double i = 2; i <= k; ++i) log_kfact += std::log(i);
  double log_prod = 0.0;
  double weight_sum = 0.0;
  for (double a : instance.weights) {
    log_prod += std::log(a);
    weight_sum += a;
  }
  double lower = instance.budget > 0.0
                     ? std::exp(k * std::log(instance.budget) - log_kfact - log_prod)
                     : 0.0;
  double upper = std::exp(k * std::log(instance.budget + weight_sum) - log_kfact - log_prod);

  report.note("lower " + fmt(lower) + " < N = " + std::to_string(n) + " <= upper " +
              fmt(upper));
  report.require_le(lower, double(n), "lower bound violated");
  report.require_le(double(n), upper, "upper bound violated");
  return report;
}

AuditReport audit_ennola_suite(uint32_t instances, uint64_t seed) {
  AuditReport report{.name = "ennola-suite n=" + std::to_string(instances)};

  LatticeInstance pinned{.weights = {1.0, 1.0}, .budget = 2.0};
  if (ennola_count(pinned) != 6) {
    report.fail("N_2(2) with unit weights != 6");
    return report;
  }
  AuditReport sub = audit_ennola(pinned);
  if (!sub.pass) {
    report.fail("pinned instance: " + sub.failure);
    return report;
  }
  // Degenerate budget: only the zero tuple.
  LatticeInstance tiny{.weights = {1.0, 2.0, 3.0}, .budget = 1e-9};
  if (ennola_count(tiny) != 1 || !audit_ennola(tiny).pass) {
    report.fail("near-zero budget instance failed");
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(1, 5);
  std::uniform_int_distribution<int> quarters(1, 12);  // rational weights in [0.25, 3]
  for (uint32_t i = 0; i < instances; ++i) {
    LatticeInstance inst;
    int k = k_dist(rng);
    double max_w = 0.0;
    for (int j = 0; j < k; ++j) {
      double w = quarters(rng) / 4.0;
      inst.weights.push_back(w);
      max_w = std::max(max_w, w);
    }
    std::uniform_real_distribution<double> budget_dist(max_w, 10.0);
    inst.budget = budget_dist(rng);
    AuditReport one = audit_ennola(inst);
    if (!one.pass) {
      report.fail("instance " + std::to_string(i) + ": " + one.failure);
      return report;
    }
  }
  report.note("two-sided bound held on all " + std::to_string(instances) +
              " randomized instances and the pinned cases");
  return report;
}

ThresholdSet thresholds(double L, uint64_t sieve_budget) {
  if (!(L > kEE)) throw std::domain_error("thresholds require L > e^e");
  double log_l = std::log(L);
  double sqrt_l = std::sqrt(L);
  double args[4] = {2.0 * L / log_l, sqrt_l / log_l, sqrt_l, sqrt_l * log_l};
  double max_arg = *std::max_element(args, args + 4);
  PrimeTable table = sieve(uint64_t(max_arg) + 1, sieve_budget);
  return ThresholdSet{
      .L = L,
      .r = table.count_upto(uint64_t(args[0])),
      .r1 = table.count_upto(uint64_t(args[1])),
      .r2 = table.count_upto(uint64_t(args[2])),
      .r3 = table.count_upto(uint64_t(args[3])),
  };
}

double floor_ratio_sum(uint64_t k, const PrimeTable& table) {
  uint64_t pk = table.nth(k);
  double sum = 0.0;
  for (uint64_t j = 1; j <= k; ++j) {
    uint64_t pj = table.nth(j);
    sum += double(pk / pj) * std::log(double(pj));
  }
  return sum;
}

double floor_ratio_sum(uint64_t k) {
  if (k == 0) throw std::invalid_argument("floor_ratio_sum requires k >= 1");
  double bound = 30.0;
  if (k >= 6) {
    double dk = double(k);
    bound = dk * (std::log(dk) + std::log(std::log(dk))) * 1.2 + 100.0;
  }
  PrimeTable table = sieve(uint64_t(bound));
  return floor_ratio_sum(k, table);
}

namespace {

struct ProofStep {
  const char* label;
  // pi threshold argument and the (1/3)-target, both as functions of L.
  double (*threshold_arg)(double);
  double (*target)(double);
  double scan_max;
};

double b2_arg(double L) { return std::sqrt(L) / std::log(L); }
double b2_target(double L) { return std::sqrt(L) / 3.0; }
double b3_arg(double L) { return std::sqrt(L); }
double b3_target(double L) { return std::sqrt(L) * std::log(L) / 3.0; }
double b4_arg(double L) { return std::sqrt(L) * std::log(L); }
double b4_target(double L) { return std::sqrt(L) * std::log(L) * std::log(L) / 3.0; }

}  // namespace

AuditReport audit_proof_sums(double L, const ProofSumOptions& options) {
  AuditReport report{.name = "proof-sums L=" + fmt(L)};
  if (!(L > kEE)) throw std::domain_error("proof-sums audit requires L > e^e");

  const ProofStep steps[3] = {
      {"B2", b2_arg, b2_target, options.scan_max_b2},
      {"B3", b3_arg, b3_target, options.scan_max_b3},
      {"B4", b4_arg, b4_target, options.scan_max_b4},
  };

  // One shared table covering every threshold the audit and its scans touch.
  double max_arg = std::max(b4_arg(L), double(options.mertens_y));
  for (const ProofStep& step : steps) {
    max_arg = std::max(max_arg, step.threshold_arg(step.scan_max));
  }
  PrimeTable table = sieve(uint64_t(max_arg) + 1);

  auto step_holds = [&](const ProofStep& step, double at) {
    uint64_t r = table.count_upto(uint64_t(step.threshold_arg(at)));
    if (r == 0) return IneqStatus::Fails;
    return check_le(step.target(at), floor_ratio_sum(r, table));
  };

  ThresholdSet ts{};
  ts.L = L;
  ts.r1 = table.count_upto(uint64_t(b2_arg(L)));
  ts.r2 = table.count_upto(uint64_t(b3_arg(L)));
  ts.r3 = table.count_upto(uint64_t(b4_arg(L)));
  double log_l = std::log(L);
  report.note("r1=" + std::to_string(ts.r1) + " (~" + fmt(2.0 * std::sqrt(L) / (log_l * log_l)) +
              "), r2=" + std::to_string(ts.r2) + " (~" + fmt(2.0 * std::sqrt(L) / log_l) +
              "), r3=" + std::to_string(ts.r3) + " (~" + fmt(2.0 * std::sqrt(L)) + ")");

  for (const ProofStep& step : steps) {
    uint64_t r = table.count_upto(uint64_t(step.threshold_arg(L)));
    double sum = r > 0 ? floor_ratio_sum(r, table) : 0.0;
    double target = step.target(L);
    IneqStatus at_input = r > 0 ? check_le(target, sum) : IneqStatus::Fails;
    std::string line = std::string(step.label) + " at input L: sum=" + fmt(sum) +
                       " target=" + fmt(target);
    line += at_input == IneqStatus::Holds ? " (holds)" : " (below crossover)";
    report.note(line);

    // These inequalities only kick in for large x, so scan a log-spaced grid
    // for the first L where each holds; below that nothing is asserted.
    bool found = false;
    for (double e10 = 1.25; std::pow(10.0, e10) <= step.scan_max; e10 += 0.25) {
      double lg = std::pow(10.0, e10);
      if (lg <= kEE) continue;
      if (step_holds(step, lg) == IneqStatus::Holds) {
        report.note(std::string(step.label) + " crossover on grid near L=" + fmt(lg));
        found = true;
        break;
      }
    }
    if (!found) {
      report.fail(std::string(step.label) + " never held on the scanned grid (max " +
                  fmt(step.scan_max) + ")");
    }
  }

  // Mertens-type sum: sum_{p<=y} log p / p > (1 - eps) log y.
  double y = options.mertens_y;
  double mertens = 0.0;
  for (uint64_t p : table.primes()) {
    if (double(p) > y) break;
    mertens += std::log(double(p)) / double(p);
  }
  double mertens_target = (1.0 - options.mertens_epsilon) * std::log(y);
  report.note("mertens sum at y=" + fmt(y) + ": " + fmt(mertens) + " vs (1-eps) log y = " +
              fmt(mertens_target));
  report.require_le(mertens_target, mertens, "mertens sum below (1-eps) log y");
  return report;
}

BoundEval bound_eval(double L, double epsilon) {
  if (!(L > std::exp(1.0))) throw std::domain_error("bound_eval requires L > e");
  if (!(epsilon >= 0.0 && epsilon < 2.0)) {
    throw std::invalid_argument("bound_eval requires 0 <= epsilon < 2");
  }
  double log_l = std::log(L);
  double sqrt_l = std::sqrt(L);
  return BoundEval{
      .L = L,
      .epsilon = epsilon,
      .log_upper = (4.0 + epsilon) * sqrt_l * std::log(log_l) / log_l,
      .log_lower = (2.0 - epsilon) * sqrt_l / log_l,
  };
}

namespace {

double optimizer_g(double s, double log_l) {
  double ls = std::log(s);
  return s * (1.0 + 1.0 / ls + log_l - 2.0 * ls - 2.0 * std::log(ls));
}

}  // namespace

OptimizerResult optimize_lower_bound(double L) {
  if (!(L > kEE)) throw std::domain_error("optimizer requires L > e^e");
  double target = std::sqrt(L);

  // s log s is increasing for s > 1/e; bracket and bisect.
  double lo = 2.0;
  double hi = std::max(3.0, target);
  if (lo * std::log(lo) > target) throw std::domain_error("target below bracket");
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (mid * std::log(mid) < target ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  if (std::fabs(s * std::log(s) - target) > 1e-10 * target) {
    throw ConvergenceError("root solve for s log s = sqrt(L) did not converge");
  }

  double log_l = std::log(L);
  OptimizerResult result;
  result.s = s;
  result.log_f = optimizer_g(s, log_l);
  result.g_minus = optimizer_g(0.99 * s, log_l);
  result.g_plus = optimizer_g(1.01 * s, log_l);
  result.local_max_ok = check_le(result.g_minus, result.log_f) != IneqStatus::Fails &&
                        check_le(result.g_plus, result.log_f) != IneqStatus::Fails;
  return result;
}

AuditReport audit_jp_prime_lower(const BigInt& x, uint32_t k) {
  AuditReport report{.name = "jp-prime-lower x=" + x.get_str() + " k=" + std::to_string(k)};
  if (k < 1) throw std::invalid_argument("audit requires k >= 1");

  uint64_t count = count_jordan_polya(x, Family::PrimeFactorial);

  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  double L = std::log(mant) + double(exp2) * 0.6931471805599453;

  double bound = k >= 6 ? double(k) * (std::log(double(k)) + std::log(std::log(double(k)))) * 1.2 + 100.0
                        : 30.0;
  PrimeTable table = sieve(uint64_t(bound));
  double log_rhs = double(k) * std::log(L);
  for (double i = 2; i <= double(k); ++i) log_rhs -= std::log(i);
  BigInt fact;
  for (uint64_t j = 1; j <= k; ++j) {
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(table.nth(j)));
    double fmant = mpz_get_d_2exp(&exp2, fact.get_mpz_t());
    double log_fact = std::log(fmant) + double(exp2) * 0.6931471805599453;
    log_rhs -= std::log(log_fact);
  }
  double rhs = std::exp(log_rhs);

  report.note("exact count " + std::to_string(count) + " vs lower bound " + fmt(rhs));
  report.require_le(rhs, double(count), "exact count does not exceed the bound");

  return report;
}

}  // namespace jp
