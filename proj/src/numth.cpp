#include "gk/numth.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace gk::numth {

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
        sieve[j] = false;
    }
    return out;
  }();
  return table;
}

Integer powm(Integer base, Integer exp, const Integer& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned s) {
  Integer x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) { d >>= 1; ++s; }
  // Deterministic for n < 3.3e24; treated as deterministic for the sizes in
  // scope (see module notes).
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
    if (miller_rabin_witness(n, a, d, s)) return false;
  return true;
}

std::uint64_t default_factor_budget() {
  if (const char* s = std::getenv("GK_FACTOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

namespace {

Integer brent_rho(const Integer& n, std::uint64_t budget) {
  // Brent's cycle-finding variant of Pollard rho, fixed deterministic seeds.
  for (Integer c = 1; c < 64; ++c) {
    Integer x = 2, y = 2, d = 1;
    Integer ys = y, q = 1;
    std::uint64_t iter = 0;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * ((x > y) ? x - y : y - x) % n;
        }
        d = igcd(q, n);
        k += lim;
        iter += lim;
        if (iter > budget) throw FactorBudgetExceeded(n);
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack
      do {
        ys = (ys * ys + c) % n;
        d = igcd((x > ys) ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
  throw FactorBudgetExceeded(n);
}

void factor_rec(Integer n, std::uint64_t budget, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) { ++out[n]; return; }
  Integer d = brent_rho(n, budget);
  factor_rec(d, budget, out);
  factor_rec(n / d, budget, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(Integer n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<Integer, unsigned> acc;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > n) break;
    while (n % p == 0) { ++acc[p]; n /= p; }
  }
  if (n > 1) {
    if (is_prime(n)) ++acc[n];
    else factor_rec(n, budget, acc);
  }
  return {acc.begin(), acc.end()};
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  return factorize(std::move(n), default_factor_budget());
}

PrimePower PrimePower::decompose(const Integer& n) {
  if (n < 2) throw std::invalid_argument("prime power must be >= 2");
  auto fs = factorize(n);
  if (fs.size() != 1) throw std::invalid_argument("not a prime power");
  PrimePower pp;
  pp.p = fs[0].first;
  pp.alpha = fs[0].second;
  pp.q = n;
  return pp;
}

PrimePower PrimePower::make(const Integer& p, unsigned alpha) {
  if (alpha < 1) throw std::invalid_argument("exponent must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("base is not prime");
  PrimePower pp;
  pp.p = p;
  pp.alpha = alpha;
  pp.q = ipow(p, alpha);
  return pp;
}

unsigned mult_order(const Integer& r, const Integer& q) {
  if (r % 2 == 0) throw std::invalid_argument("mult_order: r must be odd");
  if (!is_prime(r)) throw std::invalid_argument("mult_order: r must be prime");
  if (q <= 1) throw std::invalid_argument("mult_order: q must be > 1");
  if (q % r == 0) throw std::invalid_argument("mult_order: r divides q");
  Integer m = r - 1;
  for (const auto& [f, mult] : factorize(r - 1)) {
    (void)mult;
    while (m % f == 0 && powm(q % r, m / f, r) == 1) m /= f;
  }
  return static_cast<unsigned>(m);
}

unsigned order_of_two(const Integer& q) {
  if (q % 2 == 0) throw std::invalid_argument("order_of_two: q must be odd");
  if (q <= 1) throw std::invalid_argument("order_of_two: q must be > 1");
  return q % 4 == 1 ? 1 : 2;
}

unsigned e_order(const Integer& r, const Integer& q) {
  return r == 2 ? order_of_two(q) : mult_order(r, q);
}

Integer cyclotomic_eval(unsigned m, const Integer& q) {
  if (m < 1) throw std::invalid_argument("cyclotomic_eval: m must be >= 1");
  if (q < 2) throw std::invalid_argument("cyclotomic_eval: q must be >= 2");
  static std::map<std::pair<unsigned, Integer>, Integer> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({m, q});
    if (it != cache.end()) return it->second;
  }
  Integer v = ipow(q, m) - 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) v /= cyclotomic_eval(d, q);
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(m, q), v);
  return v;
}

std::pair<Integer, Integer> r_share(const Integer& m, const Integer& r) {
  Integer s = 1, rest = m;
  while (rest % r == 0) { rest /= r; s *= r; }
  return {s, rest};
}

Integer greatest_primitive_divisor(unsigned m, const Integer& q) {
  if (m < 1 || q < 2) throw std::invalid_argument("greatest_primitive_divisor: bad args");
  if (m == 1) {
    if (q % 2 == 1 && q % 4 == 3) return (q - 1) / 2;
    return q - 1;
  }
  if (m == 2) {
    if (q % 2 == 1 && q % 4 == 1) return (q + 1) / 2;
    return q + 1;
  }
  Integer v = cyclotomic_eval(m, q);
  for (const auto& [r, mult] : factorize(Integer(m))) {
    (void)mult;
    auto [mr, mrp] = r_share(Integer(m), r);
    (void)mr;
    v /= igcd(cyclotomic_eval(static_cast<unsigned>(mrp), q), r);
  }
  return v;
}

bool class_nonempty(unsigned m, const Integer& q) {
  bool computed = greatest_primitive_divisor(m, q) > 1;
  bool zsig = !((q == 2 && m == 1) || (q == 3 && m == 1) || (q == 2 && m == 6));
  if (computed != zsig)
    throw std::logic_error("class_nonempty: k_m route disagrees with Zsigmondy exception list");
  return computed;
}

std::vector<Integer> primitive_primes(unsigned m, const Integer& q, std::uint64_t budget) {
  Integer k = greatest_primitive_divisor(m, q);
  std::vector<Integer> out;
  for (const auto& [r, mult] : factorize(k, budget)) {
    (void)mult;
    if (e_order(r, q) != m)
      throw std::logic_error("primitive_primes: factor fails order certification");
    out.push_back(r);
  }
  return out;
}

std::vector<Integer> primitive_primes(unsigned m, const Integer& q) {
  return primitive_primes(m, q, default_factor_budget());
}

unsigned nu(unsigned m) {
  if (m % 4 == 0) return m;
  if (m % 2 == 0) return m / 2;
  return 2 * m;
}

unsigned nu_eps(unsigned m, int eps) { return eps == 1 ? m : nu(m); }

unsigned eta(unsigned m) { return m % 2 == 1 ? m : m / 2; }

unsigned suzuki_ree_count(SRFamily f) {
  switch (f) {
    case SRFamily::Sz2B2: return 3;
    case SRFamily::Ree2G2: return 4;
    case SRFamily::Ree2F4: return 6;
  }
  return 0;
}

Integer suzuki_ree_divisor(SRFamily f, unsigned n, unsigned i) {
  if (n < 1) throw std::invalid_argument("suzuki_ree_divisor: n must be >= 1");
  if (i < 1 || i > suzuki_ree_count(f))
    throw std::invalid_argument("suzuki_ree_divisor: index out of range for family");
  const Integer two = 2, three = 3;
  switch (f) {
    case SRFamily::Sz2B2: {
      Integer q = ipow(two, 2 * n + 1), s = ipow(two, n + 1);
      if (i == 1) return q - 1;
      if (i == 2) return q - s + 1;
      return q + s + 1;
    }
    case SRFamily::Ree2G2: {
      Integer q = ipow(three, 2 * n + 1), s = ipow(three, n + 1);
      if (i == 1) return q - 1;
      if (i == 2) return q + 1;
      if (i == 3) return q - s + 1;
      return q + s + 1;
    }
    case SRFamily::Ree2F4: {
      Integer q = ipow(two, 2 * n + 1), s = ipow(two, n + 1);
      if (i == 1) return q - 1;
      if (i == 2) return q + 1;
      if (i == 3) return q * q + 1;
      if (i == 4) return q * q - q + 1;
      if (i == 5) return q * q - q * s + q - s + 1;
      return q * q + q * s + q + s + 1;
    }
  }
  throw std::logic_error("unreachable");
}

Integer suzuki_ree_class_core(SRFamily f, unsigned n, unsigned i) {
  Integer m = suzuki_ree_divisor(f, n, i);
  Integer excluded = f == SRFamily::Ree2G2 ? 2 : f == SRFamily::Ree2F4 ? 3 : 0;
  if (excluded != 0)
    while (m % excluded == 0) m /= excluded;
  return m;
}

std::vector<Integer> suzuki_ree_class(SRFamily f, unsigned n, unsigned i) {
  Integer core = suzuki_ree_class_core(f, n, i);
  std::vector<Integer> out;
  for (const auto& [r, mult] : factorize(core)) {
    (void)mult;
    out.push_back(r);
  }
  return out;
}

}  // namespace gk::numth
