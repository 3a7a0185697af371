#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gk/integer.hpp"

namespace gk::numth {

// A certified prime power q = p^alpha.
struct PrimePower {
  Integer p;
  unsigned alpha = 0;
  Integer q;

  // Decomposes n into p^alpha; throws std::invalid_argument if n is not a
  // prime power >= 2.
  static PrimePower decompose(const Integer& n);
  static PrimePower make(const Integer& p, unsigned alpha);

  bool operator==(const PrimePower& o) const { return q == o.q; }
};

class FactorBudgetExceeded : public std::runtime_error {
 public:
  Integer cofactor;
  explicit FactorBudgetExceeded(Integer c)
      : std::runtime_error("factorization budget exceeded"), cofactor(std::move(c)) {}
};

// Deterministic for the sizes in scope (Miller-Rabin with fixed witness set,
// certain below 3.3e24; the larger cofactors met here are far below the sizes
// where that matters for Brent-rho splitting to make progress).
bool is_prime(const Integer& n);

// Prime factorization: trial division to 1e6, then Miller-Rabin, then Brent's
// rho with fixed seed. `budget` caps rho iterations per composite
// (default from GK_FACTOR_BUDGET env or 1e7). Returns (prime, multiplicity)
// pairs sorted by prime; throws FactorBudgetExceeded on exhaustion.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);
std::vector<std::pair<Integer, unsigned>> factorize(Integer n, std::uint64_t budget);
std::uint64_t default_factor_budget();

// e(r,q) for an odd prime r coprime to q: least m with q^m = 1 (mod r).
// Computed by factoring r-1 and descending through prime divisors.
unsigned mult_order(const Integer& r, const Integer& q);

// e(2,q) for odd q: 1 if q = 1 (mod 4), else 2.
unsigned order_of_two(const Integer& q);

// e(r,q) with the convention above applied at r = 2.
unsigned e_order(const Integer& r, const Integer& q);

// Exact value of the m-th cyclotomic polynomial at q >= 2, via the divisor
// recurrence prod_{d|m} phi_d(q) = q^m - 1 with exact division. Memoized.
Integer cyclotomic_eval(unsigned m, const Integer& q);

// (m_r, m_{r'}): largest power of r dividing m, and the cofactor.
std::pair<Integer, Integer> r_share(const Integer& m, const Integer& r);

// Greatest primitive divisor k_m(q) of q^m - 1 under the e(2,q) convention:
//   m = 1: (q-1)/2 if q = 3 (mod 4), else q-1
//   m = 2: (q+1)/2 if q = 1 (mod 4), else q+1
//   m >= 3: phi_m(q) / prod_{r in pi(m)} gcd(phi_{m_{r'}}(q), r)
Integer greatest_primitive_divisor(unsigned m, const Integer& q);

// R_m(q) != {} <=> k_m(q) > 1. Also recomputes the answer from the Zsigmondy
// exception list {(2,1),(3,1),(2,6)} and asserts both routes agree.
bool class_nonempty(unsigned m, const Integer& q);

// R_m(q): the primes dividing k_m(q), each certified to have e(r,q) = m.
std::vector<Integer> primitive_primes(unsigned m, const Integer& q);
std::vector<Integer> primitive_primes(unsigned m, const Integer& q, std::uint64_t budget);

// Index transforms between linear and unitary numbering and the half-index
// arithmetic of symplectic/orthogonal groups.
unsigned nu(unsigned m);
unsigned nu_eps(unsigned m, int eps);  // eps in {+1,-1}
unsigned eta(unsigned m);

// Suzuki/Ree divisor splittings m_i of q^k - 1 style factors.
enum class SRFamily { Sz2B2, Ree2G2, Ree2F4 };

// Number of m_i entries for the family: 3 / 4 / 6.
unsigned suzuki_ree_count(SRFamily f);

// m_i(-, n) for the group over the field of order 2^(2n+1) resp. 3^(2n+1).
Integer suzuki_ree_divisor(SRFamily f, unsigned n, unsigned i);

// S_i(G): pi(m_i), minus {2} for 2G2, minus {3} for 2F4.
std::vector<Integer> suzuki_ree_class(SRFamily f, unsigned n, unsigned i);

// m_i with the family's excluded prime divided out; S_i is empty iff this
// is 1. Used for nonemptiness without factoring.
Integer suzuki_ree_class_core(SRFamily f, unsigned n, unsigned i);

}  // namespace gk::numth
