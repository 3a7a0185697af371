#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/numth.hpp"

using namespace gk;
using namespace gk::numth;

TEST_CASE("multiplicative order") {
  CHECK(mult_order(3, 4) == 1);
  CHECK(mult_order(5, 2) == 4);
  CHECK(mult_order(13, 2) == 12);
  CHECK(mult_order(7, 2) == 3);
  CHECK_THROWS(mult_order(4, 3));   // even
  CHECK_THROWS(mult_order(9, 2));   // not prime
  CHECK_THROWS(mult_order(3, 6));   // r | q
}

TEST_CASE("order of two") {
  CHECK(order_of_two(5) == 1);
  CHECK(order_of_two(7) == 2);
  CHECK(order_of_two(9) == 1);
  CHECK_THROWS(order_of_two(8));
}

TEST_CASE("cyclotomic evaluation") {
  CHECK(cyclotomic_eval(6, 2) == 3);
  CHECK(cyclotomic_eval(4, 2) == 5);
  for (unsigned q : {2u, 3u, 5u, 9u}) CHECK(cyclotomic_eval(1, q) == q - 1);
  // telescoping: prod_{d|m} phi_d(q) = q^m - 1
  for (unsigned q : {2u, 3u, 4u, 7u, 64u})
    for (unsigned m : {1u, 2u, 6u, 12u, 30u, 40u}) {
      Integer prod = 1;
      for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) prod *= cyclotomic_eval(d, q);
      CHECK(prod == ipow(Integer(q), m) - 1);
    }
}

TEST_CASE("r-share") {
  CHECK(r_share(12, 2) == std::pair<Integer, Integer>{4, 3});
  CHECK(r_share(12, 3) == std::pair<Integer, Integer>{3, 4});
  CHECK(r_share(7, 5) == std::pair<Integer, Integer>{1, 7});
}

TEST_CASE("greatest primitive divisor") {
  CHECK(greatest_primitive_divisor(6, 2) == 1);
  CHECK(greatest_primitive_divisor(1, 7) == 3);
  CHECK(greatest_primitive_divisor(12, 2) == 13);
  CHECK(greatest_primitive_divisor(2, 7) == 8);
  CHECK(greatest_primitive_divisor(2, 5) == 3);
  CHECK(greatest_primitive_divisor(4, 3) == 5);
}

TEST_CASE("Zsigmondy exception list over the sweep grid") {
  for (Integer q = 2; q <= 64; ++q) {
    auto fs = factorize(q);
    if (fs.size() != 1) continue;  // prime powers only
    for (unsigned m = 1; m <= 40; ++m) {
      bool expect = !((q == 2 && m == 1) || (q == 3 && m == 1) || (q == 2 && m == 6));
      CHECK(class_nonempty(m, q) == expect);
    }
  }
}

TEST_CASE("primitive primes with certification") {
  auto r4 = primitive_primes(4, 2);
  CHECK(r4 == std::vector<Integer>{5});
  CHECK(primitive_primes(2, 7) == std::vector<Integer>{2});
  CHECK(primitive_primes(12, 2) == std::vector<Integer>{13});
  // every member certified to multiplicative order m
  for (unsigned m : {3u, 5u, 8u, 20u})
    for (const auto& r : primitive_primes(m, 3))
      CHECK((r == 2 ? order_of_two(3) : mult_order(r, 3)) == m);
}

TEST_CASE("gcd identities of the divisibility lemma") {
  for (unsigned qi : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Integer q = qi;
    for (unsigned k = 1; k <= 20; ++k)
      for (unsigned l = 1; l <= 20; ++l) {
        unsigned d = std::gcd(k, l);
        Integer a = ipow(q, k) - 1, b = ipow(q, l) - 1;
        CHECK(igcd(a, b) == ipow(q, d) - 1);
        Integer ap = ipow(q, k) + 1, bp = ipow(q, l) + 1;
        bool both_odd = (k / d) % 2 == 1 && (l / d) % 2 == 1;
        Integer expect = both_odd ? ipow(q, d) + 1 : igcd(Integer(2), q + 1);
        CHECK(igcd(ap, bp) == expect);
        bool mixed = (k / d) % 2 == 0 && (l / d) % 2 == 1;
        Integer expect2 = mixed ? ipow(q, d) + 1 : igcd(Integer(2), q + 1);
        CHECK(igcd(a, bp) == expect2);
      }
  }
}

TEST_CASE("pairwise coprimality of greatest primitive divisors") {
  for (unsigned qi : {2u, 3u, 5u, 8u, 9u}) {
    Integer q = qi;
    for (unsigned i = 1; i <= 24; ++i)
      for (unsigned j = i + 1; j <= 24; ++j)
        CHECK(igcd(greatest_primitive_divisor(i, q), greatest_primitive_divisor(j, q)) == 1);
  }
}

TEST_CASE("nu and eta transforms") {
  CHECK(nu(3) == 6);
  CHECK(nu(6) == 3);
  CHECK(nu(4) == 4);
  CHECK(nu_eps(9, 1) == 9);
  CHECK(eta(5) == 5);
  CHECK(eta(6) == 3);
  CHECK(eta(1) == 1);
  for (unsigned m = 1; m <= 10000; ++m) {
    CHECK(nu(nu(m)) == m);
    CHECK(nu_eps(nu_eps(m, -1), -1) == m);
    CHECK(nu_eps(nu_eps(m, 1), 1) == m);
  }
}

TEST_CASE("Suzuki/Ree divisors") {
  CHECK(suzuki_ree_divisor(SRFamily::Sz2B2, 1, 2) == 5);
  CHECK(suzuki_ree_divisor(SRFamily::Ree2G2, 1, 4) == 37);
  CHECK(suzuki_ree_divisor(SRFamily::Ree2F4, 1, 3) == 65);
  CHECK(suzuki_ree_divisor(SRFamily::Sz2B2, 1, 1) == 7);
  CHECK_THROWS(suzuki_ree_divisor(SRFamily::Sz2B2, 1, 4));

  CHECK(suzuki_ree_class(SRFamily::Sz2B2, 1, 3) == std::vector<Integer>{13});
  CHECK(suzuki_ree_class(SRFamily::Ree2G2, 1, 1) == std::vector<Integer>{13});
  CHECK(suzuki_ree_class(SRFamily::Ree2F4, 1, 2).empty());  // pi(9) \ {3}

  // listed pairwise gcds
  for (unsigned n : {1u, 2u}) {
    for (unsigned i = 1; i <= 3; ++i)
      for (unsigned j = i + 1; j <= 3; ++j)
        CHECK(igcd(suzuki_ree_divisor(SRFamily::Sz2B2, n, i),
                   suzuki_ree_divisor(SRFamily::Sz2B2, n, j)) == 1);
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned j = i + 1; j <= 4; ++j) {
        Integer g = igcd(suzuki_ree_divisor(SRFamily::Ree2G2, n, i),
                         suzuki_ree_divisor(SRFamily::Ree2G2, n, j));
        CHECK(g == ((i == 1 && j == 2) ? 2 : 1));
      }
    for (unsigned i = 1; i <= 6; ++i)
      for (unsigned j = i + 1; j <= 6; ++j) {
        Integer g = igcd(suzuki_ree_divisor(SRFamily::Ree2F4, n, i),
                         suzuki_ree_divisor(SRFamily::Ree2F4, n, j));
        CHECK(g == ((i == 2 && j == 4) ? 3 : 1));
      }
  }
}

TEST_CASE("prime power decomposition") {
  auto pp = PrimePower::decompose(8);
  CHECK(pp.p == 2);
  CHECK(pp.alpha == 3);
  CHECK_THROWS(PrimePower::decompose(12));
  CHECK_THROWS(PrimePower::decompose(1));
  CHECK(PrimePower::make(3, 4).q == 81);
}

TEST_CASE("factorization and budget") {
  auto fs = factorize(Integer("600851475143"));
  CHECK(fs.back().first == 6857);
  CHECK_THROWS_AS(factorize((ipow(Integer(2), 211) - 1), 10),
                  FactorBudgetExceeded);
}
