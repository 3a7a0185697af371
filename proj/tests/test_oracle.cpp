#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gk/torus_oracle.hpp"

using namespace gk;
using namespace gk::torus_oracle;

static numth::PrimePower pp(unsigned q) { return numth::PrimePower::decompose(q); }

TEST_CASE("Sp4 torus orders") {
  auto t = torus_orders_bc(2, pp(5));
  CHECK(t.orders == std::vector<Integer>{8, 12, 13, 18});
  auto t3 = torus_orders_bc(2, pp(3));
  CHECK(std::find(t3.orders.begin(), t3.orders.end(), Integer(5)) != t3.orders.end());
  auto b32 = torus_orders_bc(3, pp(2));
  CHECK(std::count(b32.orders.begin(), b32.orders.end(), Integer(7)) == 1);
  CHECK(std::count(b32.orders.begin(), b32.orders.end(), Integer(9)) == 1);
}

TEST_CASE("orthogonal torus orders respect the sign product") {
  auto dp = torus_orders_d(4, 1, pp(3));
  CHECK(std::find(dp.orders.begin(), dp.orders.end(), Integer(20)) != dp.orders.end());
  // D_4^-(2): single-part tori must carry sign -, so q^4-1 = 15 cannot appear
  auto dm = torus_orders_d(4, -1, pp(2));
  CHECK(std::find(dm.orders.begin(), dm.orders.end(), Integer(15)) == dm.orders.end());
  CHECK(std::find(dm.orders.begin(), dm.orders.end(), Integer(17)) != dm.orders.end());
  auto dp2 = torus_orders_d(4, 1, pp(2));
  CHECK(std::find(dp2.orders.begin(), dp2.orders.end(), Integer(17)) == dp2.orders.end());
}

TEST_CASE("exceptional torus lists") {
  auto e8 = torus_orders_exceptional(Family::E8, pp(2));
  CHECK(std::find(e8.orders.begin(), e8.orders.end(), Integer(241)) != e8.orders.end());

  auto f4 = torus_orders_exceptional(Family::TwoF4, pp(8));
  CHECK(std::find(f4.orders.begin(), f4.orders.end(), Integer(57)) != f4.orders.end());
  CHECK(std::find(f4.orders.begin(), f4.orders.end(), Integer(37)) != f4.orders.end());
  CHECK(std::find(f4.orders.begin(), f4.orders.end(), Integer(109)) != f4.orders.end());

  // E7(2): the excluded (q^2+1)(q+-1)^5 patterns must not appear
  auto e7 = torus_orders_exceptional(Family::E7, pp(2));
  std::set<Integer> s(e7.orders.begin(), e7.orders.end());
  CHECK(!s.contains(Integer(5 * 243)));
  CHECK(!s.contains(Integer(5)));
}

TEST_CASE("every E8 order divides the group order") {
  for (unsigned qi : {2u, 3u}) {
    Integer q = qi, order = ipow(q, 120);
    for (unsigned d : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) order *= ipow(q, d) - 1;
    for (const auto& o : torus_orders_exceptional(Family::E8, pp(qi)).orders)
      CHECK(order % o == 0);
  }
}

TEST_CASE("oracle adjacency verdicts") {
  CHECK_FALSE(oracle_adjacent(parse_spec("B:2:5"), 3, 13));
  CHECK_FALSE(oracle_adjacent(parse_spec("B:3:3"), 13, 7));
  CHECK(oracle_adjacent(parse_spec("E8:2"), 7, 5));
  CHECK_THROWS(oracle_adjacent(parse_spec("B:2:5"), 2, 13));
  CHECK_THROWS(oracle_adjacent(parse_spec("2B2:8"), 5, 7));  // uncovered family
}

TEST_CASE("determinism of order sets") {
  auto a = torus_orders_exceptional(Family::E7, pp(3));
  auto b = torus_orders_exceptional(Family::E7, pp(3));
  CHECK(a.orders == b.orders);
  CHECK(std::is_sorted(a.orders.begin(), a.orders.end()));
}
