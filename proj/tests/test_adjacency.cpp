#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/adjacency.hpp"

using namespace gk;
using namespace gk::adjacency;

static numth::PrimePower pp(unsigned q) { return numth::PrimePower::decompose(q); }

TEST_CASE("symplectic/odd-orthogonal criterion") {
  CHECK_FALSE(adjacent_bc(2, 2, 4));
  CHECK(adjacent_bc(5, 4, 6));        // eta sum 2+3 <= 5
  CHECK_FALSE(adjacent_bc(3, 3, 6));  // Theta(B_3) = {r_3, r_6}
  // divisor monotonicity: odd quotient forces adjacency regardless of rank
  for (unsigned n = 2; n <= 12; ++n) {
    CHECK(adjacent_bc(n, 2, 6));
    CHECK(adjacent_bc(n, 1, 3));
    CHECK(adjacent_bc(n, 4, 12));
  }
  // symmetry under swapping
  for (unsigned k = 1; k <= 14; ++k)
    for (unsigned l = 1; l <= 14; ++l)
      if (k != l) CHECK(adjacent_bc(7, k, l) == adjacent_bc(7, l, k));
}

TEST_CASE("orthogonal D criterion") {
  CHECK_FALSE(adjacent_d(4, 1, 3, 6));
  CHECK(adjacent_d(4, 1, 2, 4));
  CHECK_FALSE(adjacent_d(4, -1, 4, 8));
  // the chain case: r_3 ~ r_6 in D_6 through the split torus q^6-1
  CHECK(adjacent_d(6, 1, 3, 6));
  CHECK_FALSE(adjacent_d(6, -1, 3, 6));
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned l = 1; l <= 12; ++l)
      if (k != l)
        for (int eps : {1, -1}) CHECK(adjacent_d(6, eps, k, l) == adjacent_d(6, eps, l, k));
}

TEST_CASE("linear/unitary criterion") {
  CHECK_FALSE(adjacent_linear(6, 1, 4, 5));
  CHECK(adjacent_linear(6, 1, 3, 6));
  CHECK(adjacent_linear(8, 1, 4, 8));  // 4 | 8
  CHECK_FALSE(adjacent_linear(10, -1, 14, 18));  // roles 7 and 9
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned l = 1; l <= 12; ++l)
      if (k != l) CHECK(adjacent_linear(6, 1, k, l) == adjacent_linear(6, 1, l, k));
}

TEST_CASE("exceptional criterion") {
  CHECK_FALSE(adjacent_exceptional(Family::ThreeD4, pp(3), 3, 6, false, false));
  CHECK_FALSE(adjacent_exceptional(Family::E8, pp(7), 5, 6, false, false));
  // E8: 5 in R_4 is adjacent to R_20 (r*k = 20)
  CHECK(adjacent_exceptional(Family::E8, pp(2), 4, 20, false, true));
  CHECK_FALSE(adjacent_exceptional(Family::E8, pp(2), 4, 20, false, false));
  // G2: the prime 3 avoids l = 9 - 3k
  CHECK_FALSE(adjacent_exceptional(Family::G2, pp(4), 1, 6, true, false));
  CHECK(adjacent_exceptional(Family::G2, pp(4), 1, 3, true, false));
  CHECK_FALSE(adjacent_exceptional(Family::G2, pp(5), 2, 3, true, false));
  // E6: conditional 3 vs R_8
  CHECK_FALSE(adjacent_exceptional(Family::E6, pp(4), 1, 8, true, false));   // (q-1)_3 = 3
  CHECK(adjacent_exceptional(Family::E6, pp(19), 1, 8, true, false));        // (q-1)_3 = 9
  CHECK(adjacent_exceptional(Family::TwoE6, pp(2), 2, 8, true, false));      // (q+1)_3 = 3
  CHECK_FALSE(adjacent_exceptional(Family::TwoE6, pp(2), 2, 8, false, false) == false);
  // F4 table fact: at q = 2, theta needs {3,4,8,12} pairwise non-adjacent
  for (unsigned k : {3u, 4u, 8u})
    for (unsigned l : {4u, 8u, 12u})
      if (k < l) CHECK_FALSE(adjacent_exceptional(Family::F4, pp(2), k, l, false, false));
}

TEST_CASE("Suzuki/Ree criterion") {
  CHECK_FALSE(adjacent_suzree(Family::TwoB2, 1, 3, false, false));
  CHECK(adjacent_suzree(Family::TwoF4, 1, 2, false, false));
  CHECK(adjacent_suzree(Family::TwoF4, 1, 3, false, false));
  CHECK_FALSE(adjacent_suzree(Family::TwoF4, 2, 3, false, false));
  CHECK_FALSE(adjacent_suzree(Family::TwoG2, 0, 3, true, false));  // 2 vs S_3
  CHECK(adjacent_suzree(Family::TwoG2, 0, 1, true, false));
  CHECK_FALSE(adjacent_suzree(Family::TwoF4, 0, 5, false, true));  // 3 vs S_5
  CHECK(adjacent_suzree(Family::TwoF4, 0, 4, false, true));        // 3 ~ s_4
  CHECK(adjacent_suzree(Family::TwoF4, 0, 2, true, false));        // 2 ~ s_2
  CHECK_FALSE(adjacent_suzree(Family::TwoF4, 0, 4, true, false));
}
