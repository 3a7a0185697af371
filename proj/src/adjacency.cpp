#include "gk/adjacency.hpp"

#include <utility>

namespace gk::adjacency {

using numth::eta;
using numth::nu_eps;

namespace {

// l/k is an odd natural number
bool odd_quotient(unsigned k, unsigned l) { return l % k == 0 && (l / k) % 2 == 1; }

}  // namespace

bool adjacent_bc(unsigned n, unsigned k, unsigned l) {
  if (eta(k) > eta(l)) std::swap(k, l);
  bool nonadj = eta(k) + eta(l) > n && !odd_quotient(k, l);
  return !nonadj;
}

bool adjacent_d(unsigned n, int eps, unsigned k, unsigned l) {
  if (eta(k) > eta(l)) std::swap(k, l);
  int parity = ((k + l) % 2 == 0) ? 1 : -1;
  int bound = 2 * static_cast<int>(n) - (1 - eps * parity);
  bool ineq = 2 * static_cast<int>(eta(k) + eta(l)) > bound;
  bool chain = eps == 1 && n == l && l == 2 * eta(l) && 2 * eta(k) == l && 2 * k == l;
  bool nonadj = ineq && !odd_quotient(k, l) && !chain;
  return !nonadj;
}

bool adjacent_linear(unsigned n, int eps, unsigned k, unsigned l) {
  unsigned a = nu_eps(k, eps), b = nu_eps(l, eps);
  if (a > b) std::swap(a, b);
  bool nonadj = a + b > n && b % a != 0;
  return !nonadj;
}

bool adjacent_exceptional(Family f, const numth::PrimePower& q, unsigned k, unsigned l,
                          bool r_is_3, bool r_is_5_k4) {
  if (k > l) std::swap(k, l);
  if (k == l) return true;
  const Integer& qq = q.q;
  bool nonadj = false;
  switch (f) {
    case Family::G2:
      if (r_is_3)
        nonadj = l == 9 - 3 * k;
      else
        nonadj = l == 3 || l == 6;
      break;
    case Family::F4:
      nonadj = l == 8 || l == 12 || (l == 6 && (k == 3 || k == 4)) || (l == 4 && k == 3);
      break;
    case Family::E6:
      nonadj = (l == 4 && k == 3) || (l == 5 && k >= 3) || (l == 6 && k == 5) ||
               (l == 8 && k >= 3) ||
               (l == 8 && r_is_3 && numth::r_share(qq - 1, 3).first == 3) || l == 9 ||
               (l == 12 && k != 3);
      break;
    case Family::TwoE6:
      nonadj = (l == 6 && k == 4) || (l == 8 && k >= 3) ||
               (l == 8 && r_is_3 && numth::r_share(qq + 1, 3).first == 3) ||
               (l == 10 && k >= 3) || (l == 12 && k != 6) || l == 18;
      break;
    case Family::E7:
      nonadj = (l == 5 && k == 4) || (l == 6 && k == 5) ||
               ((l == 14 || l == 18) && k != 2) || ((l == 7 || l == 9) && k >= 2) ||
               (l == 8 && k >= 3 && k != 4) || (l == 10 && k >= 3 && k != 6) ||
               (l == 12 && k >= 4 && k != 6);
      break;
    case Family::E8:
      nonadj = (l == 6 && k == 5) || ((l == 7 || l == 14) && k >= 3) ||
               (l == 9 && k >= 4) || ((l == 8 || l == 12) && k >= 5 && k != 6) ||
               (l == 10 && k >= 3 && k != 4 && k != 6) ||
               (l == 18 && k != 1 && k != 2 && k != 6) ||
               (l == 20 && !(r_is_5_k4 && k == 4)) || l == 15 || l == 24 || l == 30;
      break;
    case Family::ThreeD4:
      nonadj = (l == 6 && k == 3) || l == 12;
      break;
    default:
      throw SpecError("adjacent_exceptional: unsupported family");
  }
  return !nonadj;
}

bool adjacent_suzree(Family f, unsigned i, unsigned j, bool left_is_2, bool left_is_3) {
  switch (f) {
    case Family::TwoB2:
      // p = 2 is non-adjacent to every S-class; distinct classes non-adjacent.
      if (left_is_2) return false;
      return i == j;
    case Family::TwoG2:
      // p = 3 non-adjacent to all odd vertices; 2 adjacent to s_1, s_2 (and p,
      // handled at the graph level).
      if (left_is_2) return j == 1 || j == 2;
      return i == j;
    case Family::TwoF4:
      if (left_is_2) return j == 1 || j == 2 || j == 3;
      if (left_is_3) return !(j == 3 || j == 5 || j == 6);
      if (i == j) return true;
      {
        unsigned a = std::min(i, j), b = std::max(i, j);
        return a == 1 && (b == 2 || b == 3);
      }
    default:
      throw SpecError("adjacent_suzree: unsupported family");
  }
}

}  // namespace gk::adjacency
