#pragma once

#include <vector>

#include "gk/groupspec.hpp"

namespace gk::torus_oracle {

// Exact maximal-torus orders, sorted and deduplicated.
struct TorusOrderSet {
  std::vector<Integer> orders;
  bool contains_multiple(const Integer& d) const;
};

// B_n(q)/C_n(q): (1/(2,q-1)) * prod (q^{n_i} - e_i) over partitions
// n_1+...+n_t = n and all sign vectors.
TorusOrderSet torus_orders_bc(unsigned n, const numth::PrimePower& q);

// D_n^eps(q): (1/(4,q^n-eps)) * prod (q^{n_i} - e_i) with sign product eps.
TorusOrderSet torus_orders_d(unsigned n, int eps, const numth::PrimePower& q);

// E7(q), E8(q), 2F4(q): the explicit order lists, expanded pattern by
// pattern with the stated exclusions removed (E7 values are the m-list
// divided by (2,q-1)).
TorusOrderSet torus_orders_exceptional(Family f, const numth::PrimePower& q);

bool oracle_covers(const GroupSpec& spec);
TorusOrderSet torus_orders(const GroupSpec& spec);

// r, s odd distinct primes coprime to q: adjacent iff r*s divides some
// maximal-torus order. (A finite abelian group whose order rs divides
// contains an element of order rs.)
bool oracle_adjacent(const GroupSpec& spec, const Integer& r, const Integer& s);

}  // namespace gk::torus_oracle
