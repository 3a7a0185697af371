#include <algorithm>
#include <map>

#include "gk/adjacency.hpp"
#include "gk/cocliques.hpp"
#include "gk/refdata.hpp"

// Graph construction: one builder per family, assembling the criterion
// predicates with the resolved special edges (characteristic rules, named
// primes, clique assertions). Pairs the paper decides nothing about are left
// Unresolved, with proof-derived caps where the proofs bound t(r,G).

namespace gk::cocliques {

using adjacency::adjacent_bc;
using adjacency::adjacent_d;
using adjacency::adjacent_exceptional;
using adjacency::adjacent_linear;
using adjacency::adjacent_suzree;
using numth::eta;
using numth::nu_eps;

namespace {

Vertex char_vertex(const Integer& p) { return {Vertex::Kind::Char, p, 0, 'R'}; }
Vertex named_vertex(Integer v, unsigned host) { return {Vertex::Kind::Named, std::move(v), host, 'R'}; }
Vertex class_vertex(unsigned i, char cls = 'R') { return {Vertex::Kind::Class, 0, i, cls}; }

struct Builder {
  CompactGraph g;
  explicit Builder(GroupSpec spec) { g.spec = std::move(spec); }
  int add(Vertex v, int cap = -1) {
    g.vertices.push_back(std::move(v));
    g.caps.push_back(cap);
    return static_cast<int>(g.vertices.size()) - 1;
  }
  void finish_matrix() {
    size_t n = g.vertices.size();
    g.adj.assign(n, std::vector<std::uint8_t>(n, Unresolved));
    for (size_t i = 0; i < n; ++i) g.adj[i][i] = NonAdjacent;
  }
  void set(int a, int b, bool adjacent) {
    g.adj[a][b] = g.adj[b][a] = adjacent ? Adjacent : NonAdjacent;
  }
};

// Residual witness of class i after removing the named primes hosted there.
Integer residual(const ClassPartition& part, unsigned i, const Integer& k) {
  Integer r = k;
  for (const auto& sp : part.special_primes)
    if (sp.host == i)
      while (r % sp.prime == 0) r /= sp.prime;
  return r;
}

CompactGraph build_alternating(const GroupSpec& spec) {
  Builder b(spec);
  auto primes = alt_pi(spec.n);
  for (const auto& r : primes) b.add(named_vertex(r, 0));
  b.finish_matrix();
  const Integer n = spec.n;
  for (size_t i = 0; i < primes.size(); ++i)
    for (size_t j = i + 1; j < primes.size(); ++j) {
      const Integer &r = primes[i], &s = primes[j];
      bool adj = (r == 2) ? s + 4 <= n : r + s <= n;
      b.set(static_cast<int>(i), static_cast<int>(j), adj);
    }
  return std::move(b.g);
}

CompactGraph build_sporadic(const GroupSpec& spec) {
  const auto& rec =
      refdata::sporadic_record(spec.family == Family::Tits ? "Tits" : spec.sporadic_name);
  Builder b(spec);
  auto primes = rec.primes();
  for (const auto& r : primes) b.add(named_vertex(r, 0));
  b.finish_matrix();
  for (size_t i = 0; i < primes.size(); ++i)
    for (size_t j = i + 1; j < primes.size(); ++j)
      b.set(static_cast<int>(i), static_cast<int>(j), rec.adjacent(primes[i], primes[j]));
  return std::move(b.g);
}

CompactGraph build_classical_bcd(const GroupSpec& spec) {
  auto part = partition(spec);
  const unsigned n = spec.n;
  const int eps = spec.eps();
  const bool is_bc = spec.family == Family::B || spec.family == Family::C;
  Builder b(spec);
  int pv = b.add(char_vertex(*part.characteristic));
  std::map<unsigned, int> cls;
  for (const auto& c : part.classes) cls[c.index] = b.add(class_vertex(c.index));
  b.finish_matrix();
  for (auto [i, vi] : cls)
    for (auto [j, vj] : cls) {
      if (i >= j) continue;
      bool adj = is_bc ? adjacent_bc(n, i, j) : adjacent_d(n, eps, i, j);
      b.set(vi, vj, adj);
    }
  for (auto [i, vi] : cls) {
    bool nonadj = is_bc ? eta(i) == n : (eta(i) == n || eta(i) == n - 1);
    b.set(pv, vi, !nonadj);
  }
  return std::move(b.g);
}

CompactGraph build_linear_small(const GroupSpec& spec) {
  // A_1(q) and A_2^eps(q) follow their own compact forms.
  auto part = partition(spec);
  const int eps = spec.eps();
  const Integer &q = spec.q->q, &p = spec.q->p;
  Builder b(spec);
  int pv = b.add(char_vertex(p));
  if (spec.n == 2) {
    std::vector<int> vs;
    for (const auto& c : part.classes) vs.push_back(b.add(class_vertex(c.index)));
    b.finish_matrix();
    for (int v : vs) b.set(pv, v, false);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) b.set(vs[i], vs[j], false);
    return std::move(b.g);
  }
  // n = 3
  const unsigned i1 = nu_eps(1, eps), i2 = nu_eps(2, eps), i3 = nu_eps(3, eps);
  int c1 = -1, c2 = -1, c3 = -1, v2 = -1, v3 = -1;
  for (const auto& c : part.classes) {
    Integer res = residual(part, c.index, c.witness);
    if (c.index == i3) c3 = b.add(class_vertex(c.index));
    else if (res > 1) (c.index == i1 ? c1 : c2) = b.add(class_vertex(c.index));
  }
  for (const auto& sp : part.special_primes)
    (sp.prime == 2 ? v2 : v3) = b.add(named_vertex(sp.prime, sp.host));
  b.finish_matrix();
  const Integer qe = q - eps;
  const Integer three_share = qe % 3 == 0 ? numth::r_share(qe, 3).first : Integer(1);
  auto set_if = [&](int a, int bb, bool adj) { if (a >= 0 && bb >= 0) b.set(a, bb, adj); };
  set_if(pv, c1, true);
  set_if(pv, c2, false);
  set_if(pv, c3, false);
  set_if(c1, c2, true);
  set_if(c1, c3, false);
  set_if(c2, c3, false);
  if (v2 >= 0) {
    set_if(v2, pv, true);
    set_if(v2, c1, true);
    set_if(v2, c2, true);
    set_if(v2, c3, false);
    set_if(v2, v3, true);
  }
  if (v3 >= 0) {
    set_if(v3, pv, three_share > 3);           // dotted (3,p): (q-eps1)_3 > 3
    set_if(v3, c1, true);
    set_if(v3, c2, three_share != 3);          // dotted (3, R'_{nu(2)}): (q-eps1)_3 != 3
    set_if(v3, c3, false);
  }
  return std::move(b.g);
}

CompactGraph build_linear(const GroupSpec& spec) {
  if (spec.n <= 3) return build_linear_small(spec);
  auto part = partition(spec);
  const unsigned n = spec.n;
  const int eps = spec.eps();
  Builder b(spec);
  int pv = b.add(char_vertex(*part.characteristic));
  std::map<unsigned, int> cls;
  int c1_vertex = -1;
  unsigned c1_index = 0;
  for (const auto& c : part.classes) {
    if (nu_eps(c.index, eps) == 1) c1_index = c.index;
    Integer res = residual(part, c.index, c.witness);
    if (res <= 1) continue;
    int v = cls[c.index] = b.add(class_vertex(c.index));
    if (c.index == c1_index && c1_index != 0) c1_vertex = v;
  }
  std::map<Integer, int> named;
  for (const auto& sp : part.special_primes) named[sp.prime] = b.add(named_vertex(sp.prime, sp.host));
  b.finish_matrix();

  const bool a32_case = spec.family == Family::TwoA && n == 4 && spec.q->q == 2;
  for (auto [i, vi] : cls)
    for (auto [j, vj] : cls) {
      if (i >= j) continue;
      unsigned a = nu_eps(i, eps), c = nu_eps(j, eps);
      if (a >= 2 && c >= 2) {
        b.set(vi, vj, adjacent_linear(n, eps, i, j));
        continue;
      }
      unsigned hi = std::max(a, c);
      if (2 * hi <= n) b.set(vi, vj, true);  // xi-clique
      else if (a32_case) b.set(vi, vj, false);  // 2A_3(2): r_2 and r_4 non-adjacent
      // otherwise unresolved: covered by the t(r,G) cap below
    }
  for (auto [i, vi] : cls) {
    unsigned v = nu_eps(i, eps);
    b.set(pv, vi, !(v == n || v == n - 1));
  }
  for (const auto& sp : part.special_primes) {
    int nv = named[sp.prime];
    b.set(pv, nv, true);
    // the named prime is non-adjacent exactly to the two high classes of its row
    std::vector<unsigned> blocked;
    if (sp.prime == 2) blocked = {3, 4};
    else if (sp.prime == 5) blocked = {4, 5};
    else blocked = {5, 6};
    for (auto [i, vi] : cls) {
      unsigned v = nu_eps(i, eps);
      b.set(nv, vi, std::find(blocked.begin(), blocked.end(), v) == blocked.end());
    }
    for (const auto& sp2 : part.special_primes)
      if (sp2.prime != sp.prime) b.set(nv, named[sp2.prime], true);
  }
  if (c1_vertex >= 0 && !a32_case) b.g.caps[c1_vertex] = n <= 6 ? 2 : 3;
  return std::move(b.g);
}

CompactGraph build_exceptional(const GroupSpec& spec) {
  auto part = partition(spec);
  const auto& pp = *spec.q;
  Builder b(spec);
  int pv = b.add(char_vertex(pp.p));
  std::map<unsigned, int> cls;
  for (const auto& c : part.classes) {
    Integer res = residual(part, c.index, c.witness);
    if (res > 1) cls[c.index] = b.add(class_vertex(c.index));
  }
  std::map<Integer, int> named;
  for (const auto& sp : part.special_primes) named[sp.prime] = b.add(named_vertex(sp.prime, sp.host));
  b.finish_matrix();

  for (auto [i, vi] : cls)
    for (auto [j, vj] : cls)
      if (i < j) b.set(vi, vj, adjacent_exceptional(spec.family, pp, i, j, false, false));

  // characteristic: adjacent exactly outside the high band
  const auto& band = part.high_band;
  auto in_band = [&](unsigned i) { return std::find(band.begin(), band.end(), i) != band.end(); };
  for (auto [i, vi] : cls) b.set(pv, vi, !in_band(i));

  for (const auto& sp : part.special_primes) {
    int nv = named[sp.prime];
    b.set(pv, nv, true);  // named primes sit inside the low clique with p
    for (auto [i, vi] : cls) {
      if (sp.prime == 2) {      // F4, q odd: adjacent to everything except R_12
        b.set(nv, vi, i != 12);
        continue;
      }
      unsigned k = std::min(sp.host, i), l = std::max(sp.host, i);
      bool r_is_3 = sp.prime == 3 && sp.host == k;
      bool r_is_5 = sp.prime == 5 && sp.host == k;
      b.set(nv, vi, adjacent_exceptional(spec.family, pp, k, l, r_is_3, r_is_5));
    }
  }
  return std::move(b.g);
}

CompactGraph build_suzuki_ree(const GroupSpec& spec) {
  auto part = partition(spec);
  Builder b(spec);
  int pv = b.add(char_vertex(*part.characteristic));
  std::map<unsigned, int> cls;
  for (const auto& c : part.classes) cls[c.index] = b.add(class_vertex(c.index, 'S'));
  int v2 = -1, v3 = -1;
  for (const auto& sp : part.special_primes)
    (sp.prime == 2 ? v2 : v3) = b.add(named_vertex(sp.prime, 0));
  b.finish_matrix();

  const Family f = spec.family;
  for (auto [i, vi] : cls)
    for (auto [j, vj] : cls)
      if (i < j) b.set(vi, vj, adjacent_suzree(f, i, j, false, false));
  for (auto [i, vi] : cls) {
    if (f == Family::TwoF4)
      b.set(pv, vi, adjacent_suzree(f, 0, i, true, false));   // p = 2
    else
      b.set(pv, vi, false);  // 2B2/2G2: characteristic isolated from all classes
  }
  if (v2 >= 0) {  // 2G2: the prime 2 is adjacent to s_1, s_2 and p
    b.set(v2, pv, true);
    for (auto [i, vi] : cls) b.set(v2, vi, adjacent_suzree(f, 0, i, true, false));
  }
  if (v3 >= 0) {  // 2F4: the prime 3
    b.set(v3, pv, true);
    for (auto [i, vi] : cls) b.set(v3, vi, adjacent_suzree(f, 0, i, false, true));
  }
  return std::move(b.g);
}

}  // namespace

std::vector<SpecialEdgeFact> special_edges(const GroupSpec& spec) {
  if (!spec.is_lie()) throw SpecError("special_edges: Lie-type groups only");
  auto g = build_graph(spec);
  std::vector<SpecialEdgeFact> out;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adj[i][j] == Unresolved) continue;
      const auto &a = g.vertices[i], &b = g.vertices[j];
      bool named_pair = a.kind != Vertex::Kind::Class || b.kind != Vertex::Kind::Class;
      if (!named_pair) continue;
      std::string why;
      if (a.kind == Vertex::Kind::Char || b.kind == Vertex::Kind::Char)
        why = "characteristic rule";
      else
        why = "named-prime rule";
      out.push_back({a, b, g.adj[i][j] == Adjacent, why});
    }
  return out;
}

CompactGraph build_graph(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Alt: return build_alternating(spec);
    case Family::Sporadic:
    case Family::Tits: return build_sporadic(spec);
    case Family::A:
    case Family::TwoA: return build_linear(spec);
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD: return build_classical_bcd(spec);
    case Family::TwoB2:
    case Family::TwoG2:
    case Family::TwoF4: return build_suzuki_ree(spec);
    default: return build_exceptional(spec);
  }
}

AltStructure alt_structure(unsigned n) {
  if (n < 5) throw SpecError("alt_structure: n >= 5");
  AltStructure st;
  st.n = n;
  auto primes = alt_pi(n);
  for (const auto& r : primes)
    if (2 * r >= Integer(n)) st.tau.push_back(r);
  st.s_n = st.tau.front();
  for (const auto& r : primes) {
    if (r == 2) {
      if (st.s_n + 4 > Integer(n)) st.tau_prime.push_back(r);
    } else if (2 * r < Integer(n) && r + st.s_n > Integer(n)) {
      st.tau_prime.push_back(r);
    }
  }
  std::sort(st.tau_prime.begin(), st.tau_prime.end());
  return st;
}

CocliqueReport alt_report(unsigned n) {
  GroupSpec spec;
  spec.family = Family::Alt;
  spec.n = n;
  auto rep = theta_structure(spec);
  // cross-check against the closed form
  auto st = alt_structure(n);
  auto vlabel = [&](int v) { return rep.graph.vertices[v].prime; };
  size_t expect_count = st.tau_prime.size() <= 1 ? 1 : st.tau_prime.size();
  int expect_t = static_cast<int>(st.tau.size() + (st.tau_prime.empty() ? 0 : 1));
  if (rep.t != expect_t || rep.max_cocliques.size() != expect_count)
    throw std::logic_error("alt_report: closed form disagrees with enumeration at n=" +
                           std::to_string(n));
  for (const auto& C : rep.max_cocliques) {
    std::vector<Integer> set;
    for (int v : C) set.push_back(vlabel(v));
    for (const auto& r : st.tau)
      if (std::find(set.begin(), set.end(), r) == set.end())
        throw std::logic_error("alt_report: tau not contained in a maximum coclique");
    for (const auto& x : set)
      if (std::find(st.tau.begin(), st.tau.end(), x) == st.tau.end() &&
          std::find(st.tau_prime.begin(), st.tau_prime.end(), x) == st.tau_prime.end())
        throw std::logic_error("alt_report: coclique member outside tau U tau'");
  }
  return rep;
}

CliqueComplement clique_complement_check(const GroupSpec& spec) {
  if (spec.family == Family::Sporadic && spec.sporadic_name == "M23")
    return CliqueComplement::NotApplicable;
  if (spec.family != Family::Alt && spec.family != Family::Sporadic)
    return CliqueComplement::NotApplicable;
  auto rep = theta_structure(spec);
  // theta = the common intersection of all maximum cocliques
  std::vector<int> theta = rep.max_cocliques.front();
  for (const auto& C : rep.max_cocliques) {
    std::vector<int> inter;
    std::set_intersection(theta.begin(), theta.end(), C.begin(), C.end(),
                          std::back_inserter(inter));
    theta = std::move(inter);
  }
  const auto& g = rep.graph;
  std::vector<int> rest;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (!std::binary_search(theta.begin(), theta.end(), static_cast<int>(v)))
      rest.push_back(static_cast<int>(v));
  for (size_t a = 0; a < rest.size(); ++a)
    for (size_t b = a + 1; b < rest.size(); ++b)
      if (g.adj[rest[a]][rest[b]] != Adjacent) return CliqueComplement::Fails;
  return CliqueComplement::Holds;
}

}  // namespace gk::cocliques
