#include "gk/cocliques.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <numeric>
#include <stdexcept>

namespace gk::cocliques {

std::string Vertex::label() const {
  switch (kind) {
    case Kind::Char: return "p=" + prime.str();
    case Kind::Named: return prime.str();
    case Kind::Class: return std::string(1, cls) + std::to_string(index);
  }
  return "?";
}

int CompactGraph::find(const Vertex& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> CompactGraph::unresolved_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (adj[i][j] == Unresolved) out.emplace_back(i, j);
  return out;
}

namespace {

constexpr size_t kMaxV = 256;
using Bits = std::bitset<kMaxV>;

struct Enumerator {
  int n = 0;
  std::vector<Bits> nonadj;
  int best = 0;
  std::vector<Bits> found;

  void run() {
    Bits cand;
    for (int i = 0; i < n; ++i) cand.set(i);
    rec(Bits{}, 0, cand);
  }

  void rec(Bits cur, int size, Bits cand) {
    if (cand.none()) {
      if (size > best) { best = size; found.clear(); }
      if (size == best) found.push_back(cur);
      return;
    }
    if (size + static_cast<int>(cand.count()) < best) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (cand.test(i)) { v = i; break; }
    Bits c2 = cand;
    c2.reset(v);
    rec(cur | (Bits{}.set(v)), size + 1, c2 & nonadj[v]);
    rec(cur, size, c2);
  }
};

// Enumerate all maximum cocliques of the subgraph on `keep`, treating
// unresolved pairs per `unresolved_as_adjacent`.
MaxCocliqueResult enumerate(const CompactGraph& g, const std::vector<int>& keep,
                            bool unresolved_as_adjacent) {
  const int n = static_cast<int>(keep.size());
  if (n > static_cast<int>(kMaxV)) throw std::length_error("graph too large");
  // order by non-neighbor count descending (low degree first) for pruning
  std::vector<int> order(keep);
  std::vector<int> deg(g.vertices.size(), 0);
  for (int a : keep)
    for (int b : keep)
      if (a != b && (g.adj[a][b] == Adjacent || (g.adj[a][b] == Unresolved && unresolved_as_adjacent)))
        ++deg[a];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });

  Enumerator en;
  en.n = n;
  en.nonadj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto a = g.adj[order[i]][order[j]];
      bool adjacent = a == Adjacent || (a == Unresolved && unresolved_as_adjacent);
      if (!adjacent) en.nonadj[i].set(j);
    }
  en.run();
  MaxCocliqueResult res;
  res.t = en.best;
  for (const auto& b : en.found) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i)
      if (b.test(i)) set.push_back(order[i]);
    std::sort(set.begin(), set.end());
    res.cocliques.push_back(std::move(set));
  }
  std::sort(res.cocliques.begin(), res.cocliques.end());
  return res;
}

}  // namespace

MaxCocliqueResult max_cocliques(const CompactGraph& g) {
  std::vector<int> all(g.vertices.size());
  std::iota(all.begin(), all.end(), 0);

  const bool has_unresolved = !g.unresolved_pairs().empty();
  auto lo = enumerate(g, all, /*unresolved_as_adjacent=*/true);
  bool any_cap = false;
  for (int c : g.caps) any_cap |= c >= 0;
  if (!has_unresolved && !any_cap) return lo;

  std::vector<int> keep;
  for (int v : all)
    if (g.caps[v] < 0 || g.caps[v] >= lo.t) keep.push_back(v);

  bool pending = false;
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (g.adj[keep[a]][keep[b]] == Unresolved) pending = true;
  auto res = enumerate(g, keep, true);
  if (pending) {
    auto alt = enumerate(g, keep, false);
    if (alt.t != res.t || alt.cocliques != res.cocliques)
      throw std::runtime_error("max_cocliques: unspecified-by-paper pairs affect the optimum for " +
                               g.spec.display());
  }
  if (res.t < lo.t)
    throw std::logic_error("max_cocliques: cap removal lowered the optimum");
  return res;
}

namespace {

bool contains(const std::vector<int>& sorted_set, int v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

}  // namespace

std::vector<unsigned> CocliqueReport::core_classes() const {
  std::vector<unsigned> out;
  for (const auto& s : slots) out.push_back(s.index);
  return out;
}

CocliqueReport report_from_graph(CompactGraph g) {
  CocliqueReport rep;
  rep.spec = g.spec;
  auto mc = max_cocliques(g);
  rep.t = mc.t;
  rep.max_cocliques = mc.cocliques;

  const auto& V = g.vertices;
  int char_vertex = -1;
  for (size_t i = 0; i < V.size(); ++i)
    if (V[i].kind == Vertex::Kind::Char) char_vertex = static_cast<int>(i);

  // class atoms: class vertex itself plus named primes hosted in the class
  auto atom_class = [&](int v) -> unsigned {
    if (V[v].kind == Vertex::Kind::Class) return V[v].index;
    if (V[v].kind == Vertex::Kind::Named) return V[v].index;  // host (0 = standalone)
    return 0;
  };

  std::vector<unsigned> class_ids;
  for (const auto& v : V)
    if (v.kind == Vertex::Kind::Class) class_ids.push_back(v.index);
  std::sort(class_ids.begin(), class_ids.end());
  class_ids.erase(std::unique(class_ids.begin(), class_ids.end()), class_ids.end());
  // hosts of named primes may be classes whose residual vanished
  for (const auto& v : V)
    if (v.kind == Vertex::Kind::Named && v.index != 0 &&
        !std::binary_search(class_ids.begin(), class_ids.end(), v.index)) {
      class_ids.push_back(v.index);
      std::sort(class_ids.begin(), class_ids.end());
    }

  // M(G): classes whose atom set meets every maximum coclique
  for (unsigned c : class_ids) {
    bool in_all = true;
    for (const auto& C : rep.max_cocliques) {
      bool hit = false;
      for (int v : C)
        if (V[v].kind != Vertex::Kind::Char && atom_class(v) == c) hit = true;
      if (!hit) { in_all = false; break; }
    }
    if (!in_all) continue;
    ThetaSlot slot;
    slot.index = c;
    for (size_t v = 0; v < V.size(); ++v) {
      if (V[v].kind == Vertex::Kind::Char || atom_class(v) != c) continue;
      bool used = false;
      for (const auto& C : rep.max_cocliques)
        if (contains(C, static_cast<int>(v))) used = true;
      if (used) slot.atoms.push_back(static_cast<int>(v));
      else if (V[v].kind == Vertex::Kind::Named) slot.excluded.push_back(V[v].prime);
    }
    rep.slots.push_back(std::move(slot));
  }

  rep.p_forced = char_vertex >= 0;
  if (char_vertex >= 0)
    for (const auto& C : rep.max_cocliques)
      if (!contains(C, char_vertex)) rep.p_forced = false;

  std::vector<bool> is_slot_atom(V.size(), false);
  for (const auto& s : rep.slots)
    for (int a : s.atoms) is_slot_atom[a] = true;

  for (size_t v = 0; v < V.size(); ++v) {
    if (V[v].kind != Vertex::Kind::Named || is_slot_atom[v]) continue;
    bool in_all = !rep.max_cocliques.empty();
    for (const auto& C : rep.max_cocliques)
      if (!contains(C, static_cast<int>(v))) in_all = false;
    if (in_all) rep.forced_named.push_back(static_cast<int>(v));
  }

  // residues
  for (const auto& C : rep.max_cocliques) {
    std::vector<int> residue;
    for (int v : C) {
      if (char_vertex == v && rep.p_forced) continue;
      if (std::find(rep.forced_named.begin(), rep.forced_named.end(), v) != rep.forced_named.end())
        continue;
      if (is_slot_atom[v]) continue;
      residue.push_back(v);
    }
    if (!residue.empty() &&
        std::find(rep.theta_prime.begin(), rep.theta_prime.end(), residue) == rep.theta_prime.end())
      rep.theta_prime.push_back(residue);
  }
  std::sort(rep.theta_prime.begin(), rep.theta_prime.end());

  // Main Theorem soundness: { theta-instance U theta' } must equal the
  // enumerated maximum cocliques exactly, and |Theta'| != 1.
  if (rep.theta_prime.size() == 1)
    throw std::runtime_error("theta_structure: singleton Theta' for " + rep.spec.display());
  std::vector<std::vector<int>> generated;
  std::vector<int> base;
  if (rep.p_forced) base.push_back(char_vertex);
  for (int v : rep.forced_named) base.push_back(v);
  std::vector<std::vector<int>> cores{base};
  for (const auto& s : rep.slots) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cores)
      for (int a : s.atoms) {
        auto c2 = c;
        c2.push_back(a);
        next.push_back(std::move(c2));
      }
    cores = std::move(next);
  }
  auto residues = rep.theta_prime;
  if (residues.empty()) residues.push_back({});
  for (const auto& c : cores)
    for (const auto& r : residues) {
      auto full = c;
      full.insert(full.end(), r.begin(), r.end());
      std::sort(full.begin(), full.end());
      generated.push_back(std::move(full));
    }
  std::sort(generated.begin(), generated.end());
  generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
  if (generated != rep.max_cocliques)
    throw std::runtime_error("theta_structure: decomposition does not regenerate the maximum "
                             "cocliques for " + rep.spec.display());

  rep.graph = std::move(g);
  return rep;
}

CocliqueReport theta_structure(const GroupSpec& spec) { return report_from_graph(build_graph(spec)); }

}  // namespace gk::cocliques
