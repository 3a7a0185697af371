#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gk/groupspec.hpp"

namespace gk::cocliques {

struct Vertex {
  enum class Kind { Char, Named, Class };
  Kind kind{};
  Integer prime;      // Char/Named: the prime itself
  unsigned index = 0; // Class: class index; Named: host class (0 = standalone)
  char cls = 'R';

  std::string label() const;
  bool operator==(const Vertex& o) const {
    return kind == o.kind && prime == o.prime && index == o.index && cls == o.cls;
  }
};

enum Adj : std::uint8_t { NonAdjacent = 0, Adjacent = 1, Unresolved = 2 };

struct CompactGraph {
  GroupSpec spec;
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::uint8_t>> adj;  // symmetric, Adj values
  std::vector<int> caps;                       // proof-derived bound on t(v,G); -1 = none

  int find(const Vertex& v) const;
  std::vector<std::pair<int, int>> unresolved_pairs() const;
};

// Resolved named-prime and characteristic edge facts for a Lie-type spec
// (the conditional/dotted edges of the compact forms, plus the family's
// characteristic adjacencies), with a short reason string per fact.
struct SpecialEdgeFact {
  Vertex a, b;
  bool adjacent;
  std::string reason;
};
std::vector<SpecialEdgeFact> special_edges(const GroupSpec& spec);

// Compact prime graph for any supported spec (Lie type via the criteria and
// special edges; alternating by the degree rule; sporadic/Tits from spectra).
CompactGraph build_graph(const GroupSpec& spec);

struct MaxCocliqueResult {
  int t = 0;
  std::vector<std::vector<int>> cocliques;  // each sorted; list sorted
};

// Exact enumeration of all maximum cocliques. Capped vertices whose cap is
// below the established lower bound are excluded (their cocliques cannot be
// maximum); remaining unresolved pairs are checked by comparing the two
// extreme completions and rejected if the results differ.
MaxCocliqueResult max_cocliques(const CompactGraph& g);

struct ThetaSlot {
  unsigned index = 0;            // class index in M(G)
  std::vector<int> atoms;        // usable vertex ids (class vertex / hosted named primes)
  std::vector<Integer> excluded; // named primes of this class never usable
};

struct CocliqueReport {
  GroupSpec spec;
  CompactGraph graph;
  int t = 0;
  std::vector<std::vector<int>> max_cocliques;
  bool p_forced = false;
  std::vector<int> forced_named;             // named vertices in every maximum coclique
  std::vector<ThetaSlot> slots;              // M(G), sorted by class index
  std::vector<std::vector<int>> theta_prime; // residues, sorted

  std::vector<unsigned> core_classes() const;
};

CocliqueReport report_from_graph(CompactGraph g);
CocliqueReport theta_structure(const GroupSpec& spec);

// Alternating groups: closed-form structure of Prop-style tau/tau'.
struct AltStructure {
  unsigned n = 0;
  std::vector<Integer> tau;
  Integer s_n;
  std::vector<Integer> tau_prime;
};
AltStructure alt_structure(unsigned n);

// Report for Alt_n from enumeration, asserted equal to the closed form.
CocliqueReport alt_report(unsigned n);

enum class CliqueComplement { Holds, Fails, NotApplicable };
CliqueComplement clique_complement_check(const GroupSpec& spec);

}  // namespace gk::cocliques
