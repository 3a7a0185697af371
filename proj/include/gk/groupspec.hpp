#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gk/numth.hpp"

namespace gk {

enum class Family {
  Alt, Sporadic, Tits,
  A, TwoA,        // A_{n-1}(q) and 2A_{n-1}(q), stored with n = dimension
  B, C, D, TwoD,  // rank n
  G2, F4, E6, TwoE6, E7, E8, ThreeD4,
  TwoB2, TwoG2, TwoF4,  // Suzuki/Ree, q = p^(2m+1)
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  Family family{};
  unsigned n = 0;  // Alt degree, classical rank, A-family dimension; 0 if fixed rank
  std::optional<numth::PrimePower> q;
  std::string sporadic_name;

  int eps() const {
    return (family == Family::TwoA || family == Family::TwoD || family == Family::TwoE6) ? -1 : 1;
  }
  bool is_lie() const {
    return family != Family::Alt && family != Family::Sporadic && family != Family::Tits;
  }
  bool is_suzuki_ree() const {
    return family == Family::TwoB2 || family == Family::TwoG2 || family == Family::TwoF4;
  }
  // Tower parameter m for Suzuki/Ree: q = p^(2m+1).
  unsigned sr_tower() const { return (q->alpha - 1) / 2; }
  std::string display() const;
};

// Grammar: FAMILY[:n][:q] with q either a plain integer (decomposed) or p^a.
// Examples: "B:4:3", "2A:5:4", "E8:7", "Alt:19", "Spor:M23", "Tits".
// The A-family subscript is the group's subscript: "A:5:2" is A_5(2), stored
// with n = 6 (the dimension).
GroupSpec parse_spec(std::string_view text);

// All 26 sporadic names in Table order (canonical spellings used by the CLI).
const std::vector<std::string>& sporadic_names();

// I(G) for Lie-type specs: the class indices with nonempty R_i (or S_i).
std::vector<unsigned> index_set(const GroupSpec& spec);

struct ClassEntry {
  unsigned index = 0;       // i of R_i / S_i
  Integer witness;          // k_i(q), or the reduced m_i for Suzuki/Ree
  bool nonempty = false;
};

struct SpecialPrime {
  Integer prime;
  unsigned host = 0;  // class index the prime belongs to; 0 = standalone
};

struct ClassPartition {
  std::optional<Integer> characteristic;
  char class_kind = 'R';  // 'S' for Suzuki/Ree
  std::vector<ClassEntry> classes;        // nonempty classes over I(G)
  std::vector<SpecialPrime> special_primes;
  std::vector<unsigned> index_set;
  std::vector<unsigned> high_band;        // N(G): classes outside the xi-clique
};

ClassPartition partition(const GroupSpec& spec);

// pi(Alt_n) = primes <= n, for n >= 5.
std::vector<Integer> alt_pi(unsigned n);

}  // namespace gk
