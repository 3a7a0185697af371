#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/cocliques.hpp"
#include "gk/groupspec.hpp"

namespace gk::refdata {

// One sporadic group: maximal element orders from the ATLAS-derived data
// file. r ~ s in GK(G) iff rs divides some listed order.
struct SporadicRecord {
  std::string name;
  std::vector<Integer> max_orders;
  std::vector<Integer> primes() const;
  bool adjacent(const Integer& r, const Integer& s) const;
};

const SporadicRecord& sporadic_record(std::string_view name);
cocliques::CompactGraph sporadic_graph(std::string_view name);

// Expected-row atoms, in the tables' notation: the characteristic p, a named
// prime, or a one-per-class slot r_i.
struct Atom {
  enum class T { P, Named, Slot } t{};
  Integer prime;      // Named
  unsigned index = 0; // Slot
  static Atom p() { return {T::P, 0, 0}; }
  static Atom named(Integer v) { return {T::Named, std::move(v), 0}; }
  static Atom slot(unsigned i) { return {T::Slot, 0, i}; }
};

struct ExpectedRow {
  std::string id;  // table/row tag, e.g. "T3/2D/n=5,q=2"
  int t = 0;
  std::vector<Atom> theta;                  // forced atoms and slots
  std::vector<std::vector<Atom>> theta_prime;
};

// The unique Table 1-4 row covering the spec; throws NoRowError outside the
// encoded coverage.
class NoRowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
ExpectedRow expected(const GroupSpec& spec);

struct Diff {
  bool match = true;
  std::string row_id;
  std::string detail;  // empty on success
};

// Structural comparison of the computed report against the expected row:
// the row is expanded to the exact set of maximum cocliques it predicts
// (over the spec's concrete class/named-prime inventory) and compared with
// the enumeration.
Diff verify(const GroupSpec& spec);
Diff verify_report(const cocliques::CocliqueReport& rep);

}  // namespace gk::refdata
