#include "gk/groupspec.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace gk {

using numth::PrimePower;

namespace {

struct FamilyInfo {
  Family fam;
  bool has_n, has_q;
};

const std::map<std::string, FamilyInfo, std::less<>>& family_table() {
  static const std::map<std::string, FamilyInfo, std::less<>> t = {
      {"Alt", {Family::Alt, true, false}},   {"Spor", {Family::Sporadic, false, false}},
      {"Tits", {Family::Tits, false, false}},
      {"A", {Family::A, true, true}},        {"2A", {Family::TwoA, true, true}},
      {"B", {Family::B, true, true}},        {"C", {Family::C, true, true}},
      {"D", {Family::D, true, true}},        {"2D", {Family::TwoD, true, true}},
      {"G2", {Family::G2, false, true}},     {"F4", {Family::F4, false, true}},
      {"E6", {Family::E6, false, true}},     {"2E6", {Family::TwoE6, false, true}},
      {"E7", {Family::E7, false, true}},     {"E8", {Family::E8, false, true}},
      {"3D4", {Family::ThreeD4, false, true}},
      {"2B2", {Family::TwoB2, false, true}}, {"2G2", {Family::TwoG2, false, true}},
      {"2F4", {Family::TwoF4, false, true}},
  };
  return t;
}

unsigned parse_uint(std::string_view s, const char* what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw SpecError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

PrimePower parse_q(std::string_view s) {
  auto caret = s.find('^');
  try {
    if (caret != std::string_view::npos) {
      Integer p(std::string(s.substr(0, caret)));
      unsigned a = parse_uint(s.substr(caret + 1), "exponent");
      return PrimePower::make(p, a);
    }
    return PrimePower::decompose(Integer(std::string(s)));
  } catch (const std::exception& e) {
    throw SpecError(std::string("invalid prime power '") + std::string(s) + "': " + e.what());
  }
}

void check_gates(GroupSpec& g) {
  const auto qv = g.q ? g.q->q : Integer(0);
  switch (g.family) {
    case Family::Alt:
      if (g.n < 5) throw SpecError("Alt_n requires n >= 5");
      break;
    case Family::Sporadic: {
      const auto& names = sporadic_names();
      if (std::find(names.begin(), names.end(), g.sporadic_name) == names.end())
        throw SpecError("unknown sporadic group '" + g.sporadic_name + "'");
      break;
    }
    case Family::A:
    case Family::TwoA:
      // n already converted from the subscript to the dimension
      if (g.n < 2) throw SpecError("A-family needs subscript >= 1");
      if (g.n == 2 && g.family == Family::TwoA)
        throw SpecError("2A_1(q) is not a distinct simple group; use A:1:q");
      if (g.n == 2 && qv <= 3) throw SpecError("A_1(q) is not simple (or not in scope) for q <= 3");
      if (g.n == 3 && g.family == Family::TwoA && qv == 2)
        throw SpecError("2A_2(2) is not simple");
      break;
    case Family::B:
    case Family::C:
      if (g.n < 2) throw SpecError("B_n/C_n requires n >= 2");
      if (g.n == 2 && qv == 2) throw SpecError("B_2(2) is not simple");
      break;
    case Family::D:
    case Family::TwoD:
      if (g.n < 4) throw SpecError("D-family requires n >= 4");
      break;
    case Family::G2:
      if (qv < 3) throw SpecError("G_2(2) is not simple");
      break;
    case Family::ThreeD4:
      break;
    case Family::TwoB2:
      if (g.q->p != 2 || g.q->alpha < 3 || g.q->alpha % 2 == 0)
        throw SpecError("2B2 requires q = 2^(2m+1), m >= 1");
      break;
    case Family::TwoG2:
      if (g.q->p != 3 || g.q->alpha < 3 || g.q->alpha % 2 == 0)
        throw SpecError("2G2 requires q = 3^(2m+1), m >= 1");
      break;
    case Family::TwoF4:
      if (g.q->p != 2 || g.q->alpha % 2 == 0)
        throw SpecError("2F4 requires q = 2^(2m+1)");
      if (g.q->alpha == 1)
        throw SpecError("2F4(2) is not simple; its derived subgroup is the Tits group (use 'Tits')");
      break;
    default:
      break;
  }
}

}  // namespace

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = {
      "M11", "M12", "M22", "M23", "M24", "J1",  "J2",   "J3",   "J4",
      "Ru",  "He",  "McL", "HN",  "HiS", "Suz", "Co1",  "Co2",  "Co3",
      "Fi22", "Fi23", "Fi24'", "O'N", "LyS", "F1", "F2", "F3"};
  return names;
}

GroupSpec parse_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  for (size_t pos = 0; pos <= text.size();) {
    auto next = text.find(':', pos);
    if (next == std::string_view::npos) next = text.size();
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.empty() || parts[0].empty()) throw SpecError("empty group string");
  auto it = family_table().find(parts[0]);
  if (it == family_table().end())
    throw SpecError("unknown family '" + std::string(parts[0]) + "'");
  const auto& info = it->second;
  GroupSpec g;
  g.family = info.fam;
  size_t idx = 1;
  if (g.family == Family::Sporadic) {
    if (parts.size() != 2) throw SpecError("usage: Spor:NAME");
    std::string name(parts[1]);
    // common aliases
    if (name == "HS") name = "HiS";
    if (name == "ON") name = "O'N";
    if (name == "Fi24" || name == "Fi24prime") name = "Fi24'";
    if (name == "Ly") name = "LyS";
    if (name == "M" || name == "Monster") name = "F1";
    if (name == "B" || name == "BM") name = "F2";
    if (name == "Th") name = "F3";
    g.sporadic_name = name;
    check_gates(g);
    return g;
  }
  if (info.has_n) {
    if (idx >= parts.size()) throw SpecError("missing rank/degree");
    g.n = parse_uint(parts[idx++], "rank/degree");
  }
  if (info.has_q) {
    if (idx >= parts.size()) throw SpecError("missing field size q");
    g.q = parse_q(parts[idx++]);
  }
  if (idx != parts.size()) throw SpecError("trailing components in group string");
  if (g.family == Family::A || g.family == Family::TwoA) g.n += 1;  // subscript -> dimension
  check_gates(g);
  return g;
}

std::string GroupSpec::display() const {
  switch (family) {
    case Family::Alt: return "Alt_" + std::to_string(n);
    case Family::Sporadic: return sporadic_name;
    case Family::Tits: return "2F4(2)'";
    default: break;
  }
  std::string fam;
  unsigned sub = n;
  switch (family) {
    case Family::A: fam = "A"; sub = n - 1; break;
    case Family::TwoA: fam = "2A"; sub = n - 1; break;
    case Family::B: fam = "B"; break;
    case Family::C: fam = "C"; break;
    case Family::D: fam = "D"; break;
    case Family::TwoD: fam = "2D"; break;
    case Family::G2: return "G2(" + q->q.str() + ")";
    case Family::F4: return "F4(" + q->q.str() + ")";
    case Family::E6: return "E6(" + q->q.str() + ")";
    case Family::TwoE6: return "2E6(" + q->q.str() + ")";
    case Family::E7: return "E7(" + q->q.str() + ")";
    case Family::E8: return "E8(" + q->q.str() + ")";
    case Family::ThreeD4: return "3D4(" + q->q.str() + ")";
    case Family::TwoB2: return "2B2(" + q->q.str() + ")";
    case Family::TwoG2: return "2G2(" + q->q.str() + ")";
    case Family::TwoF4: return "2F4(" + q->q.str() + ")";
    default: return "?";
  }
  return fam + "_" + std::to_string(sub) + "(" + q->q.str() + ")";
}

namespace {

std::vector<unsigned> exceptional_indices(Family f, int eps) {
  using V = std::vector<unsigned>;
  switch (f) {
    case Family::G2: return V{1, 2, 3, 6};
    case Family::F4: return V{1, 2, 3, 4, 6, 8, 12};
    case Family::E6:
    case Family::TwoE6: {
      V base{1, 2, 3, 4, 5, 6, 8, 9, 12}, out;
      for (unsigned i : base) out.push_back(numth::nu_eps(i, eps));
      std::sort(out.begin(), out.end());
      return out;
    }
    case Family::E7: return V{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    case Family::E8: return V{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30};
    case Family::ThreeD4: return V{1, 2, 3, 6, 12};
    default: throw std::logic_error("not an exceptional family");
  }
}

numth::SRFamily sr_family(Family f) {
  switch (f) {
    case Family::TwoB2: return numth::SRFamily::Sz2B2;
    case Family::TwoG2: return numth::SRFamily::Ree2G2;
    case Family::TwoF4: return numth::SRFamily::Ree2F4;
    default: throw std::logic_error("not a Suzuki/Ree family");
  }
}

}  // namespace

std::vector<unsigned> index_set(const GroupSpec& g) {
  if (!g.is_lie()) throw SpecError("index_set: Lie-type groups only");
  const int eps = g.eps();
  std::vector<unsigned> out;
  if (g.is_suzuki_ree()) {
    auto f = sr_family(g.family);
    for (unsigned i = 1; i <= numth::suzuki_ree_count(f); ++i)
      if (numth::suzuki_ree_class_core(f, g.sr_tower(), i) > 1) out.push_back(i);
    return out;
  }
  const Integer& q = g.q->q;
  switch (g.family) {
    case Family::A:
    case Family::TwoA:
      for (unsigned i = 1; i <= 2 * g.n + 2; ++i)
        if (numth::nu_eps(i, eps) <= g.n && numth::class_nonempty(i, q)) out.push_back(i);
      break;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
      for (unsigned i = 1; i <= 2 * g.n; ++i) {
        if (numth::eta(i) > g.n) continue;
        if (g.family == Family::D && i == 2 * g.n) continue;
        if (g.family == Family::TwoD && g.n % 2 == 1 && i == g.n) continue;
        if (numth::class_nonempty(i, q)) out.push_back(i);
      }
      break;
    default:
      for (unsigned i : exceptional_indices(g.family, eps))
        if (numth::class_nonempty(i, q)) out.push_back(i);
      break;
  }
  return out;
}

namespace {

// Largest divisor of x supported on the prime r.
Integer share_of(const Integer& x, const Integer& r) {
  return numth::r_share(x, r).first;
}

}  // namespace

ClassPartition partition(const GroupSpec& g) {
  if (!g.is_lie()) throw SpecError("partition: Lie-type groups only");
  ClassPartition part;
  part.characteristic = g.q->p;
  part.index_set = index_set(g);
  const int eps = g.eps();
  const Integer& q = g.q->q;
  const Integer& p = g.q->p;

  if (g.is_suzuki_ree()) {
    part.class_kind = 'S';
    auto f = sr_family(g.family);
    for (unsigned i : part.index_set) {
      part.classes.push_back({i, numth::suzuki_ree_class_core(f, g.sr_tower(), i), true});
      part.high_band.push_back(i);
    }
    if (g.family == Family::TwoG2) part.special_primes.push_back({2, 0});
    if (g.family == Family::TwoF4) {
      part.special_primes.push_back({3, 0});
      // S_1 sits in the clique with 2; the rest form the coclique band.
      std::erase(part.high_band, 1u);
    }
    return part;
  }

  for (unsigned i : part.index_set)
    part.classes.push_back({i, numth::greatest_primitive_divisor(i, q), true});

  auto add_special = [&](const Integer& r) {
    part.special_primes.push_back({r, numth::e_order(r, q)});
  };
  const Integer qe = q - eps;  // q - eps*1
  switch (g.family) {
    case Family::A:
    case Family::TwoA:
      if (g.n == 3) {
        if (p != 2) add_special(2);
        if (p != 3) add_special(3);
      } else if (g.n == 4) {
        if (p != 2 && share_of(qe, 2) == 4) add_special(2);
      } else if (g.n == 5) {
        if (qe % 5 == 0 && share_of(qe, 5) == 5) add_special(5);
      } else if (g.n == 6) {
        if (qe % 3 == 0 && share_of(qe, 3) == 3) add_special(3);
      }
      break;
    case Family::G2:
    case Family::E6:
    case Family::TwoE6:
      if (p != 3) add_special(3);
      break;
    case Family::F4:
      if (p != 2) add_special(2);
      break;
    case Family::E8:
      if (p != 5 && numth::mult_order(5, q) == 4) add_special(5);
      break;
    default:
      break;
  }

  // N(G): the classes outside the asserted xi-clique.
  auto band = [&](unsigned i) {
    switch (g.family) {
      case Family::A:
      case Family::TwoA: {
        unsigned v = numth::nu_eps(i, eps);
        return 2 * v > g.n && v <= g.n;
      }
      case Family::B:
      case Family::C:
      case Family::D:
      case Family::TwoD: {
        unsigned h = numth::eta(i);
        return 2 * h > g.n && h <= g.n;
      }
      case Family::G2: return i == 3 || i == 6;
      case Family::F4: return i == 4 || i == 6 || i == 8 || i == 12;
      case Family::E6:
      case Family::TwoE6: {
        unsigned v = numth::nu_eps(i, eps);  // role index in the untwisted labeling
        return v == 4 || v == 5 || v == 8 || v == 9 || v == 12;
      }
      case Family::E7: return i >= 5 && i != 6;
      case Family::E8: return i >= 5 && i != 6;
      case Family::ThreeD4: return i == 3 || i == 6 || i == 12;
      default: return false;
    }
  };
  for (unsigned i : part.index_set)
    if (band(i)) part.high_band.push_back(i);
  return part;
}

std::vector<Integer> alt_pi(unsigned n) {
  if (n < 5) throw SpecError("alt_pi: n >= 5");
  std::vector<bool> sieve(n + 1, true);
  std::vector<Integer> out;
  for (unsigned i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.emplace_back(i);
    for (unsigned long j = static_cast<unsigned long>(i) * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace gk
