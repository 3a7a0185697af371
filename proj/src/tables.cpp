#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gk/refdata.hpp"

// Expected rows of Tables 1-4, one record per printed row, tagged by table
// and row for traceability. Guards within one family partition the covered
// parameter space; expected() asserts that exactly one row matches.

namespace gk::refdata {

using cocliques::CocliqueReport;
using cocliques::Vertex;
using numth::nu_eps;

namespace {

Atom P() { return Atom::p(); }
Atom N(long v) { return Atom::named(Integer(v)); }
Atom S(unsigned i) { return Atom::slot(i); }

using Guard = std::function<bool()>;
struct Row {
  std::string id;
  Guard guard;
  std::function<ExpectedRow()> build;
};

ExpectedRow make(std::string id, int t, std::vector<Atom> theta,
                 std::vector<std::vector<Atom>> tp = {}) {
  ExpectedRow r;
  r.id = std::move(id);
  r.t = t;
  r.theta = std::move(theta);
  r.theta_prime = std::move(tp);
  return r;
}

ExpectedRow pick(const std::vector<Row>& rows, const std::string& ctx) {
  const Row* hit = nullptr;
  for (const auto& r : rows) {
    if (!r.guard()) continue;
    if (hit) throw std::logic_error("table guards overlap at " + ctx + ": " + hit->id + " vs " + r.id);
    hit = &r;
  }
  if (!hit) throw NoRowError("no table row covers " + ctx);
  return hit->build();
}

// ----- Table 1 ------------------------------------------------------------

ExpectedRow sporadic_row(const std::string& name) {
  struct T1 { const char* name; int t; std::vector<long> theta; std::vector<std::vector<long>> tp; };
  static const std::vector<T1> rows = {
      {"M11", 3, {5, 11}, {{2}, {3}}},
      {"M12", 3, {3, 5, 11}, {}},
      {"M22", 4, {5, 7, 11}, {{2}, {3}}},
      {"M23", 4, {11, 23}, {{2, 5}, {3, 7}}},
      {"M24", 4, {5, 7, 11, 23}, {}},
      {"J1", 4, {7, 11, 19}, {{2}, {3}, {5}}},
      {"J2", 2, {7}, {{2}, {3}, {5}}},
      {"J3", 3, {17, 19}, {{2}, {3}, {5}}},
      {"J4", 7, {11, 23, 29, 31, 37, 43}, {{5}, {7}}},
      {"Ru", 4, {7, 13, 29}, {{3}, {5}}},
      {"He", 3, {5, 7, 17}, {}},
      {"McL", 3, {7, 11}, {{3}, {5}}},
      {"HN", 3, {11, 19}, {{3}, {5}, {7}}},
      {"HiS", 3, {7, 11}, {{2}, {3}, {5}}},
      {"Suz", 4, {5, 7, 11, 13}, {}},
      {"Co1", 4, {11, 13, 23}, {{5}, {7}}},
      {"Co2", 4, {7, 11, 23}, {{3}, {5}}},
      {"Co3", 4, {5, 7, 11, 23}, {}},
      {"Fi22", 4, {5, 7, 11, 13}, {}},
      {"Fi23", 5, {11, 13, 17, 23}, {{5}, {7}}},
      {"Fi24'", 6, {11, 13, 17, 23, 29}, {{5}, {7}}},
      {"O'N", 5, {7, 11, 19, 31}, {{3}, {5}}},
      {"LyS", 6, {5, 7, 11, 31, 37, 67}, {}},
      {"F1", 11, {11, 13, 19, 23, 29, 31, 41, 47, 59, 71}, {{7}, {17}}},
      {"F2", 8, {7, 11, 13, 17, 19, 23, 31, 47}, {}},
      {"F3", 5, {5, 7, 13, 19, 31}, {}},
  };
  for (const auto& r : rows) {
    if (name != r.name) continue;
    std::vector<Atom> theta;
    for (long v : r.theta) theta.push_back(N(v));
    std::vector<std::vector<Atom>> tp;
    for (const auto& opt : r.tp) {
      std::vector<Atom> o;
      for (long v : opt) o.push_back(N(v));
      tp.push_back(std::move(o));
    }
    return make("T1/" + name, r.t, std::move(theta), std::move(tp));
  }
  throw NoRowError("no Table 1 row for " + name);
}

// ----- Table 2 ------------------------------------------------------------

bool is_power_of_two(const Integer& v) { return v > 0 && (v & (v - 1)) == 0; }

ExpectedRow linear_row(const GroupSpec& g) {
  const unsigned n = g.n;
  const int eps = g.eps();
  const Integer &q = g.q->q, &p = g.q->p;
  const Integer qe = q - eps;
  const bool tw = eps == -1;
  const std::string fam = tw ? "2A" : "A";
  auto NU = [&](unsigned j) { return nu_eps(j, eps); };
  auto ctx = g.display();
  const Integer share2 = qe % 2 == 0 ? numth::r_share(qe, 2).first : Integer(1);
  const Integer share3 = qe % 3 == 0 ? numth::r_share(qe, 3).first : Integer(1);
  const Integer share5 = qe % 5 == 0 ? numth::r_share(qe, 5).first : Integer(1);

  if (n == 2)
    return make("T2/A1", 3, {P(), S(1), S(2)});
  if (n == 3) {
    bool c3 = share3 == 3, twok = is_power_of_two(q + eps);
    std::vector<Row> rows = {
        {"T2/" + fam + "2/r1", [&] { return c3 && !twok; },
         [&] { return make("T2/" + fam + "2/r1", 4, {P(), N(3), S(NU(2)), S(NU(3))}); }},
        {"T2/" + fam + "2/r2", [&] { return c3 && twok; },
         [&] { return make("T2/" + fam + "2/r2", 3, {P(), N(3), S(NU(3))}); }},
        {"T2/" + fam + "2/r3", [&] { return !c3 && !twok; },
         [&] { return make("T2/" + fam + "2/r3", 3, {P(), S(NU(2)), S(NU(3))}); }},
        {"T2/" + fam + "2/r4", [&] { return !c3 && twok && !(tw && q == 3); },
         [&] { return make("T2/" + fam + "2/r4", 2, {S(NU(3))}, {{P()}, {S(NU(1))}, {N(2)}}); }},
        {"T2/2A2/q3", [&] { return tw && q == 3; },
         [&] { return make("T2/2A2/q3", 2, {S(NU(3))}, {{P()}, {N(2)}}); }},
    };
    return pick(rows, ctx);
  }
  if (n == 4) {
    bool cond = p != 2 && share2 == 4;
    std::vector<Row> rows = {
        {"T2/" + fam + "3/r1", [&] { return !cond && !(tw && q == 2); },
         [&] { return make("T2/" + fam + "3/r1", 3, {P(), S(NU(3)), S(NU(4))}); }},
        {"T2/" + fam + "3/r2", [&] { return cond; },
         [&] { return make("T2/" + fam + "3/r2", 3, {S(NU(3)), S(NU(4))}, {{P()}, {N(2)}}); }},
        {"T2/2A3/q2", [&] { return tw && q == 2; },
         [&] { return make("T2/2A3/q2", 2, {S(NU(4))}, {{P()}, {S(NU(1))}}); }},
    };
    return pick(rows, ctx);
  }
  if (n == 5) {
    bool cond = p != 5 && share5 == 5;
    std::vector<Row> rows = {
        {"T2/2A4/q2", [&] { return tw && q == 2; },
         [&] { return make("T2/2A4/q2", 3, {P(), S(NU(4)), S(NU(5))}); }},
        {"T2/" + fam + "4/r1", [&] { return !cond && !(tw && q == 2); },
         [&] { return make("T2/" + fam + "4/r1", 3, {S(NU(4)), S(NU(5))}, {{P()}, {S(NU(3))}}); }},
        {"T2/" + fam + "4/r2", [&] { return cond; },
         [&] {
           return make("T2/" + fam + "4/r2", 3, {S(NU(4)), S(NU(5))}, {{N(5)}, {P()}, {S(NU(3))}});
         }},
    };
    return pick(rows, ctx);
  }
  if (n == 6) {
    bool cond = p != 3 && share3 == 3;
    std::vector<Row> rows = {
        {"T2/A5/q2", [&] { return !tw && q == 2; },
         [&] { return make("T2/A5/q2", 3, {S(3), S(4), S(5)}); }},
        {"T2/2A5/q2", [&] { return tw && q == 2; },
         [&] { return make("T2/2A5/q2", 3, {S(10), S(3)}, {{N(3)}, {P()}, {S(4)}}); }},
        {"T2/" + fam + "5/r1", [&] { return q != 2 && !cond; },
         [&] {
           return make("T2/" + fam + "5/r1", 3, {S(NU(5))},
                       {{P(), S(NU(6))}, {S(NU(3)), S(NU(4))}, {S(NU(4)), S(NU(6))}});
         }},
        {"T2/" + fam + "5/r2", [&] { return q != 2 && cond; },
         [&] {
           return make("T2/" + fam + "5/r2", 3, {S(NU(5))},
                       {{P(), S(NU(6))}, {S(NU(3)), S(NU(4))}, {S(NU(4)), S(NU(6))},
                        {N(3), S(NU(6))}});
         }},
    };
    return pick(rows, ctx);
  }
  // n >= 7
  if (!tw && q == 2 && n <= 12) {
    switch (n) {
      case 7: return make("T2/A/n7q2", 3, {S(5), S(7)}, {{S(3)}, {S(4)}});
      case 8:
        return make("T2/A/n8q2", 3, {S(7)},
                    {{P(), S(8)}, {S(5), S(8)}, {S(3), S(8)}, {S(4), S(5)}});
      case 9: return make("T2/A/n9q2", 4, {S(5), S(7), S(8), S(9)});
      case 10:
        return make("T2/A/n10q2", 4, {S(7), S(9)}, {{S(4), S(10)}, {S(8), S(10)}, {S(5), S(8)}});
      case 11: return make("T2/A/n11q2", 5, {S(7), S(8), S(9), S(11)}, {{S(5)}, {S(10)}});
      case 12: return make("T2/A/n12q2", 6, {S(7), S(8), S(9), S(10), S(11), S(12)});
    }
  }
  auto I = index_set(g);
  std::vector<Atom> theta;
  int t = static_cast<int>((n + 1) / 2);
  if (n % 2 == 1) {
    for (unsigned i : I)
      if (2 * NU(i) > n && NU(i) <= n) theta.push_back(S(i));
    return make("T2/" + fam + "/odd", t, std::move(theta));
  }
  unsigned iH = 0, iN = 0;
  for (unsigned i : I) {
    if (NU(i) == n / 2) iH = i;
    if (NU(i) == n) iN = i;
    if (2 * NU(i) > n && NU(i) < n) theta.push_back(S(i));
  }
  return make("T2/" + fam + "/even", t, std::move(theta), {{S(iH)}, {S(iN)}});
}

// ----- Table 3 ------------------------------------------------------------

ExpectedRow classical_row(const GroupSpec& g) {
  const unsigned n = g.n;
  const Integer& q = g.q->q;
  auto I = index_set(g);
  auto slots_eta = [&](double lo, bool lo_strict, std::vector<unsigned> excl = {}) {
    std::vector<Atom> out;
    for (unsigned i : I) {
      double h = numth::eta(i);
      if (h > n) continue;
      if (lo_strict ? h <= lo : h < lo) continue;
      if (std::find(excl.begin(), excl.end(), i) != excl.end()) continue;
      out.push_back(S(i));
    }
    return out;
  };
  const std::string ctx = g.display();

  if (g.family == Family::B || g.family == Family::C) {
    int t_gen = static_cast<int>((3 * n + 5) / 4);
    std::vector<Row> rows = {
        {"T3/BC/n2q3", [&] { return n == 2 && q == 3; },
         [&] { return make("T3/BC/n2q3", 2, {S(4)}, {{P()}, {S(2)}}); }},
        {"T3/BC/n2", [&] { return n == 2 && q > 3; },
         [&] { return make("T3/BC/n2", 2, {S(4)}, {{P()}, {S(1)}, {S(2)}}); }},
        {"T3/BC/n3q2", [&] { return n == 3 && q == 2; },
         [&] { return make("T3/BC/n3q2", 2, {S(3)}, {{P()}, {S(2)}, {S(4)}}); }},
        {"T3/BC/n3", [&] { return n == 3 && q > 2; },
         [&] { return make("T3/BC/n3", 3, {S(3), S(6)}, {{P()}, {S(4)}}); }},
        {"T3/BC/n4q2", [&] { return n == 4 && q == 2; },
         [&] { return make("T3/BC/n4q2", 3, {S(3), S(4), S(8)}); }},
        {"T3/BC/n5q2", [&] { return n == 5 && q == 2; },
         [&] { return make("T3/BC/n5q2", 4, {S(5), S(8), S(10)}, {{S(3)}, {S(4)}}); }},
        {"T3/BC/n6q2", [&] { return n == 6 && q == 2; },
         [&] { return make("T3/BC/n6q2", 5, {S(3), S(5), S(8), S(10), S(12)}); }},
        {"T3/BC/n7q2", [&] { return n == 7 && q == 2; },
         [&] { return make("T3/BC/n7q2", 6, {S(5), S(7), S(10), S(12), S(14)}, {{S(3)}, {S(8)}}); }},
        {"T3/BC/mod01", [&] { return n > 3 && (n % 4 == 0 || n % 4 == 1) && !(q == 2 && n <= 5); },
         [&] { return make("T3/BC/mod01", t_gen, slots_eta(n / 2.0, false)); }},
        {"T3/BC/mod2", [&] { return n > 3 && n % 4 == 2 && !(q == 2 && n == 6); },
         [&] {
           return make("T3/BC/mod2", t_gen, slots_eta(n / 2.0, true), {{S(n / 2)}, {S(n)}});
         }},
        {"T3/BC/mod3", [&] { return n > 3 && n % 4 == 3 && !(q == 2 && n == 7); },
         [&] {
           return make("T3/BC/mod3", t_gen, slots_eta((n + 1) / 2.0, true),
                       {{S((n - 1) / 2)}, {S(n - 1)}, {S(n + 1)}});
         }},
    };
    return pick(rows, ctx);
  }
  if (g.family == Family::D) {
    int t_gen = static_cast<int>((3 * n + 1) / 4);
    std::vector<Row> rows = {
        {"T3/D/n4q2", [&] { return n == 4 && q == 2; },
         [&] { return make("T3/D/n4q2", 2, {S(3)}, {{P()}, {S(2)}, {S(4)}}); }},
        {"T3/D/n4", [&] { return n == 4 && q > 2; },
         [&] { return make("T3/D/n4", 3, {S(3), S(6)}, {{P()}, {S(4)}}); }},
        {"T3/D/n5q2", [&] { return n == 5 && q == 2; },
         [&] { return make("T3/D/n5q2", 4, {S(3), S(4), S(5), S(8)}); }},
        {"T3/D/n6q2", [&] { return n == 6 && q == 2; },
         [&] { return make("T3/D/n6q2", 4, {S(3), S(5), S(8), S(10)}); }},
        {"T3/D/mod0", [&] { return n > 4 && n % 4 == 0; },
         [&] { return make("T3/D/mod0", t_gen, slots_eta(n / 2.0, false)); }},
        {"T3/D/mod1", [&] { return n > 4 && n % 4 == 1 && !(q == 2 && n == 5); },
         [&] {
           return make("T3/D/mod1", t_gen, slots_eta(n / 2.0, true, {n + 1}),
                       {{S(n - 1)}, {S(n + 1)}});
         }},
        {"T3/D/mod2", [&] { return n > 4 && n % 4 == 2 && !(q == 2 && n == 6); },
         [&] { return make("T3/D/mod2", t_gen, slots_eta(n / 2.0, true), {{S(n / 2)}, {S(n)}}); }},
        {"T3/D/mod3", [&] { return n > 4 && n % 4 == 3; },
         [&] {
           return make("T3/D/mod3", static_cast<int>((3 * n + 3) / 4),
                       slots_eta((n - 1) / 2.0, false, {n - 1}));
         }},
    };
    return pick(rows, ctx);
  }
  // 2D
  int t_gen = static_cast<int>((3 * n + 4) / 4);
  std::vector<Row> rows = {
      {"T3/2D/n4q2", [&] { return n == 4 && q == 2; },
       [&] { return make("T3/2D/n4q2", 3, {S(3), S(8)}, {{P()}, {S(4)}}); }},
      {"T3/2D/n4", [&] { return n == 4 && q > 2; },
       [&] { return make("T3/2D/n4", 4, {S(3), S(6), S(8)}, {{P()}, {S(4)}}); }},
      {"T3/2D/n5q2", [&] { return n == 5 && q == 2; },
       [&] { return make("T3/2D/n5q2", 3, {S(8), S(10)}, {{P()}, {S(3)}, {S(4)}}); }},
      {"T3/2D/n6q2", [&] { return n == 6 && q == 2; },
       [&] { return make("T3/2D/n6q2", 5, {S(5), S(8), S(10), S(12)}, {{S(3)}, {S(4)}}); }},
      {"T3/2D/n7q2", [&] { return n == 7 && q == 2; },
       [&] { return make("T3/2D/n7q2", 5, {S(5), S(10), S(12), S(14)}, {{S(3)}, {S(8)}}); }},
      {"T3/2D/mod0", [&] { return n > 4 && n % 4 == 0; },
       [&] { return make("T3/2D/mod0", t_gen, slots_eta(n / 2.0, false)); }},
      {"T3/2D/mod1", [&] { return n > 4 && n % 4 == 1 && !(q == 2 && n == 5); },
       [&] {
         return make("T3/2D/mod1", t_gen, slots_eta(n / 2.0, true, {(n + 1) / 2}),
                     {{S((n + 1) / 2)}, {S(n - 1)}});
       }},
      {"T3/2D/mod2", [&] { return n > 4 && n % 4 == 2 && !(q == 2 && n == 6); },
       [&] {
         return make("T3/2D/mod2", t_gen, slots_eta(n / 2.0, true),
                     {{S(n / 2)}, {S(n - 2)}, {S(n)}});
       }},
      {"T3/2D/mod3", [&] { return n > 4 && n % 4 == 3 && !(q == 2 && n == 7); },
       [&] {
         return make("T3/2D/mod3", t_gen, slots_eta((n - 1) / 2.0, false, {(n - 1) / 2}));
       }},
  };
  return pick(rows, ctx);
}

// ----- Table 4 ------------------------------------------------------------

ExpectedRow exceptional_row(const GroupSpec& g) {
  const Integer &q = g.q->q, &p = g.q->p;
  const std::string ctx = g.display();
  switch (g.family) {
    case Family::G2: {
      std::vector<Row> rows = {
          {"T4/G2/q34", [&] { return q == 3 || q == 4; },
           [&] { return make("T4/G2/q34", 3, {S(3), S(6)}, {{P()}, {S(2)}}); }},
          {"T4/G2/q8", [&] { return q == 8; },
           [&] { return make("T4/G2/q8", 3, {S(3), S(6)}, {{P()}, {S(1)}}); }},
          {"T4/G2/3m", [&] { return p == 3 && q > 3; },
           [&] { return make("T4/G2/3m", 3, {S(3), S(6)}, {{P()}, {S(1)}, {S(2)}}); }},
          {"T4/G2/q1mod3", [&] { return q % 3 == 1 && q != 4; },
           [&] { return make("T4/G2/q1mod3", 3, {S(3), S(6)}, {{P()}, {S(2)}, {S(1)}}); }},
          {"T4/G2/q2mod3", [&] { return q % 3 == 2 && q != 8; },
           [&] { return make("T4/G2/q2mod3", 3, {S(3), S(6)}, {{P()}, {S(1)}, {S(2)}}); }},
      };
      return pick(rows, ctx);
    }
    case Family::F4:
      if (q == 2) return make("T4/F4/q2", 4, {S(3), S(4), S(8), S(12)});
      return make("T4/F4", 5, {S(3), S(4), S(6), S(8), S(12)});
    case Family::E6:
      if (q == 2) return make("T4/E6/q2", 5, {S(4), S(5), S(8), S(9)}, {{S(3)}, {S(12)}});
      return make("T4/E6", 5, {S(5), S(8), S(9)}, {{S(3), S(4)}, {S(4), S(12)}, {S(6), S(12)}});
    case Family::TwoE6:
      if (q == 2) return make("T4/2E6/q2", 5, {S(8), S(10), S(12), S(18)}, {{S(3)}, {S(4)}});
      return make("T4/2E6", 5, {S(8), S(10), S(18)}, {{S(3), S(12)}, {S(4), S(6)}, {S(4), S(12)}});
    case Family::E7:
      return make("T4/E7", 8, {S(5), S(7), S(9), S(10), S(12), S(14), S(18)}, {{S(4)}, {S(8)}});
    case Family::E8:
      return make("T4/E8", 12,
                  {S(5), S(7), S(8), S(9), S(10), S(12), S(14), S(15), S(18), S(20), S(24), S(30)});
    case Family::ThreeD4:
      if (q == 2) return make("T4/3D4/q2", 2, {S(12)}, {{P()}, {S(2)}, {S(3)}});
      return make("T4/3D4", 3, {S(3), S(6), S(12)});
    case Family::TwoB2:
      return make("T4/2B2", 4, {P(), S(1), S(2), S(3)});
    case Family::TwoG2:
      return make("T4/2G2", 5, {P(), S(1), S(2), S(3), S(4)});
    case Family::TwoF4:
      if (q == 8)
        return make("T4/2F4/q8", 4, {S(5), S(6)},
                    {{N(3), S(3)}, {S(1), S(4)}, {P(), S(4)}, {S(3), S(4)}});
      return make("T4/2F4", 5, {S(2), S(3), S(4), S(5), S(6)});
    case Family::Tits:
      return make("T4/Tits", 3, {N(3), N(5), N(13)});
    default:
      throw NoRowError("not an exceptional family: " + ctx);
  }
}

}  // namespace

ExpectedRow expected(const GroupSpec& g) {
  switch (g.family) {
    case Family::Sporadic: return sporadic_row(g.sporadic_name);
    case Family::Tits: return exceptional_row(g);
    case Family::A:
    case Family::TwoA:
      if (g.n > 13) throw NoRowError("A-family coverage ends at n = 13");
      if (g.q->q > 128) throw NoRowError("coverage ends at q = 128");
      return linear_row(g);
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
      if (g.n > 19) throw NoRowError("classical coverage ends at rank 19");
      if (g.q->q > 128) throw NoRowError("coverage ends at q = 128");
      return classical_row(g);
    case Family::Alt:
      throw NoRowError("alternating groups are covered by the closed form, not a table row");
    default:
      if (g.q->q > 128) throw NoRowError("coverage ends at q = 128");
      return exceptional_row(g);
  }
}

// ----- verification --------------------------------------------------------

namespace {

std::string coclique_to_string(const cocliques::CompactGraph& g, const std::vector<int>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += g.vertices[set[i]].label();
  }
  return out + "}";
}

// Vertex candidates for one atom of a row, against the concrete graph.
std::vector<int> atom_vertices(const CocliqueReport& rep, const Atom& a) {
  const auto& g = rep.graph;
  std::vector<int> out;
  switch (a.t) {
    case Atom::T::P:
      for (size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].kind == Vertex::Kind::Char) out.push_back(static_cast<int>(v));
      break;
    case Atom::T::Named:
      for (size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].kind == Vertex::Kind::Named && g.vertices[v].prime == a.prime)
          out.push_back(static_cast<int>(v));
      break;
    case Atom::T::Slot:
      for (size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& vx = g.vertices[v];
        if (vx.kind == Vertex::Kind::Class && vx.index == a.index) out.push_back(static_cast<int>(v));
        // Only the A2-family slots admit a named prime (3) standing in for its
        // class; everywhere else the tables' r_i ranges over the residual class.
        bool a2 = (rep.spec.family == Family::A || rep.spec.family == Family::TwoA) &&
                  rep.spec.n == 3;
        if (a2 && vx.kind == Vertex::Kind::Named && vx.index == a.index && vx.prime != 2)
          out.push_back(static_cast<int>(v));
      }
      break;
  }
  return out;
}

void expand(const CocliqueReport& rep, const std::vector<Atom>& atoms, size_t i,
            std::vector<int>& cur, std::set<std::vector<int>>& out,
            const std::vector<int>& base) {
  if (i == atoms.size()) {
    std::vector<int> full = base;
    full.insert(full.end(), cur.begin(), cur.end());
    std::sort(full.begin(), full.end());
    out.insert(std::move(full));
    return;
  }
  for (int v : atom_vertices(rep, atoms[i])) {
    cur.push_back(v);
    expand(rep, atoms, i + 1, cur, out, base);
    cur.pop_back();
  }
}

}  // namespace

Diff verify_report(const CocliqueReport& rep) {
  Diff d;
  ExpectedRow row = expected(rep.spec);
  d.row_id = row.id;

  // Expand the row into its predicted set of maximum cocliques.
  std::set<std::vector<int>> predicted;
  std::set<std::vector<int>> cores;
  {
    std::vector<int> cur;
    std::set<std::vector<int>> cs;
    expand(rep, row.theta, 0, cur, cs, {});
    cores = std::move(cs);
  }
  if (cores.empty()) {
    d.match = false;
    d.detail = "row theta cannot be instantiated (missing class or named prime)";
    return d;
  }
  if (row.theta_prime.empty()) {
    predicted = cores;
  } else {
    for (const auto& core : cores)
      for (const auto& opt : row.theta_prime) {
        std::vector<int> cur;
        expand(rep, opt, 0, cur, predicted, core);
      }
  }
  // drop degenerate instantiations where an atom had no vertex
  size_t want = row.theta.size() + (row.theta_prime.empty() ? 0 : row.theta_prime.front().size());
  (void)want;
  std::set<std::vector<int>> cleaned;
  for (const auto& s : predicted)
    if (static_cast<int>(s.size()) == row.t) cleaned.insert(s);
  predicted = std::move(cleaned);

  std::set<std::vector<int>> got(rep.max_cocliques.begin(), rep.max_cocliques.end());
  if (rep.t != row.t || got != predicted) {
    d.match = false;
    std::ostringstream os;
    os << "expected t=" << row.t << " got t=" << rep.t << "; ";
    os << "row " << row.id << " predicts {";
    for (const auto& s : predicted) os << coclique_to_string(rep.graph, s) << " ";
    os << "} computed {";
    for (const auto& s : got) os << coclique_to_string(rep.graph, s) << " ";
    os << "}";
    d.detail = os.str();
  }
  return d;
}

Diff verify(const GroupSpec& spec) { return verify_report(cocliques::theta_structure(spec)); }

}  // namespace gk::refdata
