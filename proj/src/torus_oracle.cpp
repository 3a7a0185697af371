#include "gk/torus_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace gk::torus_oracle {

using numth::PrimePower;

namespace {

void partitions_rec(unsigned n, unsigned maxpart, std::vector<unsigned>& cur,
                    const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (n == 0) { emit(cur); return; }
  for (unsigned part = std::min(n, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, emit);
    cur.pop_back();
  }
}

void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& emit) {
  std::vector<unsigned> cur;
  partitions_rec(n, n, cur, emit);
}

std::vector<Integer> sorted_unique(std::set<Integer>&& s) {
  return {s.begin(), s.end()};
}

}  // namespace

bool TorusOrderSet::contains_multiple(const Integer& d) const {
  for (const auto& o : orders)
    if (o % d == 0) return true;
  return false;
}

TorusOrderSet torus_orders_bc(unsigned n, const PrimePower& q) {
  const Integer& qq = q.q;
  Integer denom = igcd(Integer(2), qq - 1);
  std::set<Integer> out;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    unsigned m = parts.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Integer v = 1;
      for (unsigned i = 0; i < m; ++i) {
        Integer f = ipow(qq, parts[i]);
        v *= (mask >> i & 1) ? Integer(f + 1) : Integer(f - 1);
      }
      out.insert(v / denom);
    }
  });
  return {sorted_unique(std::move(out))};
}

TorusOrderSet torus_orders_d(unsigned n, int eps, const PrimePower& q) {
  const Integer& qq = q.q;
  Integer denom = igcd(Integer(4), ipow(qq, n) - eps);
  std::set<Integer> out;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    unsigned m = parts.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      // sign convention: bit set = factor (q^k + 1) = sign -1 in q^k - e_i
      int prod = (std::popcount(mask) % 2 == 0) ? 1 : -1;
      if (prod != eps) continue;
      Integer v = 1;
      for (unsigned i = 0; i < m; ++i) {
        Integer f = ipow(qq, parts[i]);
        v *= (mask >> i & 1) ? Integer(f + 1) : Integer(f - 1);
      }
      out.insert(v / denom);
    }
  });
  return {sorted_unique(std::move(out))};
}

namespace {

// Shared expansion of the (q^3 +- 1)^a (q^3 -+ 1)^b (q^2+1)^c (q+1)^d (q-1)^e
// family with per-combination exclusions. deg3 weight 3, deg2 weight 2.
template <typename Emit, typename Excluded>
void expand_cubic_family(const Integer& q, unsigned total, Emit emit, Excluded excluded) {
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; a + b <= 2; ++b) {
      if (a + b < 1) continue;
      if (3 * (a + b) > total) continue;
      for (unsigned c = 0; 3 * (a + b) + 2 * c <= total; ++c)
        for (unsigned d = 0; 3 * (a + b) + 2 * c + d <= total; ++d) {
          unsigned e = total - 3 * (a + b) - 2 * c - d;
          if (excluded(a, b, c, d, e)) continue;
          Integer v = ipow(q * q * q + 1, a) * ipow(q * q * q - 1, b) *
                      ipow(q * q + 1, c) * ipow(q + 1, d) * ipow(q - 1, e);
          emit(v);
        }
    }
}

std::set<Integer> e7_orders(const Integer& q) {
  std::set<Integer> m;
  auto add = [&](const Integer& v) { m.insert(v); };
  // (q+1)^a (q-1)^b, a+b=7
  for (unsigned a = 0; a <= 7; ++a) add(ipow(q + 1, a) * ipow(q - 1, 7 - a));
  // (q^2+1)^a (q+1)^b (q-1)^c, 1<=a<=2, 2a+b+c=7, m != (q^2+1)(q+-1)^5
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 0; 2 * a + b <= 7; ++b) {
      unsigned c = 7 - 2 * a - b;
      if (a == 1 && (b == 5 || c == 5)) continue;
      add(ipow(q * q + 1, a) * ipow(q + 1, b) * ipow(q - 1, c));
    }
  expand_cubic_family(q, 7, add, [](unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    if (a == 1 && b == 0 && c == 0 && d == 0 && e == 4) return true;  // (q^3+1)(q-1)^4
    if (a == 0 && b == 1 && c == 0 && d == 4 && e == 0) return true;  // (q^3-1)(q+1)^4
    if (c == 2 && a + b == 1 && d == 0 && e == 0) return true;        // (q^3+-1)(q^2+1)^2
    if (a == 1 && b == 0 && c == 1 && d == 2 && e == 0) return true;  // (q^3+1)(q^2+1)(q+1)^2
    if (a == 0 && b == 1 && c == 1 && d == 0 && e == 2) return true;  // (q^3-1)(q^2+1)(q-1)^2
    return false;
  });
  const Integer q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q5 = q4 * q, q6 = q3 * q3, q7 = q6 * q;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) add((q4 + 1) * (q2 - s1) * (q - s2));
  for (int s : {1, -1}) add((q5 - s) * (q2 - 1));
  for (int e : {1, -1}) add((q5 + e) * (q + e) * (q + e));
  for (int s : {1, -1}) add(q7 - s);
  for (int e : {1, -1}) add((q - e) * ipow(q2 + e * q + 1, 3));
  for (int e : {1, -1}) add((q5 - e) * (q2 + e * q + 1));
  for (int s : {1, -1}) add((q3 - s) * (q4 - q2 + 1));
  for (int e : {1, -1}) add((q - e) * (q6 + e * q3 + 1));
  for (int e : {1, -1}) add((q3 - e) * ipow(q2 - e * q + 1, 2));
  return m;
}

std::set<Integer> e8_orders(const Integer& q) {
  std::set<Integer> out;
  auto add = [&](const Integer& v) { out.insert(v); };
  for (unsigned a = 0; a <= 8; ++a) add(ipow(q + 1, a) * ipow(q - 1, 8 - a));
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = 0; 2 * a + b <= 8; ++b) {
      unsigned c = 8 - 2 * a - b;
      if (a == 3 && (b == 2 || c == 2)) continue;  // (q^2+1)^3 (q+-1)^2
      if (a == 1 && (b == 6 || c == 6)) continue;  // (q^2+1)(q+-1)^6
      add(ipow(q * q + 1, a) * ipow(q + 1, b) * ipow(q - 1, c));
    }
  expand_cubic_family(q, 8, add, [](unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    if (a + b == 2 && c == 1 && d == 0 && e == 0 && (a == 2 || b == 2)) return true;  // (q^3+-1)^2(q^2+1)
    if (a == 1 && b == 0 && c == 0 && d == 0 && e == 5) return true;   // (q^3+1)(q-1)^5
    if (a == 0 && b == 1 && c == 0 && d == 5 && e == 0) return true;   // (q^3-1)(q+1)^5
    if (a == 1 && b == 0 && c == 1 && d == 3 && e == 0) return true;   // (q^3+1)(q^2+1)(q+1)^3
    if (a == 0 && b == 1 && c == 1 && d == 0 && e == 3) return true;   // (q^3-1)(q^2+1)(q-1)^3
    if (a == 1 && b == 0 && c == 2 && d == 0 && e == 1) return true;   // (q^3+1)(q^2+1)^2(q-1)
    if (a == 0 && b == 1 && c == 2 && d == 1 && e == 0) return true;   // (q^3-1)(q^2+1)^2(q+1)
    return false;
  });
  const Integer q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q5 = q4 * q, q6 = q3 * q3,
                q7 = q6 * q, q8 = q4 * q4;
  add(q8 - 1);
  add(ipow(q4 + 1, 2));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) add((q4 + 1) * (q2 - s1) * ipow(q - s2, 2));
  add((q4 + 1) * ipow(q2 - 1, 2));
  for (int e : {1, -1}) add((q4 + 1) * (q3 + e) * (q - e));
  for (int e : {1, -1}) add((q5 + e) * ipow(q + e, 3));
  for (int s : {1, -1})
    for (int e : {1, -1}) add((q5 - s) * ipow(q + e, 2) * (q - e));
  for (int e : {1, -1}) add((q5 + e) * (q2 + 1) * (q - e));
  for (int e : {1, -1}) add((q5 + e) * (q3 + e));
  for (int s : {1, -1}) add((q6 + 1) * (q2 - s));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) add((q7 - s1) * (q - s2));
  for (int e : {1, -1})
    for (int s : {1, -1}) add((q - e) * ipow(q2 + e * q + 1, 3) * (q - s));
  for (int e : {1, -1}) add((q5 - e) * (q2 + e * q + 1) * (q + e));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) add((q3 - s1) * (q4 - q2 + 1) * (q - s2));
  for (int e : {1, -1})
    for (int s : {1, -1}) add((q - e) * (q6 + e * q3 + 1) * (q - s));
  for (int e : {1, -1})
    for (int s : {1, -1}) add((q3 - e) * ipow(q2 - e * q + 1, 2) * (q - s));
  add(q8 - q4 + 1);
  add(q8 + q7 - q5 - q4 - q3 + q + 1);
  add(q8 - q6 + q4 - q2 + 1);
  add(ipow(q4 - q2 + 1, 2));
  for (int e : {1, -1}) add((q6 + e * q3 + 1) * (q2 + e * q + 1));
  add(q8 - q7 + q5 - q4 + q3 - q + 1);
  for (int e : {1, -1}) add(ipow(q4 + e * q3 + q2 + e * q + 1, 2));
  for (int s : {1, -1}) add((q4 - q2 + 1) * ipow(q2 - s * q + 1, 2));
  add(ipow(q2 - q + 1, 2) * ipow(q2 + q + 1, 2));
  for (int s : {1, -1}) add(ipow(q2 - s * q + 1, 4));
  return out;
}

std::set<Integer> twof4_orders(const PrimePower& q) {
  const Integer qq = q.q;
  const Integer s = ipow(Integer(2), (q.alpha + 1) / 2);  // sqrt(2q) = 2^(m+1)
  const Integer q2 = qq * qq;
  std::set<Integer> out;
  for (int e : {1, -1}) out.insert(q2 + e * qq * s + qq + e * s + 1);
  for (int e : {1, -1}) out.insert(q2 - e * qq * s + e * s - 1);
  out.insert(q2 - qq + 1);
  for (int e : {1, -1}) out.insert(ipow(qq + e * s + 1, 2));
  for (int e : {1, -1}) out.insert((qq - 1) * (qq + e * s + 1));
  for (int e : {1, -1}) out.insert(ipow(qq + e, 2));
  for (int e : {1, -1}) out.insert(q2 + e);
  return out;
}

}  // namespace

TorusOrderSet torus_orders_exceptional(Family f, const PrimePower& q) {
  switch (f) {
    case Family::E7: {
      auto m = e7_orders(q.q);
      Integer denom = igcd(Integer(2), q.q - 1);
      std::set<Integer> out;
      for (const auto& v : m) out.insert(v / denom);
      return {sorted_unique(std::move(out))};
    }
    case Family::E8: return {sorted_unique(e8_orders(q.q))};
    case Family::TwoF4: return {sorted_unique(twof4_orders(q))};
    default: throw SpecError("torus_orders_exceptional: family not covered");
  }
}

bool oracle_covers(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
    case Family::E7:
    case Family::E8:
    case Family::TwoF4:
      return true;
    default:
      return false;
  }
}

TorusOrderSet torus_orders(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::B:
    case Family::C: return torus_orders_bc(spec.n, *spec.q);
    case Family::D: return torus_orders_d(spec.n, 1, *spec.q);
    case Family::TwoD: return torus_orders_d(spec.n, -1, *spec.q);
    case Family::E7:
    case Family::E8:
    case Family::TwoF4: return torus_orders_exceptional(spec.family, *spec.q);
    default: throw SpecError("torus oracle does not cover " + spec.display());
  }
}

bool oracle_adjacent(const GroupSpec& spec, const Integer& r, const Integer& s) {
  if (r == s) throw std::invalid_argument("oracle_adjacent: r and s must differ");
  if (r % 2 == 0 || s % 2 == 0) throw std::invalid_argument("oracle_adjacent: odd primes only");
  if (spec.q->q % r == 0 || spec.q->q % s == 0)
    throw std::invalid_argument("oracle_adjacent: primes must be coprime to q");
  static std::map<std::string, TorusOrderSet> cache;
  static std::mutex mu;
  const TorusOrderSet* orders = nullptr;
  {
    std::lock_guard lock(mu);
    auto key = spec.display();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, torus_orders(spec)).first;
    orders = &it->second;
  }
  return orders->contains_multiple(r * s);
}

}  // namespace gk::torus_oracle
