#include "gk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "gk/cocliques.hpp"
#include "gk/refdata.hpp"
#include "gk/torus_oracle.hpp"

namespace gk::sweep {

namespace {

std::vector<Integer> prime_powers_upto(const Integer& limit) {
  std::vector<Integer> out;
  for (Integer p = 2; p <= limit; ++p) {
    if (!numth::is_prime(p)) continue;
    for (Integer v = p; v <= limit; v *= p) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupSpec lie(Family f, unsigned n, const Integer& q) {
  GroupSpec g;
  g.family = f;
  g.n = n;
  g.q = numth::PrimePower::decompose(q);
  return g;
}

bool admissible(Family f, unsigned n, const Integer& q) {
  GroupSpec g;
  g.family = f;
  g.n = n;
  try {
    g.q = numth::PrimePower::decompose(q);
    // reuse the parse-time gates
    std::string s;
    switch (f) {
      case Family::A: s = "A:" + std::to_string(n - 1) + ":" + q.str(); break;
      case Family::TwoA: s = "2A:" + std::to_string(n - 1) + ":" + q.str(); break;
      case Family::B: s = "B:" + std::to_string(n) + ":" + q.str(); break;
      case Family::C: s = "C:" + std::to_string(n) + ":" + q.str(); break;
      case Family::D: s = "D:" + std::to_string(n) + ":" + q.str(); break;
      case Family::TwoD: s = "2D:" + std::to_string(n) + ":" + q.str(); break;
      default: return false;
    }
    parse_spec(s);
    return true;
  } catch (const SpecError&) {
    return false;
  }
}

}  // namespace

std::vector<GroupSpec> specs_for_table(int table, unsigned n_max, const Integer& q_max) {
  std::vector<GroupSpec> out;
  switch (table) {
    case 1: {
      for (const auto& name : sporadic_names()) {
        GroupSpec g;
        g.family = Family::Sporadic;
        g.sporadic_name = name;
        out.push_back(g);
      }
      GroupSpec tits;
      tits.family = Family::Tits;
      out.push_back(tits);
      break;
    }
    case 2: {
      unsigned nm = n_max ? n_max : 13;
      Integer qm = q_max != 0 ? q_max : 32;
      for (const auto& q : prime_powers_upto(qm))
        for (unsigned n = 2; n <= nm; ++n)
          for (Family f : {Family::A, Family::TwoA})
            if (admissible(f, n, q)) out.push_back(lie(f, n, q));
      break;
    }
    case 3: {
      unsigned nm = n_max ? n_max : 19;
      Integer qm = q_max != 0 ? q_max : 32;
      for (const auto& q : prime_powers_upto(qm))
        for (unsigned n = 2; n <= nm; ++n) {
          if (n > 12 && q > 9) continue;  // keep the sweep at desk scale
          for (Family f : {Family::B, Family::C, Family::D, Family::TwoD})
            if (admissible(f, n, q)) out.push_back(lie(f, n, q));
        }
      break;
    }
    case 4: {
      Integer qm = q_max != 0 ? q_max : 32;
      for (const auto& q : prime_powers_upto(qm)) {
        for (Family f : {Family::G2, Family::F4, Family::E6, Family::TwoE6, Family::E7,
                         Family::E8, Family::ThreeD4}) {
          if (f == Family::G2 && q < 3) continue;
          out.push_back(lie(f, 0, q));
        }
        auto pp = numth::PrimePower::decompose(q);
        if (pp.p == 2 && pp.alpha >= 3 && pp.alpha % 2 == 1) {
          out.push_back(lie(Family::TwoB2, 0, q));
          out.push_back(lie(Family::TwoF4, 0, q));
        }
        if (pp.p == 3 && pp.alpha >= 3 && pp.alpha % 2 == 1)
          out.push_back(lie(Family::TwoG2, 0, q));
      }
      GroupSpec tits;
      tits.family = Family::Tits;
      out.push_back(tits);
      break;
    }
    default:
      throw std::invalid_argument("table must be 1..4");
  }
  return out;
}

std::vector<RowResult> run_table(int table, const Options& opt) {
  auto specs = specs_for_table(table, opt.n_max, opt.q_max);
  std::vector<RowResult> results(specs.size());
  std::atomic<size_t> next{0};
  unsigned jobs = std::max(1u, opt.jobs);
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      RowResult r;
      r.group = specs[i].display();
      try {
        auto d = refdata::verify(specs[i]);
        r.row_id = d.row_id;
        r.ok = d.match;
        r.detail = d.detail;
      } catch (const std::exception& e) {
        r.ok = false;
        r.detail = e.what();
      }
      results[i] = std::move(r);
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

std::vector<RowResult> run_alt(unsigned n_max) {
  std::vector<RowResult> out;
  for (unsigned n = 5; n <= n_max; ++n) {
    RowResult r;
    r.group = "Alt_" + std::to_string(n);
    r.row_id = "Prop/alt";
    try {
      cocliques::alt_report(n);  // asserts closed form == enumeration
      r.ok = true;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

RowResult oracle_check(const GroupSpec& spec) {
  RowResult res;
  res.group = spec.display();
  res.row_id = "oracle";
  if (!torus_oracle::oracle_covers(spec)) {
    res.detail = "family not covered by the torus oracle";
    return res;
  }
  auto g = cocliques::build_graph(spec);
  const Integer& p = spec.q->p;
  // representative odd prime per vertex
  std::vector<std::pair<int, Integer>> reps;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    if (vx.kind == cocliques::Vertex::Kind::Char) continue;
    if (vx.kind == cocliques::Vertex::Kind::Named) {
      if (vx.prime != 2 && vx.prime != p) reps.emplace_back(static_cast<int>(v), vx.prime);
      continue;
    }
    std::vector<Integer> primes;
    if (vx.cls == 'S') {
      auto f = spec.family == Family::TwoB2   ? numth::SRFamily::Sz2B2
               : spec.family == Family::TwoG2 ? numth::SRFamily::Ree2G2
                                              : numth::SRFamily::Ree2F4;
      primes = numth::suzuki_ree_class(f, spec.sr_tower(), vx.index);
    } else {
      primes = numth::primitive_primes(vx.index, spec.q->q);
    }
    // skip named primes carved out of the class
    for (const auto& r : primes) {
      if (r == 2 || r == p) continue;
      bool carved = false;
      for (const auto& w : g.vertices)
        if (w.kind == cocliques::Vertex::Kind::Named && w.prime == r) carved = true;
      if (carved) continue;
      reps.emplace_back(static_cast<int>(v), r);
      break;
    }
  }
  std::ostringstream bad;
  int pairs = 0, disagreements = 0;
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b) {
      auto [va, ra] = reps[a];
      auto [vb, rb] = reps[b];
      if (ra == rb) continue;
      if (g.adj[va][vb] == cocliques::Unresolved) continue;
      ++pairs;
      bool crit = g.adj[va][vb] == cocliques::Adjacent;
      bool orac = torus_oracle::oracle_adjacent(spec, ra, rb);
      if (crit != orac) {
        ++disagreements;
        bad << " (" << g.vertices[va].label() << "=" << ra.str() << " vs "
            << g.vertices[vb].label() << "=" << rb.str() << ": criterion "
            << (crit ? "adjacent" : "non-adjacent") << ", oracle "
            << (orac ? "adjacent" : "non-adjacent") << ")";
      }
    }
  res.ok = disagreements == 0 && pairs > 0;
  std::ostringstream os;
  os << pairs << " pairs";
  if (disagreements) os << ", " << disagreements << " disagreements:" << bad.str();
  res.detail = os.str();
  return res;
}

}  // namespace gk::sweep
