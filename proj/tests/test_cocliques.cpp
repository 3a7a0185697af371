#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gk/cocliques.hpp"
#include "gk/refdata.hpp"

using namespace gk;
using namespace gk::cocliques;

namespace {

std::set<std::set<std::string>> labeled(const CocliqueReport& rep) {
  std::set<std::set<std::string>> out;
  for (const auto& C : rep.max_cocliques) {
    std::set<std::string> s;
    for (int v : C) s.insert(rep.graph.vertices[v].label());
    out.insert(std::move(s));
  }
  return out;
}

CompactGraph plain_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  CompactGraph g;
  g.spec.family = Family::Sporadic;
  g.spec.sporadic_name = "test";
  for (int i = 0; i < n; ++i) {
    g.vertices.push_back({Vertex::Kind::Named, Integer(100 + i), 0, 'R'});
    g.caps.push_back(-1);
  }
  g.adj.assign(n, std::vector<std::uint8_t>(n, NonAdjacent));
  for (auto [a, b] : edges) g.adj[a][b] = g.adj[b][a] = Adjacent;
  return g;
}

}  // namespace

TEST_CASE("maximum coclique enumeration on plain graphs") {
  auto empty4 = plain_graph(4, {});
  auto r = max_cocliques(empty4);
  CHECK(r.t == 4);
  CHECK(r.cocliques.size() == 1);

  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  auto complete = plain_graph(5, k5);
  r = max_cocliques(complete);
  CHECK(r.t == 1);
  CHECK(r.cocliques.size() == 5);

  // path on 4 vertices: maximum cocliques {0,2},{0,3},{1,3}
  auto path = plain_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  r = max_cocliques(path);
  CHECK(r.t == 2);
  CHECK(r.cocliques.size() == 3);
}

TEST_CASE("unresolved pairs: both completions must agree") {
  auto g = plain_graph(3, {{0, 1}});
  g.adj[1][2] = g.adj[2][1] = Unresolved;
  CHECK_THROWS(max_cocliques(g));  // {0,2} vs {0,2},{1,2}? completions differ
  // with a cap on vertex 2 below the optimum, the vertex is excluded
  auto g2 = plain_graph(4, {{0, 1}});
  g2.adj[2][3] = g2.adj[3][2] = Unresolved;
  g2.caps[3] = 1;
  auto r = max_cocliques(g2);  // optimum {0 or 1, 2} has size... vertices 0,1,2 pairwise?
  CHECK(r.t == 3);             // {0,2} U ... 0-1 edge only: {0,2} and {1,2}: plus vertex 2 isolated
}

TEST_CASE("sporadic reports") {
  GroupSpec m11;
  m11.family = Family::Sporadic;
  m11.sporadic_name = "M11";
  auto rep = theta_structure(m11);
  CHECK(rep.t == 3);
  CHECK(labeled(rep) == std::set<std::set<std::string>>{{"2", "5", "11"}, {"3", "5", "11"}});
  CHECK(rep.theta_prime.size() == 2);

  GroupSpec j2;
  j2.family = Family::Sporadic;
  j2.sporadic_name = "J2";
  auto rj2 = theta_structure(j2);
  CHECK(rj2.t == 2);
  CHECK(rj2.theta_prime.size() == 3);

  GroupSpec lys;
  lys.family = Family::Sporadic;
  lys.sporadic_name = "LyS";
  auto rl = theta_structure(lys);
  CHECK(rl.t == 6);
  CHECK(labeled(rl) == std::set<std::set<std::string>>{{"5", "7", "11", "31", "37", "67"}});

  GroupSpec f1;
  f1.family = Family::Sporadic;
  f1.sporadic_name = "F1";
  CHECK(theta_structure(f1).t == 11);

  // M23: the honest ATLAS data yields a third residue {5,7} on top of the
  // printed {2,5},{3,7} (see the verification notes).
  GroupSpec m23;
  m23.family = Family::Sporadic;
  m23.sporadic_name = "M23";
  auto rm = theta_structure(m23);
  CHECK(rm.t == 4);
  CHECK(labeled(rm) == std::set<std::set<std::string>>{
                           {"2", "5", "11", "23"}, {"3", "7", "11", "23"}, {"5", "7", "11", "23"}});
}

TEST_CASE("Tits group") {
  GroupSpec tits;
  tits.family = Family::Tits;
  auto rep = theta_structure(tits);
  CHECK(rep.t == 3);
  CHECK(labeled(rep) == std::set<std::set<std::string>>{{"3", "5", "13"}});
}

TEST_CASE("alternating structure and reports") {
  auto s5 = alt_structure(5);
  CHECK(s5.tau == std::vector<Integer>{3, 5});
  CHECK(s5.tau_prime == std::vector<Integer>{2});
  auto r5 = alt_report(5);
  CHECK(r5.t == 3);
  CHECK(r5.max_cocliques.size() == 1);

  auto s10 = alt_structure(10);
  CHECK(s10.tau == std::vector<Integer>{5, 7});
  CHECK(s10.tau_prime.empty());
  CHECK(alt_report(10).t == 2);

  auto s11 = alt_structure(11);
  CHECK(s11.tau == std::vector<Integer>{7, 11});
  CHECK(s11.s_n == 7);
  CHECK(s11.tau_prime == std::vector<Integer>{2, 5});
  auto r11 = alt_report(11);
  CHECK(r11.t == 3);
  CHECK(labeled(r11) == std::set<std::set<std::string>>{{"2", "7", "11"}, {"5", "7", "11"}});
}

TEST_CASE("small Lie-type graphs") {
  // B_2(3): pi = {3} U {2} U {5}; the only edge is p -- r_2
  auto g = build_graph(parse_spec("B:2:3"));
  REQUIRE(g.vertices.size() == 3);
  int edges = 0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) edges += g.adj[i][j] == Adjacent;
  CHECK(edges == 1);
  CHECK(g.adj[g.find({Vertex::Kind::Char, 3, 0, 'R'})][g.find({Vertex::Kind::Class, 0, 2, 'R'})] ==
        Adjacent);

  // 2B2(8): empty graph on 4 vertices
  auto sz = build_graph(parse_spec("2B2:8"));
  CHECK(sz.vertices.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) CHECK(sz.adj[i][j] == NonAdjacent);

  auto rep = theta_structure(parse_spec("B:2:3"));
  CHECK(rep.t == 2);
  CHECK(rep.slots.size() == 1);
  CHECK(rep.slots[0].index == 4);
  CHECK(rep.theta_prime.size() == 2);
}

TEST_CASE("flagship reports from the tables") {
  auto e8 = theta_structure(parse_spec("E8:3"));
  CHECK(e8.t == 12);
  CHECK(e8.core_classes() ==
        std::vector<unsigned>{5, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30});
  CHECK(e8.theta_prime.empty());

  auto e7 = theta_structure(parse_spec("E7:4"));
  CHECK(e7.t == 8);

  auto f48 = theta_structure(parse_spec("2F4:8"));
  CHECK(f48.t == 4);
  CHECK(f48.core_classes() == std::vector<unsigned>{5, 6});
  CHECK(f48.theta_prime.size() == 4);

  auto a52 = theta_structure(parse_spec("A:5:2"));
  CHECK(a52.t == 3);
  CHECK(a52.core_classes() == std::vector<unsigned>{3, 4, 5});
  CHECK(a52.theta_prime.empty());

  auto u42 = theta_structure(parse_spec("2A:3:2"));
  CHECK(u42.t == 2);
}

TEST_CASE("special edges are exposed with reasons") {
  auto facts = special_edges(parse_spec("E8:2"));
  bool five_r20 = false;
  for (const auto& f : facts) {
    auto named5 = f.a.kind == Vertex::Kind::Named && f.a.prime == 5;
    auto r20 = f.b.kind == Vertex::Kind::Class && f.b.index == 20;
    if (named5 && r20) {
      five_r20 = true;
      CHECK(f.adjacent);  // 5 in R_4 at q=2, so the dotted edge is present
    }
  }
  CHECK(five_r20);

  // G2(4): 3 lies in R_1, so (3, R_3) is an edge and (3, R_6) is not
  auto g24 = build_graph(parse_spec("G2:4"));
  int v3 = g24.find({Vertex::Kind::Named, 3, 1, 'R'});
  int r3 = g24.find({Vertex::Kind::Class, 0, 3, 'R'});
  int r6 = g24.find({Vertex::Kind::Class, 0, 6, 'R'});
  REQUIRE(v3 >= 0);
  CHECK(g24.adj[v3][r3] == Adjacent);
  CHECK(g24.adj[v3][r6] == NonAdjacent);

  // A_3(5): (q-1)_2 = 4, so 2 splits out and avoids R_3 and R_4
  auto a35 = build_graph(parse_spec("A:3:5"));
  int v2 = a35.find({Vertex::Kind::Named, 2, 1, 'R'});
  REQUIRE(v2 >= 0);
  CHECK(a35.adj[v2][a35.find({Vertex::Kind::Class, 0, 3, 'R'})] == NonAdjacent);
  CHECK(a35.adj[v2][a35.find({Vertex::Kind::Class, 0, 4, 'R'})] == NonAdjacent);
}

TEST_CASE("class-level sufficiency: swapping representatives preserves cocliques") {
  // every class with >= 2 primes behaves homogeneously at class level by
  // construction; check a case with a 2-element class: A_2(11), R_3 = {7,19}
  auto rep = theta_structure(parse_spec("A:2:11"));
  auto part = partition(parse_spec("A:2:11"));
  bool found = false;
  for (const auto& c : part.classes)
    if (c.index == 3) {
      found = true;
      CHECK(numth::primitive_primes(3, Integer(11)) == std::vector<Integer>{7, 19});
    }
  CHECK(found);
  CHECK(rep.t == 3);
}

TEST_CASE("clique complement or its documented exception") {
  GroupSpec alt7;
  alt7.family = Family::Alt;
  alt7.n = 7;
  CHECK(clique_complement_check(alt7) == CliqueComplement::Holds);

  GroupSpec m12;
  m12.family = Family::Sporadic;
  m12.sporadic_name = "M12";
  CHECK(clique_complement_check(m12) == CliqueComplement::Holds);

  GroupSpec m23;
  m23.family = Family::Sporadic;
  m23.sporadic_name = "M23";
  CHECK(clique_complement_check(m23) == CliqueComplement::NotApplicable);
}
