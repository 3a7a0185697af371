#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gk/groupspec.hpp"

using namespace gk;

TEST_CASE("parsing and gates") {
  auto g = parse_spec("2B2:8");
  CHECK(g.family == Family::TwoB2);
  CHECK(g.q->p == 2);
  CHECK(g.q->alpha == 3);

  CHECK_THROWS_AS(parse_spec("B:2:2"), SpecError);        // not simple
  CHECK_THROWS_AS(parse_spec("2F4:2"), SpecError);        // hint to Tits
  CHECK_THROWS_AS(parse_spec("A:1:3"), SpecError);        // A_1(q) needs q > 3
  CHECK_THROWS_AS(parse_spec("2A:2:2"), SpecError);       // 2A_2(2) not simple
  CHECK_THROWS_AS(parse_spec("G2:2"), SpecError);
  CHECK_THROWS_AS(parse_spec("Alt:4"), SpecError);
  CHECK_THROWS_AS(parse_spec("2B2:16"), SpecError);       // even exponent
  CHECK_THROWS_AS(parse_spec("B:3:12"), SpecError);       // not a prime power
  CHECK_THROWS_AS(parse_spec("Spor:Nope"), SpecError);

  CHECK(parse_spec("Spor:M23").sporadic_name == "M23");
  CHECK(parse_spec("Tits").family == Family::Tits);
  CHECK(parse_spec("A:5:2").n == 6);                      // subscript -> dimension
  CHECK(parse_spec("B:4:3^2").q->q == 9);
  CHECK(parse_spec("E8:7").family == Family::E8);
}

TEST_CASE("index sets") {
  // A_5(2): dimension 6, q=2; classes 1 and 6 are empty
  auto I = index_set(parse_spec("A:5:2"));
  CHECK(I == std::vector<unsigned>{2, 3, 4, 5});

  CHECK(index_set(parse_spec("3D4:2")) == std::vector<unsigned>{1, 2, 3, 12});
  CHECK(index_set(parse_spec("B:2:3")) == std::vector<unsigned>{2, 4});
  CHECK(index_set(parse_spec("B:2:5")) == std::vector<unsigned>{1, 2, 4});
  // D excludes 2n, 2D excludes n for odd n
  auto ID = index_set(parse_spec("D:4:3"));
  CHECK(std::find(ID.begin(), ID.end(), 8u) == ID.end());
  auto I2D5 = index_set(parse_spec("2D:5:2"));
  CHECK(I2D5 == std::vector<unsigned>{2, 3, 4, 8, 10});
}

TEST_CASE("partitions") {
  auto part = partition(parse_spec("B:2:3"));
  REQUIRE(part.classes.size() == 2);
  CHECK(part.characteristic == Integer(3));
  CHECK(part.classes[0].index == 2);
  CHECK(part.classes[0].witness == 4);
  CHECK(part.classes[1].index == 4);
  CHECK(part.classes[1].witness == 5);

  auto ree = partition(parse_spec("2G2:27"));
  CHECK(ree.class_kind == 'S');
  REQUIRE(ree.classes.size() == 4);
  CHECK(ree.classes[0].witness == 13);   // pi(26) \ {2}
  CHECK(ree.classes[1].witness == 7);    // pi(28) \ {2}
  CHECK(ree.classes[2].witness == 19);
  CHECK(ree.classes[3].witness == 37);
  REQUIRE(ree.special_primes.size() == 1);
  CHECK(ree.special_primes[0].prime == 2);

  // E8(2): every listed class passes the nonemptiness filter
  auto e8 = partition(parse_spec("E8:2"));
  for (const auto& c : e8.classes) CHECK(c.witness > 1);
  CHECK(e8.classes.size() == index_set(parse_spec("E8:2")).size());

  // 2F4(8): S_2 is empty and omitted
  auto f4 = partition(parse_spec("2F4:8"));
  std::set<unsigned> idx;
  for (const auto& c : f4.classes) idx.insert(c.index);
  CHECK(!idx.contains(2));
  CHECK(idx == std::set<unsigned>{1, 3, 4, 5, 6});
}

TEST_CASE("class disjointness across the partition") {
  for (const char* s : {"B:4:3", "2A:4:3", "E6:2", "2E6:3", "A:6:4", "D:5:2"}) {
    auto g = parse_spec(s);
    auto part = partition(g);
    Integer prod = 1;
    for (const auto& c : part.classes) {
      CHECK(igcd(prod, c.witness) == 1);
      CHECK(c.witness % g.q->p != 0);
      prod *= c.witness;
    }
  }
}

TEST_CASE("exceptional index lists divide the group order") {
  // order formulas from the proof of the exceptional criterion
  auto check = [](const char* spec_str, const std::vector<unsigned>& degrees) {
    auto g = parse_spec(spec_str);
    const Integer& q = g.q->q;
    Integer order = 1;
    for (unsigned d : degrees) order *= ipow(q, d) - 1;
    if (g.family == Family::ThreeD4) order *= ipow(q, 8) + ipow(q, 4) + 1;
    for (unsigned i : index_set(g))
      CHECK(order % numth::greatest_primitive_divisor(i, q) == 0);
  };
  check("G2:5", {2, 6});
  check("F4:3", {2, 6, 8, 12});
  check("E6:3", {2, 5, 6, 8, 9, 12});
  check("E7:2", {2, 6, 8, 10, 12, 14, 18});
  check("E8:3", {2, 8, 12, 14, 18, 20, 24, 30});
  check("3D4:3", {2, 6});
}

TEST_CASE("monotone index sets in the rank") {
  for (unsigned n = 3; n < 10; ++n) {
    auto a = index_set(parse_spec("B:" + std::to_string(n) + ":5"));
    auto b = index_set(parse_spec("B:" + std::to_string(n + 1) + ":5"));
    for (unsigned i : a) CHECK(std::find(b.begin(), b.end(), i) != b.end());
  }
}

TEST_CASE("alternating primes") {
  CHECK(alt_pi(5) == std::vector<Integer>{2, 3, 5});
  CHECK(alt_pi(10) == std::vector<Integer>{2, 3, 5, 7});
  CHECK(alt_pi(29).size() == 10);
}
