#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "verba/perm.hpp"

using namespace verba;
using verba::testing::random_perm;

namespace {
Perm cyc(unsigned degree, const std::string& text) {
  return Perm::from_cycles(degree, text);
}
}  // namespace

TEST_CASE("composition is left to right") {
  Perm a = cyc(3, "(1 2)");
  Perm b = cyc(3, "(1 3)");
  CHECK(a * b == cyc(3, "(1 2 3)"));
  CHECK(compose(a, b) == a * b);
  CHECK(b * a == cyc(3, "(1 3 2)"));
}

TEST_CASE("identity, inverse, powers") {
  Perm id(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);

  Perm a = cyc(5, "(1 2 3 4 5)");
  CHECK(a * a.inverse() == Perm(5));
  CHECK(inverse(a) == a.inverse());
  CHECK(a.pow(0) == Perm(5));
  CHECK(a.pow(5) == Perm(5));
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(7) == a * a);
  CHECK(a.pow(-3) == a.inverse().pow(3));
}

TEST_CASE("commutator and conjugate") {
  Perm a = cyc(3, "(1 2)");
  Perm b = cyc(3, "(1 3)");
  CHECK(commutator(a, b) == cyc(3, "(1 3 2)"));
  CHECK(commutator(a, a) == Perm(3));

  CHECK(conjugate(cyc(3, "(1 2)"), cyc(3, "(2 3)")) == cyc(3, "(1 3)"));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Perm x = random_perm(rng, 7), y = random_perm(rng, 7);
    CHECK(commutator(x, y) == x.inverse() * y.inverse() * x * y);
    CHECK(conjugate(x, y) == y.inverse() * x * y);
  }
}

TEST_CASE("element order") {
  CHECK(element_order(Perm(6)) == 1);
  CHECK(element_order(cyc(5, "(1 2 3 4 5)")) == 5);
  CHECK(element_order(cyc(5, "(1 2)(3 4 5)")) == 6);
  CHECK(element_order(cyc(9, "(1 2)(3 4 5)(6 7 8 9)")) == 12);
}

TEST_CASE("iterated commutator") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Perm g = random_perm(rng, 7), x = random_perm(rng, 7);
    CHECK(iterated_commutator(g, x, 0) == g);
    CHECK(iterated_commutator(g, x, 1) == commutator(g, x));
    CHECK(iterated_commutator(g, x, 3) ==
          commutator(commutator(commutator(g, x), x), x));
  }
}

TEST_CASE("cycle notation round trips") {
  CHECK(cyc(5, "()") == Perm(5));
  CHECK(cyc(5, "") == Perm(5));
  CHECK(cyc(5, "(1,2,3)(4,5)") == cyc(5, "(1 2 3) (4 5)"));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(rng, 9);
    CHECK(Perm::from_cycles(9, p.cycle_string()) == p);
  }
  CHECK(Perm(3).cycle_string() == "()");
}

TEST_CASE("image tables, one based I/O") {
  Perm p = Perm::from_one_based({2, 1, 3});
  CHECK(p == cyc(3, "(1 2)"));
  CHECK(p.one_based_images() == std::vector<unsigned>{2, 1, 3});
  CHECK(Perm({1, 0, 2}) == p);
  CHECK(p[0] == 1);
  CHECK(p[2] == 2);
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(Perm({0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_based({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS(Perm::from_cycles(3, "(1 2 2)"));
  CHECK_THROWS(Perm::from_cycles(3, "(1 4)"));
  CHECK_THROWS(Perm::from_cycles(3, "(1 2"));
  Perm a = cyc(3, "(1 2)");
  Perm b = cyc(4, "(1 2)");
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("ordering is degree then lexicographic on images") {
  CHECK(Perm(3) < cyc(3, "(2 3)"));
  CHECK(cyc(3, "(2 3)") < cyc(3, "(1 2)"));
  CHECK(Perm(3) < Perm(4));
  CHECK_FALSE(cyc(3, "(1 2)") < cyc(3, "(1 2)"));

  // Sorted order of Sym(3): identity first, then by image table.
  std::set<Perm> s3;
  std::mt19937 rng(17);
  while (s3.size() < 6) s3.insert(random_perm(rng, 3));
  auto it = s3.begin();
  CHECK(it->is_identity());
  ++it;
  CHECK(*it == cyc(3, "(2 3)"));
}

TEST_CASE("hash agrees with equality") {
  Perm a = cyc(4, "(1 2 3)");
  Perm b = cyc(4, "(1 2 3)");
  CHECK(std::hash<Perm>{}(a) == std::hash<Perm>{}(b));
}

TEST_CASE("stream output uses cycle notation") {
  std::ostringstream os;
  os << cyc(4, "(1 2)(3 4)");
  CHECK(os.str() == "(1 2)(3 4)");
}
