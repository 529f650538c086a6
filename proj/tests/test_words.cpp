#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "verba/caps.hpp"
#include "verba/catalog.hpp"
#include "verba/errors.hpp"
#include "verba/structure.hpp"
#include "verba/values.hpp"
#include "verba/word.hpp"

using namespace verba;
using verba::testing::MulTable;

namespace {

Perm cyc(unsigned degree, const std::string& text) {
  return Perm::from_cycles(degree, text);
}

struct CapGuard {
  Caps saved = global_caps();
  ~CapGuard() { global_caps() = saved; }
};

Word random_word(std::mt19937& rng, unsigned depth) {
  std::uniform_int_distribution<int> kind(0, depth == 0 ? 0 : 3);
  std::uniform_int_distribution<unsigned> var(1, 4);
  switch (kind(rng)) {
    case 1: {
      std::uniform_int_distribution<int> len(2, 3);
      std::vector<Word> fs;
      for (int i = 0, n = len(rng); i < n; ++i)
        fs.push_back(random_word(rng, depth - 1));
      return Word::product(std::move(fs));
    }
    case 2: {
      std::uniform_int_distribution<std::int64_t> e(-9, 9);
      return Word::power(random_word(rng, depth - 1), e(rng));
    }
    case 3:
      return Word::bracket(random_word(rng, depth - 1), random_word(rng, depth - 1));
    default:
      return Word::variable(var(rng));
  }
}

}  // namespace

TEST_CASE("word construction and structure") {
  Word w = parse_word("[x1,x2]");
  CHECK(w.kind() == Word::Kind::bracket);
  CHECK(w.arity() == 2);
  CHECK(w == Word::bracket(Word::variable(1), Word::variable(2)));
  CHECK(w == gamma_word(2));

  CHECK(parse_word("[x1,x2,x3]") == gamma_word(3));
  CHECK(gamma_word(3) ==
        Word::bracket(Word::bracket(Word::variable(1), Word::variable(2)),
                      Word::variable(3)));
  CHECK(gamma_word(1) == Word::variable(1));

  CHECK(delta_word(0) == Word::variable(1));
  CHECK(delta_word(1) == gamma_word(2));
  CHECK(delta_word(2).arity() == 4);
  CHECK(delta_word(2) == parse_word("[[x1,x2],[x3,x4]]"));

  Word p = parse_word("x1^15");
  CHECK(p.kind() == Word::Kind::power);
  CHECK(p.arity() == 1);
  CHECK(p == power_word(15));
  REQUIRE(power_word_form(p).has_value());
  CHECK(power_word_form(p)->first == 1);
  CHECK(power_word_form(p)->second == 15);
  CHECK_FALSE(power_word_form(gamma_word(2)).has_value());
}

TEST_CASE("print and parse round trip") {
  CHECK(parse_word(print_word(gamma_word(3))) == gamma_word(3));
  CHECK(parse_word(print_word(delta_word(2))) == delta_word(2));
  CHECK(parse_word(print_word(power_word(-4))) == power_word(-4));
  CHECK(parse_word("x1 x2") == parse_word("x1x2"));
  CHECK(parse_word("(x1)") == Word::variable(1));

  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 3);
    CAPTURE(print_word(w));
    CHECK(parse_word(print_word(w)) == w);
  }
}

TEST_CASE("descriptors") {
  CHECK(descriptor(gamma_word(2)) == "gamma:2");
  CHECK(descriptor(gamma_word(1)) == "gamma:1");
  CHECK(descriptor(delta_word(2)) == "delta:2");
  CHECK(descriptor(power_word(15)) == "pow:15");
  CHECK(descriptor(parse_word("[x1,x2]")) == "gamma:2");

  CHECK(word_from_descriptor("gamma:3") == gamma_word(3));
  CHECK(word_from_descriptor("delta:2") == delta_word(2));
  CHECK(word_from_descriptor("pow:15") == power_word(15));
  CHECK(word_from_descriptor("[x1,x2][x3,x4]") ==
        parse_word("[x1,x2][x3,x4]"));
  CHECK(word_from_descriptor(descriptor(parse_word("x1^2x2"))) ==
        parse_word("x1^2x2"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("x0"), WordParseError);
  CHECK_THROWS_AS(parse_word("[x1]"), WordParseError);
  CHECK_THROWS_AS(parse_word("((x1)"), WordParseError);
  CHECK_THROWS_AS(parse_word(""), WordParseError);
  CHECK_THROWS_AS(parse_word("x1^"), WordParseError);
  CHECK_THROWS_AS(parse_word("x1]"), WordParseError);
  CHECK_THROWS_AS(parse_word("y1"), WordParseError);
  try {
    parse_word("[x1,]");
    FAIL("expected WordParseError");
  } catch (const WordParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate_word(gamma_word(2), {cyc(3, "(1 2)"), cyc(3, "(1 3)")}) ==
        cyc(3, "(1 3 2)"));
  Perm a = cyc(3, "(1 2 3)");
  CHECK(evaluate_word(gamma_word(2), {a, a}) == Perm(3));
  CHECK(evaluate_word(power_word(15), {cyc(5, "(1 2 3 4 5)")}) == Perm(5));
  CHECK(evaluate_word(parse_word("x1^-1x2x1"), {cyc(3, "(1 2)"), cyc(3, "(1 3)")}) ==
        conjugate(cyc(3, "(1 3)"), cyc(3, "(1 2)")));
  CHECK_THROWS_AS(evaluate_word(gamma_word(3), {Perm(3), Perm(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_word(gamma_word(2), {Perm(3), Perm(4)}),
                  std::invalid_argument);
}

TEST_CASE("word classifiers") {
  CHECK(is_multilinear_commutator(gamma_word(2)));
  CHECK(is_multilinear_commutator(gamma_word(3)));
  CHECK(is_multilinear_commutator(delta_word(2)));
  CHECK_FALSE(is_multilinear_commutator(power_word(2)));
  CHECK_FALSE(is_multilinear_commutator(parse_word("[x1,x1]")));
  CHECK_FALSE(is_multilinear_commutator(parse_word("[x1,x2][x3,x4]")));

  CHECK(is_commutator_word(gamma_word(2)));
  CHECK(is_commutator_word(delta_word(2)));
  CHECK(is_commutator_word(parse_word("x1[x2,x3]x1^-1")));
  CHECK_FALSE(is_commutator_word(power_word(15)));
  CHECK_FALSE(is_commutator_word(parse_word("x1[x2,x3]")));
}

TEST_CASE("value sets on small groups") {
  PermGroup s3 = symmetric_group(3);
  ValueSet v = word_values(s3, gamma_word(2));
  CHECK(v.values.size() == 3);
  CHECK(v.contains(cyc(3, "(1 2 3)")));
  CHECK_FALSE(v.contains(cyc(3, "(1 2)")));
  CHECK(std::is_sorted(v.values.begin(), v.values.end()));

  PermGroup c6 = cyclic_group(6);
  CHECK(word_values(c6, gamma_word(2)).values.size() == 1);
  CHECK(word_values(c6, gamma_word(2)).values[0].is_identity());

  PermGroup a5 = alternating_group(5);
  CHECK(word_values(a5, gamma_word(2)).values.size() == 60);
  CHECK(word_values(a5, power_word(15)).values.size() == 16);
}

TEST_CASE("recursion agrees with tuple brute force") {
  // Independent oracle: multiplication-table scans over all pairs, triples
  // and quadruples.
  std::vector<std::string> names = {"sym3",   "d4",     "d6",    "alt4",
                                    "sym4",   "c24",    "ea_3_2", "sl2_3",
                                    "frob20", "frob21", "alt5"};
  for (const auto& name : names) {
    CAPTURE(name);
    PermGroup G = make_group(name).group;
    MulTable t(G);
    CHECK(word_values(G, gamma_word(2)).values == brute_gamma_values(t, 2));
    CHECK(word_values(G, gamma_word(3)).values == brute_gamma_values(t, 3));
    CHECK(word_values(G, delta_word(2)).values == brute_delta2_values(t));
  }
}

TEST_CASE("generic enumeration agrees with brute force") {
  // A product of brackets is not multilinear, so this exercises the tuple
  // enumeration path.
  Word w = parse_word("[x1,x2][x3,x4]");
  PermGroup s3 = symmetric_group(3);
  ValueSet got = word_values(s3, w);

  std::vector<Perm> expected;
  const auto& els = s3.elements();
  for (const Perm& a : els)
    for (const Perm& b : els)
      for (const Perm& c : els)
        for (const Perm& d : els)
          expected.push_back(commutator(a, b) * commutator(c, d));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  CHECK(got.values == expected);
}

TEST_CASE("tuple cap") {
  CapGuard guard;
  global_caps().tuples = 100;
  PermGroup s3 = symmetric_group(3);
  CHECK_THROWS_AS(word_values(s3, parse_word("[x1,x2][x3,x4]")), CapExceeded);
  // Multilinear words do not enumerate tuples and stay unaffected.
  CHECK(word_values(s3, gamma_word(2)).values.size() == 3);
}

TEST_CASE("closure of value sets") {
  for (const auto& name : {"sym4", "g72", "alt5", "sl2_3"}) {
    CAPTURE(name);
    PermGroup G = make_group(name).group;
    for (const Word& w : {gamma_word(2), gamma_word(3), delta_word(2)}) {
      ValueSet v = word_values(G, w);
      CHECK(conjugation_closed(G, v));
      CHECK(inversion_closed(v));
    }
  }
}

TEST_CASE("external value sets") {
  PermGroup a5 = alternating_group(5);
  ValueSet v = external_value_set(a5, {Perm(5), cyc(5, "(1 2)(3 4)")});
  CHECK(v.values.size() == 2);
  CHECK(v.contains(cyc(5, "(1 2)(3 4)")));
  CHECK_THROWS_AS(external_value_set(a5, {cyc(5, "(1 2)")}), std::invalid_argument);
}

TEST_CASE("verbal subgroups") {
  CHECK(verbal_subgroup(symmetric_group(3), gamma_word(2)).order() == 3);
  CHECK(verbal_subgroup(alternating_group(5), power_word(15)).order() == 60);

  // The verbal subgroup of gamma_k / delta_k must match the series terms.
  for (const auto& entry : default_catalog()) {
    CAPTURE(entry.name);
    PermGroup G = entry.construct();
    for (unsigned k = 1; k <= 3; ++k) {
      CHECK(groups_equal(verbal_subgroup(G, gamma_word(k)),
                         lower_central_term(G, k)));
    }
    for (unsigned k = 0; k <= 2; ++k) {
      CHECK(groups_equal(verbal_subgroup(G, delta_word(k)), derived_term(G, k)));
    }
  }
}
