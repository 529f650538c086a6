#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "oracles.hpp"
#include "verba/catalog.hpp"
#include "verba/structure.hpp"
#include "verba/values.hpp"
#include "verba/word.hpp"

using namespace verba;
using nlohmann::json;

namespace {

Perm cyc(unsigned degree, const std::string& text) {
  return Perm::from_cycles(degree, text);
}

std::filesystem::path data_dir() {
  const char* dir = std::getenv("VERBA_DATA_DIR");
  REQUIRE(dir != nullptr);
  return std::filesystem::path(dir);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cyclic and dihedral groups") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(6).order() == 6);
  CHECK(is_abelian(cyclic_group(24)));
  CHECK(exponent(cyclic_group(24)) == 24);

  CHECK(dihedral_group(3).order() == 6);
  CHECK(dihedral_group(6).order() == 12);
  CHECK_FALSE(is_abelian(dihedral_group(4)));
  CHECK(groups_equal(dihedral_group(3), symmetric_group(3)));
  CHECK_THROWS_AS(dihedral_group(2), std::invalid_argument);
}

TEST_CASE("symmetric and alternating groups") {
  CHECK(symmetric_group(2).order() == 2);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  // Every generator is an even permutation: degree minus cycle count is even.
  for (unsigned n = 3; n <= 6; ++n) {
    PermGroup alt = alternating_group(n);
    for (const Perm& g : alt.generators()) {
      std::vector<bool> seen(n, false);
      unsigned cycles = 0;
      for (unsigned s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (unsigned t = s; !seen[t]; t = g[t]) seen[t] = true;
      }
      CHECK((n - cycles) % 2 == 0);
    }
  }
  CHECK(group_contains(symmetric_group(5), alternating_group(5)));
}

TEST_CASE("elementary abelian and direct products") {
  PermGroup e = elementary_abelian_group(3, 2);
  CHECK(e.order() == 9);
  CHECK(exponent(e) == 3);
  CHECK(is_abelian(e));

  PermGroup d = direct_product(symmetric_group(3), cyclic_group(2));
  CHECK(d.order() == 12);
  CHECK(d.degree() == 5);
  CHECK(direct_product(alternating_group(5), cyclic_group(2)).order() == 120);
}

TEST_CASE("affine groups") {
  CHECK(affine_group(5, 1, {{{2}}}).order() == 20);
  CHECK(affine_group(7, 1, {{{2}}}).order() == 21);
  CHECK(affine_group(3, 2, {}).order() == 9);
  CHECK_THROWS_AS(affine_group(5, 1, {{{0}}}), std::invalid_argument);
}

TEST_CASE("the order-72 group satisfies its defining relations") {
  Group72 g = group_72();
  CHECK(g.group.order() == 72);
  CHECK(g.group.degree() == 9);

  const Perm id(9);
  CHECK(g.g1 * g.g1 == id);
  CHECK(g.g2 * g.g2 == id);
  CHECK(g.g3 * g.g3 == id);
  CHECK(g.h1.pow(3) == id);
  CHECK(g.h2.pow(3) == id);
  CHECK(commutator(g.g2, g.g1) == g.g3);
  CHECK(commutator(g.h1, g.h2) == id);
  CHECK(commutator(g.h1, g.g1) == g.h1);
  CHECK(commutator(g.h1, g.g3) == g.h1);
  CHECK(commutator(g.h2, g.g3) == g.h2);
  CHECK(conjugate(g.h1, g.g2) == g.h2);
  CHECK(conjugate(g.h2, g.g2) == g.h1);
  CHECK(conjugate(g.h2, g.g1) == g.h2);  // g1 fixes the second coordinate

  CHECK(element_order(g.h2 * g.g3) == 2);

  PermGroup t2 = lower_central_term(g.group, 2);
  PermGroup t3 = lower_central_term(g.group, 3);
  CHECK(t2.order() == 18);
  CHECK(t3.order() == 9);
  CHECK(groups_equal(t3, subgroup_generated(g.group, {g.h1, g.h2})));
  CHECK(abelian_invariants(t3) == std::vector<std::uint64_t>{3, 3});
  CHECK(groups_equal(lower_central_term(g.group, 4), t3));
}

TEST_CASE("special linear groups") {
  PermGroup sl3 = special_linear_2(3);
  CHECK(sl3.order() == 24);
  CHECK(sl3.degree() == 8);
  CHECK(center(sl3).order() == 2);

  PermGroup sl5 = special_linear_2(5);
  CHECK(sl5.order() == 120);
  CHECK(sl5.degree() == 24);
  CHECK(center(sl5).order() == 2);
  CHECK(is_perfect(sl5));
  CHECK(is_quasisimple(sl5));

  CHECK_THROWS_WITH_AS(special_linear_2(7), "unsupported q",
                       std::invalid_argument);
  CHECK_THROWS_AS(special_linear_2(4), std::invalid_argument);
}

TEST_CASE("every commutator word value covers SL(2,5)") {
  PermGroup sl5 = special_linear_2(5);
  CHECK(word_values(sl5, gamma_word(2)).values.size() == 120);
  CHECK(word_values(sl5, gamma_word(3)).values.size() == 120);
}

TEST_CASE("group files round trip") {
  PermGroup s3 = symmetric_group(3);
  auto path = temp_file("verba_roundtrip.json");
  save_group(path.string(), "sym3", s3);
  NamedGroup loaded = load_group(path.string());
  CHECK(loaded.name == "sym3");
  CHECK(groups_equal(loaded.group, s3));
  std::filesystem::remove(path);
}

TEST_CASE("group files reject bad input") {
  auto path = temp_file("verba_bad_group.json");
  {
    std::ofstream out(path);
    out << R"({"name": "bad", "degree": 3, "generators": [[1, 1, 3]]})";
  }
  CHECK_THROWS_AS(load_group(path.string()), std::invalid_argument);
  {
    std::ofstream out(path);
    out << R"({"name": "bad", "degree": 4, "generators": [[2, 1, 3]]})";
  }
  CHECK_THROWS_AS(load_group(path.string()), std::runtime_error);
  {
    std::ofstream out(path);
    out << R"({"degree": 3, "generators": []})";
  }
  CHECK_THROWS_AS(load_group(path.string()), std::runtime_error);
  {
    std::ofstream out(path);
    out << "not json";
  }
  CHECK_THROWS(load_group(path.string()));
  std::filesystem::remove(path);
  CHECK_THROWS(load_group(temp_file("verba_missing.json").string()));
}

TEST_CASE("the stored order-72 fixture matches the construction") {
  NamedGroup fixture = load_group((data_dir() / "g72.json").string());
  CHECK(fixture.group.order() == 72);
  CHECK(groups_equal(fixture.group, group_72().group));
}

TEST_CASE("catalog entries construct to their stated order") {
  const auto& entries = default_catalog();
  CHECK(entries.size() >= 40);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);  // unique names
    PermGroup G = e.construct();
    CHECK(G.order() == e.expected_order);
    CHECK(G.order() <= 200);
  }
}

TEST_CASE("catalog names include the required spread") {
  for (const auto& name :
       {"c2", "c12", "sym3", "sym4", "alt4", "alt5", "d4", "g72", "sl2_3",
        "sl2_5", "frob20", "frob21", "ea_2_2", "sym3xc2"}) {
    CAPTURE(name);
    CHECK(find_catalog_entry(name) != nullptr);
  }
  CHECK(find_catalog_entry("nope") == nullptr);
}

TEST_CASE("catalog tags are exactly the computed predicates") {
  for (const auto& e : default_catalog()) {
    CAPTURE(e.name);
    PermGroup G = e.construct();
    std::set<std::string> expected;
    if (is_soluble(G)) expected.insert("soluble");
    if (is_nilpotent(G)) expected.insert("nilpotent");
    if (is_metanilpotent(G)) expected.insert("metanilpotent");
    if (is_simple(G)) expected.insert("simple");
    if (is_quasisimple(G)) expected.insert("quasisimple");
    std::set<std::string> got(e.tags.begin(), e.tags.end());
    CHECK(got == expected);
  }
}

TEST_CASE("the catalog manifest file matches the code") {
  std::ifstream in(data_dir() / "catalog.json");
  REQUIRE(in.good());
  json manifest = json::parse(in);
  const auto& entries = default_catalog();
  REQUIRE(manifest.is_array());
  REQUIRE(manifest.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CAPTURE(entries[i].name);
    CHECK(manifest[i].at("name") == entries[i].name);
    CHECK(manifest[i].at("order") == entries[i].expected_order);
    std::set<std::string> file_tags, code_tags(entries[i].tags.begin(),
                                               entries[i].tags.end());
    for (const auto& t : manifest[i].at("tags")) file_tags.insert(t.get<std::string>());
    CHECK(file_tags == code_tags);
  }
}

TEST_CASE("make_group resolves names and paths") {
  CHECK(make_group("alt5").group.order() == 60);
  CHECK(make_group("alt5").name == "alt5");
  NamedGroup from_file = make_group((data_dir() / "g72.json").string());
  CHECK(from_file.group.order() == 72);
  CHECK_THROWS(make_group("no_such_group_anywhere"));
}

TEST_CASE("alternating group edge") {
  CHECK_THROWS_AS(alternating_group(2), std::invalid_argument);
  CHECK(groups_equal(alternating_group(3), cyclic_group(3)));
  CHECK(cyc(3, "(1 2 3)") == alternating_group(3).generators()[0]);
}
