#include "verba/catalog.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "verba/structure.hpp"

namespace verba {
namespace {

using nlohmann::json;

std::vector<unsigned> id_images(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

unsigned checked_power(unsigned p, unsigned r) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < r; ++i) {
    n *= p;
    if (n > 100'000) throw std::invalid_argument("point count too large");
  }
  return static_cast<unsigned>(n);
}

}  // namespace

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(std::move(img))});
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<unsigned> rot(n), ref(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(ref))});
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cyc(n), tr = id_images(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  tr[0] = 1;
  tr[1] = 0;
  if (n == 2) return PermGroup(2, {Perm(std::move(tr))});
  return PermGroup(n, {Perm(std::move(tr)), Perm(std::move(cyc))});
}

PermGroup alternating_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("alternating group needs n >= 3");
  std::vector<unsigned> three = id_images(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return PermGroup(3, {Perm(std::move(three))});
  std::vector<unsigned> cyc(n);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;  // n-cycle, even
  } else {
    cyc = id_images(n);  // (n-1)-cycle on the last points, even
    for (unsigned i = 1; i < n; ++i) cyc[i] = i == n - 1 ? 1 : i + 1;
  }
  return PermGroup(n, {Perm(std::move(three)), Perm(std::move(cyc))});
}

PermGroup elementary_abelian_group(unsigned p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r == 0) throw std::invalid_argument("rank must be positive");
  return affine_group(p, r, {});
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const unsigned da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  for (const Perm& a : A.generators()) {
    std::vector<unsigned> img = id_images(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = a[i];
    gens.push_back(Perm(std::move(img)));
  }
  for (const Perm& b : B.generators()) {
    std::vector<unsigned> img = id_images(da + db);
    for (unsigned i = 0; i < db; ++i) img[da + i] = da + b[i];
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(da + db, gens);
}

PermGroup affine_group(unsigned p, unsigned r,
                       const std::vector<std::vector<std::vector<unsigned>>>& mats) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r == 0) throw std::invalid_argument("rank must be positive");
  const unsigned n = checked_power(p, r);
  auto coords = [&](unsigned idx) {
    std::vector<unsigned> v(r);
    for (unsigned i = 0; i < r; ++i) {
      v[i] = idx % p;
      idx /= p;
    }
    return v;
  };
  auto index = [&](const std::vector<unsigned>& v) {
    unsigned idx = 0;
    for (unsigned i = r; i-- > 0;) idx = idx * p + v[i] % p;
    return idx;
  };
  std::vector<Perm> gens;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<unsigned> img(n);
    for (unsigned x = 0; x < n; ++x) {
      std::vector<unsigned> v = coords(x);
      v[i] = (v[i] + 1) % p;
      img[x] = index(v);
    }
    gens.push_back(Perm(std::move(img)));
  }
  for (const auto& m : mats) {
    if (m.size() != r) throw std::invalid_argument("matrix rank mismatch");
    for (const auto& row : m)
      if (row.size() != r) throw std::invalid_argument("matrix rank mismatch");
    std::vector<unsigned> img(n);
    for (unsigned x = 0; x < n; ++x) {
      std::vector<unsigned> v = coords(x), w(r, 0u);
      for (unsigned j = 0; j < r; ++j)
        for (unsigned i = 0; i < r; ++i) w[j] = (w[j] + v[i] * m[i][j]) % p;
      img[x] = index(w);
    }
    gens.push_back(Perm(std::move(img)));  // Perm ctor rejects singular maps
  }
  return PermGroup(n, gens);
}

Group72 group_72() {
  // Matrices act on row vectors; p = 3, r = 2, point index a + 3b.
  const std::vector<std::vector<unsigned>> neg_first = {{2, 0}, {0, 1}};
  const std::vector<std::vector<unsigned>> swap_coords = {{0, 1}, {1, 0}};
  PermGroup G = affine_group(3, 2, {neg_first, swap_coords});
  const auto& gens = G.generators();
  // affine_group emits translations first, then the matrix actions.
  Perm h1 = gens[0], h2 = gens[1], g1 = gens[2], g2 = gens[3];
  Perm g3 = commutator(g2, g1);
  return Group72{std::move(G), std::move(g1), std::move(g2), std::move(g3),
                 std::move(h1), std::move(h2)};
}

PermGroup special_linear_2(unsigned q) {
  if (q != 3 && q != 5) throw std::invalid_argument("unsupported q");
  const unsigned n = q * q - 1;  // nonzero row vectors (a, b), index a + q b - 1
  auto apply = [&](unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
    std::vector<unsigned> img(n);
    for (unsigned x = 0; x < n; ++x) {
      unsigned a = (x + 1) % q, b = (x + 1) / q;
      unsigned c = (a * m00 + b * m10) % q, d = (a * m01 + b * m11) % q;
      img[x] = c + q * d - 1;
    }
    return Perm(std::move(img));
  };
  return PermGroup(n, {apply(1, 1, 0, 1), apply(1, 0, 1, 1)});
}

NamedGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  json j = json::parse(in);
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") ||
      !j.contains("generators"))
    throw std::runtime_error("group file needs name, degree, generators");
  const std::string name = j.at("name").get<std::string>();
  const unsigned degree = j.at("degree").get<unsigned>();
  std::vector<Perm> gens;
  for (const auto& arr : j.at("generators")) {
    std::vector<unsigned> img = arr.get<std::vector<unsigned>>();
    gens.push_back(Perm::from_one_based(img));
    if (gens.back().degree() != degree)
      throw std::runtime_error("generator degree mismatch in " + path);
  }
  return NamedGroup{name, PermGroup(degree, gens)};
}

void save_group(const std::string& path, const std::string& name,
                const PermGroup& G) {
  json j;
  j["name"] = name;
  j["degree"] = G.degree();
  json gens = json::array();
  for (const Perm& g : G.generators()) gens.push_back(g.one_based_images());
  j["generators"] = std::move(gens);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group file: " + path);
  out << j.dump(2) << '\n';
}

namespace {

// Tag vocabulary: soluble, nilpotent, simple, quasisimple, metanilpotent.
std::vector<std::string> abelian_tags(bool simple) {
  std::vector<std::string> t = {"nilpotent", "metanilpotent", "soluble"};
  if (simple) t.push_back("simple");
  return t;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::uint64_t order,
                 std::vector<std::string> tags, std::function<PermGroup()> f) {
    out.push_back({std::move(name), order, std::move(tags), std::move(f)});
  };
  for (unsigned n = 2; n <= 24; ++n)
    add("c" + std::to_string(n), n, abelian_tags(is_prime(n)),
        [n] { return cyclic_group(n); });
  for (unsigned n = 3; n <= 12; ++n) {
    std::vector<std::string> tags = {"metanilpotent", "soluble"};
    if (n == 4 || n == 8) tags.insert(tags.begin(), "nilpotent");
    add("d" + std::to_string(n), 2 * n, std::move(tags),
        [n] { return dihedral_group(n); });
  }
  add("sym3", 6, {"metanilpotent", "soluble"}, [] { return symmetric_group(3); });
  add("sym4", 24, {"soluble"}, [] { return symmetric_group(4); });
  add("alt4", 12, {"metanilpotent", "soluble"}, [] { return alternating_group(4); });
  add("alt5", 60, {"simple", "quasisimple"}, [] { return alternating_group(5); });
  add("ea_2_2", 4, abelian_tags(false), [] { return elementary_abelian_group(2, 2); });
  add("ea_3_2", 9, abelian_tags(false), [] { return elementary_abelian_group(3, 2); });
  add("ea_5_2", 25, abelian_tags(false), [] { return elementary_abelian_group(5, 2); });
  add("sym3xc2", 12, {"metanilpotent", "soluble"},
      [] { return direct_product(symmetric_group(3), cyclic_group(2)); });
  add("sym3xsym3", 36, {"metanilpotent", "soluble"},
      [] { return direct_product(symmetric_group(3), symmetric_group(3)); });
  add("sym4xc2", 48, {"soluble"},
      [] { return direct_product(symmetric_group(4), cyclic_group(2)); });
  add("alt4xc3", 36, {"metanilpotent", "soluble"},
      [] { return direct_product(alternating_group(4), cyclic_group(3)); });
  add("frob20", 20, {"metanilpotent", "soluble"},
      [] { return affine_group(5, 1, {{{2}}}); });
  add("frob21", 21, {"metanilpotent", "soluble"},
      [] { return affine_group(7, 1, {{{2}}}); });
  add("g72", 72, {"metanilpotent", "soluble"}, [] { return group_72().group; });
  add("sl2_3", 24, {"metanilpotent", "soluble"}, [] { return special_linear_2(3); });
  add("sl2_5", 120, {"quasisimple"}, [] { return special_linear_2(5); });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : default_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

NamedGroup make_group(const std::string& spec) {
  if (const CatalogEntry* e = find_catalog_entry(spec))
    return NamedGroup{e->name, e->construct()};
  return load_group(spec);
}

}  // namespace verba
