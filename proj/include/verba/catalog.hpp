#ifndef VERBA_CATALOG_HPP
#define VERBA_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "verba/group.hpp"
#include "verba/perm.hpp"

namespace verba {

/// Regular action of Z/n on n points.
PermGroup cyclic_group(unsigned n);

/// Rotation and reflection on n points, n >= 3. Order 2n.
PermGroup dihedral_group(unsigned n);

/// Natural action on n points.
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);

/// Regular action of (Z/p)^r on p^r points; vector v sits at index
/// sum v_i p^i.
PermGroup elementary_abelian_group(unsigned p, unsigned r);

/// Disjoint action on degree(A) + degree(B) points.
PermGroup direct_product(const PermGroup& A, const PermGroup& B);

/// Translations of (Z/p)^r together with the row-vector actions v -> v M of
/// the given r x r matrices (entries mod p, must be invertible).
PermGroup affine_group(unsigned p, unsigned r,
                       const std::vector<std::vector<std::vector<unsigned>>>& mats);

/// (C3 x C3) : D8 on the 9 points of a 2-dimensional space over F_3, with
/// the named generators: g1 negates the first coordinate, g2 swaps the
/// coordinates, g3 = [g2, g1] negates both, h1 and h2 translate by the unit
/// vectors.
struct Group72 {
  PermGroup group;
  Perm g1, g2, g3, h1, h2;
};
Group72 group_72();

/// SL(2,q) acting on the q^2 - 1 nonzero row vectors, generated by the two
/// elementary transvections.
PermGroup special_linear_2(unsigned q);

/// JSON file format: {"name": ..., "degree": n, "generators": [[...], ...]}
/// with 1-based image arrays.
struct NamedGroup {
  std::string name;
  PermGroup group;
};
NamedGroup load_group(const std::string& path);
void save_group(const std::string& path, const std::string& name,
                const PermGroup& G);

struct CatalogEntry {
  std::string name;
  std::uint64_t expected_order;
  std::vector<std::string> tags;  // exactly the structural predicates that hold
  std::function<PermGroup()> construct;
};

/// Groups of order up to 200 plus alt5 and sl2_5.
const std::vector<CatalogEntry>& default_catalog();

const CatalogEntry* find_catalog_entry(const std::string& name);

/// A catalog name, or a path to a group file.
NamedGroup make_group(const std::string& spec);

}  // namespace verba

#endif
