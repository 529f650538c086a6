#ifndef VERBA_GROUP_HPP
#define VERBA_GROUP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "verba/perm.hpp"

namespace verba {

/// Stabilizer chain with explicit transversals. Base points are chosen
/// deterministically (smallest moved point of the first element that reaches
/// each level), so two builds from the same generator list are identical.
class StabilizerChain {
public:
  StabilizerChain(unsigned degree, const std::vector<Perm>& generators);

  std::uint64_t order() const { return order_; }
  bool contains(const Perm& p) const;

  /// Strips p through the chain. Returns the residue and the level at which
  /// stripping stopped; residue is the identity iff p is in the group.
  std::pair<Perm, std::size_t> strip(Perm p) const;

private:
  struct Level {
    unsigned base;
    std::vector<Perm> gens;
    std::vector<unsigned> orbit;        // BFS discovery order
    std::vector<int> transversal_slot;  // point -> index into transversal, -1 if outside
    std::vector<Perm> transversal;      // u with base^u = orbit point
  };

  // Generators stored at levels >= level; exactly the stored elements that fix
  // the bases above that level.
  std::vector<Perm> gens_from(std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  void insert(Perm residue, std::size_t level);
  bool close_level(std::size_t level);

  unsigned degree_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// A permutation group given by generators. Copies share state; the
/// stabilizer chain is built on construction, the element list on demand.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> generators);
  static PermGroup trivial(unsigned degree);

  unsigned degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const;
  bool contains(const Perm& p) const;

  /// All elements in ascending order. Enumerated by breadth-first closure of
  /// the generators, independent of the stabilizer chain; throws CapExceeded
  /// beyond the enumeration cap.
  const std::vector<Perm>& elements() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Smallest group containing all given elements, with a reduced generating
/// set picked by a deterministic greedy scan.
PermGroup group_from_elements(unsigned degree, const std::vector<Perm>& elements);

/// Equality as subgroups of the common symmetric group.
bool groups_equal(const PermGroup& a, const PermGroup& b);

/// True if every generator of b lies in a.
bool group_contains(const PermGroup& a, const PermGroup& b);

}  // namespace verba

#endif
