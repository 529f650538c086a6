#ifndef VERBA_VALUES_HPP
#define VERBA_VALUES_HPP

#include <string>
#include <vector>

#include "verba/group.hpp"
#include "verba/perm.hpp"
#include "verba/word.hpp"

namespace verba {

/// The set of w-values of a group, sorted ascending.
struct ValueSet {
  std::string label;  // word descriptor, or "external set"
  std::vector<Perm> values;

  bool contains(const Perm& p) const;
};

/// Exact value set. Multilinear commutator words (gamma and delta included)
/// are computed by the recursion values([u,v]) = {[a,b]}, valid because the
/// sub-words use disjoint variables; powers of one variable by a direct power
/// map; anything else by full tuple enumeration, which throws CapExceeded
/// past the tuple cap rather than truncating.
ValueSet word_values(const PermGroup& G, const Word& w);

/// Wraps a set given from outside as a ValueSet; every element must be in G.
ValueSet external_value_set(const PermGroup& G, std::vector<Perm> values);

/// <G_w>.
PermGroup verbal_subgroup(const PermGroup& G, const Word& w);

bool conjugation_closed(const PermGroup& G, const ValueSet& V);
bool inversion_closed(const ValueSet& V);

}  // namespace verba

#endif
