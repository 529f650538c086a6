#ifndef VERBA_STRUCTURE_HPP
#define VERBA_STRUCTURE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "verba/group.hpp"
#include "verba/perm.hpp"

namespace verba {

/// Subgroup results are plain PermGroups on the parent's degree; callers keep
/// track of the parent. Every function taking a parent validates membership.

PermGroup subgroup_generated(const PermGroup& G, const std::vector<Perm>& S);
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& S);

/// [A,B]: normal closure, inside <A union B>, of the generator brackets.
PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B);

enum class SeriesKind { lower_central, derived };

struct Series {
  SeriesKind kind;
  std::vector<PermGroup> terms;  // ends with the first repeated term
};

/// gamma_1 = G, gamma_k = [gamma_{k-1}, G]; k past stabilization returns the
/// stable term.
PermGroup lower_central_term(const PermGroup& G, unsigned k);
Series lower_central_series(const PermGroup& G);

/// G^(0) = G, G^(k) = [G^(k-1), G^(k-1)].
PermGroup derived_term(const PermGroup& G, unsigned k);
Series derived_series(const PermGroup& G);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// lcm of element orders.
std::uint64_t exponent(const PermGroup& G);

/// Subgroup of order p_part(|G|, p); trivial if p does not divide |G|.
/// Grown by extending a p-subgroup with p-elements of its normalizer.
PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p);

/// O_p(G): generated by elements whose normal closure is a p-group.
PermGroup p_core(const PermGroup& G, std::uint64_t p);

/// O_{p'}(G): generated by elements whose normal closure has p'-order.
PermGroup p_prime_core(const PermGroup& G, std::uint64_t p);

/// F(G): product of the p-cores over primes dividing |G|.
PermGroup fitting(const PermGroup& G);

/// Fit_p(G): generated by elements whose normal closure is p-nilpotent.
PermGroup p_fitting(const PermGroup& G, std::uint64_t p);

/// True iff G has a normal p-complement: the subgroup generated by all
/// p'-order elements must itself have p'-order.
bool is_p_nilpotent(const PermGroup& G, std::uint64_t p);

bool is_p_group(const PermGroup& G, std::uint64_t p);

bool is_abelian(const PermGroup& G);
bool is_nilpotent(const PermGroup& G);
bool is_soluble(const PermGroup& G);
bool is_metanilpotent(const PermGroup& G);  // G/F(G) nilpotent
bool is_perfect(const PermGroup& G);

struct GroupPredicates {
  bool is_abelian;
  bool is_nilpotent;
  bool is_soluble;
  bool is_metanilpotent;
  bool is_perfect;
};

GroupPredicates predicates(const PermGroup& G);

bool is_simple(const PermGroup& G);

/// Perfect with simple central quotient.
bool is_quasisimple(const PermGroup& G);

/// G/N realized by the right-coset action; faithful on the quotient since the
/// kernel of the action is N itself.
struct Quotient {
  PermGroup group;
  std::vector<Perm> reps;  // ascending canonical coset representatives
  std::unordered_map<Perm, unsigned> coset_index;

  Perm project(const Perm& x) const;
};

Quotient quotient_group(const PermGroup& G, const PermGroup& N);

/// Invariant factors d_1 | d_2 | ... | d_t with product |A|; empty for the
/// trivial group. Peels a maximal-order cyclic factor and recurses on the
/// quotient.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& A);

PermGroup centralizer(const PermGroup& G, const std::vector<Perm>& S);
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
PermGroup center(const PermGroup& G);

/// Every subgroup, found by closing under one-element extensions. Guarded by
/// `bound` on |G| because subgroup counts explode.
std::vector<PermGroup> all_subgroups(const PermGroup& G, std::uint64_t bound = 256);

/// Every normal subgroup: all joins of single-element normal closures.
std::vector<PermGroup> normal_subgroups(const PermGroup& G);

}  // namespace verba

#endif
