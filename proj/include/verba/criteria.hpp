#ifndef VERBA_CRITERIA_HPP
#define VERBA_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verba/group.hpp"
#include "verba/report.hpp"
#include "verba/values.hpp"
#include "verba/word.hpp"

namespace verba {

/// The central property: for every value x of p'-order and every nontrivial
/// value y of order divisible by p, p divides o(xy). x and y are scanned in
/// ascending element order and the first violation becomes the witness.
/// x may be the identity; it is never special-cased away.
CheckReport satisfies_p_property(const PermGroup& G, const std::string& group_name,
                                 const Word& w, std::uint64_t p);

/// Same quantifier over a set given directly.
CheckReport property_on_set(const std::string& group_name, const ValueSet& V,
                            std::uint64_t p);

/// True iff (x, y) violates the condition over V: both are values, x has
/// p'-order, y is nontrivial of order divisible by p, and p does not divide
/// o(xy).
bool verify_property_witness(const ValueSet& V, std::uint64_t p, const Perm& x,
                             const Perm& y);

/// The whole-group order condition (the property with w = x1). holds is the
/// condition itself; the witness records is_p_nilpotent and flags any
/// disagreement, which would be a fatal inconsistency.
CheckReport check_corollary_a(const PermGroup& G, const std::string& group_name,
                              std::uint64_t p);

/// holds iff the property for gamma_k agrees with p-nilpotency of the k-th
/// lower central term.
CheckReport check_theorem_gamma(const PermGroup& G, const std::string& group_name,
                                unsigned k, std::uint64_t p);

/// Soluble groups, k >= 2: holds iff the property for delta_k agrees with
/// p-nilpotency of the k-th derived term. Skipped when G is not soluble.
CheckReport check_theorem_delta(const PermGroup& G, const std::string& group_name,
                                unsigned k, std::uint64_t p);

/// N_G(H)/C_G(H) must be a p-group for every subgroup H of one fixed Sylow
/// p-subgroup; exact because every p-subgroup is conjugate into it and the
/// condition is conjugation-invariant. The witness records agreement with
/// is_p_nilpotent. Throws CapExceeded when the Sylow subgroup's order is
/// above the subgroup enumeration bound.
CheckReport frobenius_p_nilpotent(const PermGroup& G, const std::string& group_name,
                                  std::uint64_t p);

struct LemmaParams {
  unsigned k = 2;
  std::uint64_t p = 2;
  std::uint64_t q = 2;
  std::optional<Word> word;  // closure lemmas; defaults to gamma_word(k)
};

/// The identifiers accepted by lemma_check.
const std::vector<std::string>& lemma_ids();

/// One lemma instance. Unmet hypotheses give skipped = true with the reason
/// in the witness, never a vacuous holds.
CheckReport lemma_check(const std::string& id, const PermGroup& G,
                        const std::string& group_name, const LemmaParams& params);

/// Every applicable lemma instance for one group: inclusion for k <= 3, the
/// generation and focal lemmas where hypotheses apply, the p'-value lemmas
/// wherever the property holds, closure sampling, and the quasisimple value
/// identity.
std::vector<CheckReport> lemma_suite(const PermGroup& G,
                                     const std::string& group_name);

}  // namespace verba

#endif
