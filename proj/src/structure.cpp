#include "verba/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "verba/errors.hpp"

namespace verba {

namespace {

void require_members(const PermGroup& G, const std::vector<Perm>& S) {
  for (const Perm& s : S)
    if (!G.contains(s))
      throw std::invalid_argument("element outside the ambient group");
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Join of subgroups of a common parent, generated by the union.
PermGroup join(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), gens);
}

}  // namespace

PermGroup subgroup_generated(const PermGroup& G, const std::vector<Perm>& S) {
  require_members(G, S);
  return PermGroup(G.degree(), S);
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& S) {
  require_members(G, S);
  std::vector<Perm> gens;
  for (const Perm& s : S) {
    if (s.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  PermGroup H(G.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Perm c = conjugate(gens[i], g);
      if (!H.contains(c)) {
        gens.push_back(std::move(c));
        H = PermGroup(G.degree(), gens);
      }
    }
  }
  return H;
}

PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree())
    throw std::invalid_argument("degree mismatch in commutator subgroup");
  PermGroup joined = join(A, B);
  std::vector<Perm> brackets;
  for (const Perm& a : A.generators())
    for (const Perm& b : B.generators())
      brackets.push_back(commutator(a, b));
  return normal_closure(joined, brackets);
}

PermGroup lower_central_term(const PermGroup& G, unsigned k) {
  if (k == 0) throw std::invalid_argument("lower central terms start at k = 1");
  PermGroup current = G;
  for (unsigned i = 2; i <= k; ++i) {
    PermGroup next = commutator_subgroup(current, G);
    if (groups_equal(next, current)) return current;
    current = next;
  }
  return current;
}

Series lower_central_series(const PermGroup& G) {
  Series s{SeriesKind::lower_central, {G}};
  for (;;) {
    PermGroup next = commutator_subgroup(s.terms.back(), G);
    bool stable = groups_equal(next, s.terms.back());
    s.terms.push_back(std::move(next));
    if (stable) return s;
  }
}

PermGroup derived_term(const PermGroup& G, unsigned k) {
  PermGroup current = G;
  for (unsigned i = 1; i <= k; ++i) {
    PermGroup next = commutator_subgroup(current, current);
    if (groups_equal(next, current)) return current;
    current = next;
  }
  return current;
}

Series derived_series(const PermGroup& G) {
  Series s{SeriesKind::derived, {G}};
  for (;;) {
    PermGroup next = commutator_subgroup(s.terms.back(), s.terms.back());
    bool stable = groups_equal(next, s.terms.back());
    s.terms.push_back(std::move(next));
    if (stable) return s;
  }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

std::uint64_t exponent(const PermGroup& G) {
  std::uint64_t e = 1;
  for (const Perm& g : G.elements()) e = std::lcm(e, element_order(g));
  return e;
}

PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const std::uint64_t target = p_part(G.order(), p);
  PermGroup P = PermGroup::trivial(G.degree());
  std::vector<Perm> gens;
  while (P.order() < target) {
    // A proper p-subgroup has p dividing [N_G(P):P], so a p-element of
    // N_G(P) \ P always exists.
    PermGroup N = P.is_trivial() ? G : normalizer(G, P);
    bool extended = false;
    for (const Perm& x : N.elements()) {
      if (P.contains(x) || !is_power_of(element_order(x), p)) continue;
      gens.push_back(x);
      P = PermGroup(G.degree(), gens);
      extended = true;
      break;
    }
    if (!extended)
      throw std::logic_error("sylow growth stalled below the p-part");
  }
  return P;
}

PermGroup p_core(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<Perm> found;
  for (const Perm& e : G.elements()) {
    if (e.is_identity() || !is_power_of(element_order(e), p)) continue;
    if (is_power_of(normal_closure(G, {e}).order(), p)) found.push_back(e);
  }
  return PermGroup(G.degree(), found);
}

PermGroup p_prime_core(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<Perm> found;
  for (const Perm& e : G.elements()) {
    if (e.is_identity() || element_order(e) % p == 0) continue;
    if (normal_closure(G, {e}).order() % p != 0) found.push_back(e);
  }
  return PermGroup(G.degree(), found);
}

PermGroup fitting(const PermGroup& G) {
  std::vector<Perm> gens;
  for (std::uint64_t q : prime_divisors(G.order())) {
    const auto qgens = p_core(G, q).generators();
    gens.insert(gens.end(), qgens.begin(), qgens.end());
  }
  return PermGroup(G.degree(), gens);
}

PermGroup p_fitting(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<Perm> found;
  for (const Perm& e : G.elements()) {
    if (e.is_identity()) continue;
    if (is_p_nilpotent(normal_closure(G, {e}), p)) found.push_back(e);
  }
  return PermGroup(G.degree(), found);
}

bool is_p_nilpotent(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<Perm> pprime;
  for (const Perm& e : G.elements())
    if (element_order(e) % p != 0) pprime.push_back(e);
  return PermGroup(G.degree(), pprime).order() % p != 0;
}

bool is_p_group(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return is_power_of(G.order(), p);
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_nilpotent(const PermGroup& G) {
  return lower_central_series(G).terms.back().is_trivial();
}

bool is_soluble(const PermGroup& G) {
  return derived_series(G).terms.back().is_trivial();
}

bool is_metanilpotent(const PermGroup& G) {
  Quotient Q = quotient_group(G, fitting(G));
  return is_nilpotent(Q.group);
}

bool is_perfect(const PermGroup& G) {
  return derived_term(G, 1).order() == G.order();
}

GroupPredicates predicates(const PermGroup& G) {
  return {is_abelian(G), is_nilpotent(G), is_soluble(G), is_metanilpotent(G),
          is_perfect(G)};
}

bool is_simple(const PermGroup& G) {
  if (G.order() == 1) return false;
  for (const Perm& e : G.elements()) {
    if (e.is_identity()) continue;
    if (normal_closure(G, {e}).order() < G.order()) return false;
  }
  return true;
}

bool is_quasisimple(const PermGroup& G) {
  if (derived_term(G, 1).order() != G.order()) return false;
  Quotient Q = quotient_group(G, center(G));
  return is_simple(Q.group);
}

Perm Quotient::project(const Perm& x) const {
  std::vector<unsigned> images(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto it = coset_index.find(reps[i] * x);
    if (it == coset_index.end())
      throw std::invalid_argument("element outside the quotient's parent");
    images[i] = it->second;
  }
  return Perm(std::move(images));
}

Quotient quotient_group(const PermGroup& G, const PermGroup& N) {
  if (G.degree() != N.degree())
    throw std::invalid_argument("degree mismatch in quotient");
  for (const Perm& n : N.generators()) {
    if (!G.contains(n))
      throw std::invalid_argument("subgroup not contained in parent");
    for (const Perm& g : G.generators())
      if (!N.contains(conjugate(n, g)))
        throw std::invalid_argument("quotient by a non-normal subgroup");
  }
  std::vector<Perm> reps;
  std::unordered_map<Perm, unsigned> coset_index;
  const auto& els = G.elements();
  const auto& nels = N.elements();
  for (const Perm& e : els) {
    if (coset_index.count(e)) continue;
    const unsigned idx = static_cast<unsigned>(reps.size());
    reps.push_back(e);
    for (const Perm& n : nels) coset_index.emplace(n * e, idx);
  }
  auto project = [&](const Perm& x) {
    std::vector<unsigned> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      images[i] = coset_index.at(reps[i] * x);
    return Perm(std::move(images));
  };
  std::vector<Perm> qgens;
  for (const Perm& g : G.generators()) qgens.push_back(project(g));
  PermGroup Q(static_cast<unsigned>(reps.size()), std::move(qgens));
  return Quotient{std::move(Q), std::move(reps), std::move(coset_index)};
}

std::vector<std::uint64_t> abelian_invariants(const PermGroup& A) {
  const auto& gens = A.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i]))
        throw std::invalid_argument("abelian invariants of a non-abelian group");
  if (A.order() == 1) return {};
  // In an abelian group the exponent is attained, and a cyclic subgroup of
  // maximal order is a direct factor, so invariants(A) = invariants(A / <x>)
  // followed by o(x).
  const std::uint64_t e = exponent(A);
  const Perm* x = nullptr;
  for (const Perm& g : A.elements())
    if (element_order(g) == e) {
      x = &g;
      break;
    }
  if (x == nullptr) throw std::logic_error("exponent not attained");
  Quotient Q = quotient_group(A, PermGroup(A.degree(), {*x}));
  std::vector<std::uint64_t> inv = abelian_invariants(Q.group);
  inv.push_back(e);
  return inv;
}

PermGroup centralizer(const PermGroup& G, const std::vector<Perm>& S) {
  require_members(G, S);
  std::vector<Perm> found;
  for (const Perm& x : G.elements()) {
    bool central = true;
    for (const Perm& s : S)
      if (!(x * s == s * x)) {
        central = false;
        break;
      }
    if (central) found.push_back(x);
  }
  return group_from_elements(G.degree(), found);
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree())
    throw std::invalid_argument("degree mismatch in normalizer");
  std::vector<Perm> found;
  for (const Perm& x : G.elements()) {
    bool normalizes = true;
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) found.push_back(x);
  }
  return group_from_elements(G.degree(), found);
}

PermGroup center(const PermGroup& G) { return centralizer(G, G.generators()); }

std::vector<PermGroup> all_subgroups(const PermGroup& G, std::uint64_t bound) {
  if (G.order() > bound)
    throw CapExceeded("subgroup enumeration", G.order(), bound);
  const auto& els = G.elements();
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> queue;
  queue.push_back(PermGroup::trivial(G.degree()));
  seen.insert(queue.front().elements());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const PermGroup H = queue[i];
    for (const Perm& x : els) {
      if (H.contains(x)) continue;
      std::vector<Perm> gens = H.generators();
      gens.push_back(x);
      PermGroup K(G.degree(), gens);
      if (seen.insert(K.elements()).second) queue.push_back(std::move(K));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return queue;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& G) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> found;
  for (const Perm& e : G.elements()) {
    PermGroup closure = normal_closure(G, {e});
    if (seen.insert(closure.elements()).second) found.push_back(std::move(closure));
  }
  // Every normal subgroup is the join of the closures of its elements, so
  // closing the single-element closures under pairwise joins finds them all.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PermGroup J = join(found[i], found[j]);
      if (seen.insert(J.elements()).second) found.push_back(std::move(J));
    }
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace verba
