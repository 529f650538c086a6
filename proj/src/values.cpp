#include "verba/values.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "verba/caps.hpp"
#include "verba/errors.hpp"

namespace verba {

namespace {

std::vector<Perm> sorted_unique(std::unordered_set<Perm>&& set) {
  std::vector<Perm> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> multilinear_values(const PermGroup& G, const Word& w) {
  if (w.kind() == Word::Kind::variable) return G.elements();
  std::vector<Perm> lhs = multilinear_values(G, w.left());
  std::vector<Perm> rhs = multilinear_values(G, w.right());
  std::unordered_set<Perm> out;
  for (const Perm& a : lhs)
    for (const Perm& b : rhs) out.insert(commutator(a, b));
  return sorted_unique(std::move(out));
}

std::vector<Perm> power_values(const PermGroup& G, std::int64_t n) {
  std::unordered_set<Perm> out;
  for (const Perm& g : G.elements()) out.insert(g.pow(n));
  return sorted_unique(std::move(out));
}

std::vector<Perm> enumerated_values(const PermGroup& G, const Word& w) {
  const auto& els = G.elements();
  const unsigned arity = w.arity();
  const std::uint64_t cap = global_caps().tuples;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (els.size() > cap / total)
      throw CapExceeded("tuple enumeration", cap + 1, cap);
    total *= els.size();
  }
  std::vector<Perm> args(arity, els.front());
  std::vector<std::size_t> odometer(arity, 0);
  std::unordered_set<Perm> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    out.insert(evaluate_word(w, args));
    for (unsigned i = 0; i < arity; ++i) {
      if (++odometer[i] < els.size()) {
        args[i] = els[odometer[i]];
        break;
      }
      odometer[i] = 0;
      args[i] = els.front();
    }
  }
  return sorted_unique(std::move(out));
}

}  // namespace

bool ValueSet::contains(const Perm& p) const {
  return std::binary_search(values.begin(), values.end(), p);
}

ValueSet word_values(const PermGroup& G, const Word& w) {
  ValueSet out;
  out.label = descriptor(w);
  if (is_multilinear_commutator(w)) {
    out.values = multilinear_values(G, w);
  } else if (auto pw = power_word_form(w)) {
    out.values = power_values(G, pw->second);
  } else {
    out.values = enumerated_values(G, w);
  }
  return out;
}

ValueSet external_value_set(const PermGroup& G, std::vector<Perm> values) {
  for (const Perm& v : values)
    if (!G.contains(v))
      throw std::invalid_argument("external value outside the group");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return ValueSet{"external set", std::move(values)};
}

PermGroup verbal_subgroup(const PermGroup& G, const Word& w) {
  return PermGroup(G.degree(), word_values(G, w).values);
}

bool conjugation_closed(const PermGroup& G, const ValueSet& V) {
  for (const Perm& v : V.values)
    for (const Perm& g : G.generators())
      if (!V.contains(conjugate(v, g))) return false;
  return true;
}

bool inversion_closed(const ValueSet& V) {
  for (const Perm& v : V.values)
    if (!V.contains(v.inverse())) return false;
  return true;
}

}  // namespace verba
