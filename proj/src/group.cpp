#include "verba/group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "verba/caps.hpp"
#include "verba/errors.hpp"

namespace verba {

Caps& global_caps() {
  static Caps caps;
  return caps;
}

namespace {

unsigned smallest_moved_point(const Perm& p) {
  for (unsigned i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  throw std::logic_error("identity has no moved point");
}

}  // namespace

StabilizerChain::StabilizerChain(unsigned degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
    auto [residue, level] = strip(g);
    if (!residue.is_identity()) insert(std::move(residue), level);
  }
  // Fixpoint: every Schreier generator must strip to the identity. Each
  // insertion strictly grows the product of orbit sizes, so this terminates.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      if (close_level(j)) {
        dirty = true;
        break;
      }
    }
  }
  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

std::vector<Perm> StabilizerChain::gens_from(std::size_t level) const {
  std::vector<Perm> out;
  for (std::size_t j = level; j < levels_.size(); ++j)
    out.insert(out.end(), levels_[j].gens.begin(), levels_[j].gens.end());
  return out;
}

void StabilizerChain::rebuild_orbit(std::size_t index) {
  Level& level = levels_[index];
  const std::vector<Perm> gens = gens_from(index);
  level.orbit.clear();
  level.transversal.clear();
  level.transversal_slot.assign(degree_, -1);
  level.orbit.push_back(level.base);
  level.transversal_slot[level.base] = 0;
  level.transversal.push_back(Perm(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    unsigned point = level.orbit[i];
    for (const Perm& g : gens) {
      unsigned image = g[point];
      if (level.transversal_slot[image] < 0) {
        level.transversal_slot[image] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(image);
        level.transversal.push_back(level.transversal[i] * g);
      }
    }
  }
}

void StabilizerChain::insert(Perm residue, std::size_t level) {
  if (level == levels_.size()) {
    levels_.push_back(Level{smallest_moved_point(residue), {}, {}, {}, {}});
  }
  levels_[level].gens.push_back(std::move(residue));
  // The new generator fixes every base above its level, so it belongs to each
  // of those stabilizers and can extend their orbits too.
  for (std::size_t j = 0; j <= level; ++j) rebuild_orbit(j);
}

bool StabilizerChain::close_level(std::size_t level) {
  const Level& l = levels_[level];
  const std::vector<Perm> gens = gens_from(level);
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    for (const Perm& s : gens) {
      unsigned image = s[l.orbit[i]];
      Perm schreier = l.transversal[i] * s *
                      l.transversal[l.transversal_slot[image]].inverse();
      Perm g = std::move(schreier);
      std::size_t j = level + 1;
      for (; j < levels_.size(); ++j) {
        int slot = levels_[j].transversal_slot[g[levels_[j].base]];
        if (slot < 0) break;
        g = g * levels_[j].transversal[slot].inverse();
      }
      if (!g.is_identity()) {
        insert(std::move(g), j);
        return true;
      }
    }
  }
  return false;
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm p) const {
  std::size_t j = 0;
  for (; j < levels_.size(); ++j) {
    int slot = levels_[j].transversal_slot[p[levels_[j].base]];
    if (slot < 0) return {std::move(p), j};
    p = p * levels_[j].transversal[slot].inverse();
  }
  return {std::move(p), j};
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return strip(p).first.is_identity();
}

struct PermGroup::Impl {
  unsigned degree;
  std::vector<Perm> gens;
  StabilizerChain chain;
  mutable std::mutex elements_mutex;
  mutable std::vector<Perm> elements;

  Impl(unsigned d, std::vector<Perm> g)
      : degree(d), gens(std::move(g)), chain(d, gens) {}
};

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Perm> kept;
  for (Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(kept.begin(), kept.end(), g) == kept.end())
      kept.push_back(std::move(g));
  }
  impl_ = std::make_shared<const Impl>(degree, std::move(kept));
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}); }

unsigned PermGroup::degree() const { return impl_->degree; }

const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }

std::uint64_t PermGroup::order() const { return impl_->chain.order(); }

bool PermGroup::is_trivial() const { return impl_->gens.empty(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != impl_->degree)
    throw std::invalid_argument("permutation degree does not match group degree");
  return impl_->chain.contains(p);
}

const std::vector<Perm>& PermGroup::elements() const {
  std::lock_guard<std::mutex> lock(impl_->elements_mutex);
  if (!impl_->elements.empty()) return impl_->elements;
  const std::uint64_t cap = global_caps().enumeration;
  std::unordered_set<Perm> seen;
  std::vector<Perm> queue;
  queue.emplace_back(impl_->degree);
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : impl_->gens) {
      Perm next = queue[i] * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group enumeration", seen.size(), cap);
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  impl_->elements = std::move(queue);
  return impl_->elements;
}

PermGroup group_from_elements(unsigned degree, const std::vector<Perm>& elements) {
  std::vector<Perm> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Perm> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const Perm& e : sorted) {
    if (e.degree() != degree)
      throw std::invalid_argument("element degree mismatch");
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return current;
}

bool groups_equal(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         group_contains(a, b);
}

bool group_contains(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  for (const Perm& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace verba
