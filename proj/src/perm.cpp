#include "verba/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace verba {

namespace {

void check_bijection(const std::vector<unsigned>& images) {
  std::vector<char> seen(images.size(), 0);
  for (unsigned v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

}  // namespace

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("degree must be positive");
  check_bijection(images_);
}

Perm Perm::from_one_based(const std::vector<unsigned>& images) {
  std::vector<unsigned> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0 || images[i] > images.size())
      throw std::invalid_argument("1-based image out of range");
    zero[i] = images[i] - 1;
  }
  return Perm(std::move(zero));
}

Perm Perm::from_cycles(unsigned degree, const std::string& text) {
  Perm result(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at position " +
                                  std::to_string(i));
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle at position " +
                                    std::to_string(i));
      unsigned value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<unsigned>(text[i++] - '0');
      if (value == 0 || value > degree)
        throw std::invalid_argument("point " + std::to_string(value) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (used[value - 1])
        throw std::invalid_argument("point " + std::to_string(value) +
                                    " repeated in cycle notation");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
    }
    if (i == text.size())
      throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
      result.images_[cycle[j]] = cycle[j + 1];
    if (cycle.size() > 1)
      result.images_[cycle.back()] = cycle.front();
    skip_ws();
  }
  check_bijection(result.images_);
  return result;
}

bool Perm::is_identity() const {
  for (unsigned p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

std::vector<unsigned> Perm::one_based_images() const {
  std::vector<unsigned> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in product");
  std::vector<unsigned> out(images_.size());
  for (unsigned p = 0; p < images_.size(); ++p) out[p] = rhs.images_[images_[p]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<unsigned> out(images_.size());
  for (unsigned p = 0; p < images_.size(); ++p) out[images_[p]] = p;
  return Perm(std::move(out));
}

Perm Perm::pow(std::int64_t n) const {
  Perm base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  Perm acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::operator<(const Perm& rhs) const {
  if (degree() != rhs.degree()) return degree() < rhs.degree();
  return images_ < rhs.images_;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<char> seen(images_.size(), 0);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<unsigned> cycle;
    unsigned p = start;
    do {
      seen[p] = 1;
      cycle.push_back(p + 1);
      p = images_[p];
    } while (p != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Perm compose(const Perm& a, const Perm& b) { return a * b; }

Perm inverse(const Perm& a) { return a.inverse(); }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm conjugate(const Perm& a, const Perm& b) { return b.inverse() * a * b; }

std::uint64_t element_order(const Perm& a) {
  std::uint64_t order = 1;
  for (const auto& cycle : a.cycles())
    order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  return order;
}

Perm iterated_commutator(const Perm& g, const Perm& x, unsigned m) {
  Perm acc = g;
  for (unsigned i = 0; i < m; ++i) acc = commutator(acc, x);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.cycle_string();
}

}  // namespace verba

std::size_t std::hash<verba::Perm>::operator()(const verba::Perm& p) const noexcept {
  std::size_t h = p.degree();
  for (unsigned v : p.images())
    h = h * 1000003u + v + 1;
  return h;
}
