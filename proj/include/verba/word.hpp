#ifndef VERBA_WORD_HPP
#define VERBA_WORD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "verba/perm.hpp"

namespace verba {

/// A free-group word: variables x1, x2, ... combined by juxtaposition,
/// integer powers (x^-1 is the inverse) and brackets [u,v] = u^-1 v^-1 u v.
/// Immutable; copies share the tree.
class Word {
public:
  enum class Kind { variable, product, power, bracket };

  static Word variable(unsigned index);            // index >= 1
  static Word product(std::vector<Word> factors);  // flattens nested products
  static Word power(Word base, std::int64_t exponent);
  static Word bracket(Word left, Word right);

  Kind kind() const;
  unsigned variable_index() const;         // variable only
  const std::vector<Word>& factors() const;  // product only
  const Word& base() const;                // power only
  std::int64_t exponent() const;           // power only
  const Word& left() const;                // bracket only
  const Word& right() const;               // bracket only

  /// Highest variable index used.
  unsigned arity() const;

  /// Structural equality.
  bool operator==(const Word& rhs) const;
  bool operator!=(const Word& rhs) const { return !(*this == rhs); }

private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// [x1,...,xk], left-nested; gamma_word(1) = x1.
Word gamma_word(unsigned k);

/// Nested commutator on 2^k distinct variables; delta_word(0) = x1.
Word delta_word(unsigned k);

/// x1^n.
Word power_word(std::int64_t n);

/// Grammar: word := term+ ; term := atom ('^' int)? ;
/// atom := 'x' int | '[' word (',' word)+ ']' | '(' word ')'.
/// Multi-argument brackets left-nest: [u,v,w] = [[u,v],w].
/// Throws WordParseError with a 0-based position.
Word parse_word(const std::string& text);

/// Accepts the shortcuts gamma:k, delta:k, pow:n, or grammar text.
Word word_from_descriptor(const std::string& text);

/// Canonical form with minimal parentheses; parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

/// gamma:k / delta:k / pow:n when the word matches one structurally,
/// otherwise the printed form.
std::string descriptor(const Word& w);

/// Substitutes args[i-1] for xi. Requires args.size() >= arity and a common
/// degree.
Perm evaluate_word(const Word& w, const std::vector<Perm>& args);

/// Nested brackets over all-distinct variables (gamma and delta words are).
bool is_multilinear_commutator(const Word& w);

/// Syntactic check: the exponent sum of every variable is zero.
bool is_commutator_word(const Word& w);

/// (i, n) when the word is xi^n, nothing otherwise.
std::optional<std::pair<unsigned, std::int64_t>> power_word_form(const Word& w);

}  // namespace verba

#endif
