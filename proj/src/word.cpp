#include "verba/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "verba/errors.hpp"

namespace verba {

struct Word::Node {
  Kind kind;
  unsigned index = 0;           // variable
  std::vector<Word> children;   // product factors / {base} / {left, right}
  std::int64_t exponent = 0;    // power
  unsigned arity = 0;
};

Word Word::variable(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->index = index;
  node->arity = index;
  return Word(std::move(node));
}

Word Word::product(std::vector<Word> factors) {
  std::vector<Word> flat;
  for (Word& f : factors) {
    if (f.kind() == Kind::product) {
      for (const Word& inner : f.factors()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) throw std::invalid_argument("empty product");
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::product;
  for (const Word& f : flat) node->arity = std::max(node->arity, f.arity());
  node->children = std::move(flat);
  return Word(std::move(node));
}

Word Word::power(Word base, std::int64_t exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->arity = base.arity();
  node->children.push_back(std::move(base));
  node->exponent = exponent;
  return Word(std::move(node));
}

Word Word::bracket(Word left, Word right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::bracket;
  node->arity = std::max(left.arity(), right.arity());
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Word(std::move(node));
}

Word::Kind Word::kind() const { return node_->kind; }

unsigned Word::variable_index() const { return node_->index; }

const std::vector<Word>& Word::factors() const { return node_->children; }

const Word& Word::base() const { return node_->children[0]; }

std::int64_t Word::exponent() const { return node_->exponent; }

const Word& Word::left() const { return node_->children[0]; }

const Word& Word::right() const { return node_->children[1]; }

unsigned Word::arity() const { return node_->arity; }

bool Word::operator==(const Word& rhs) const {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  switch (kind()) {
    case Kind::variable:
      return variable_index() == rhs.variable_index();
    case Kind::power:
      return exponent() == rhs.exponent() && base() == rhs.base();
    case Kind::bracket:
      return left() == rhs.left() && right() == rhs.right();
    case Kind::product: {
      const auto& a = factors();
      const auto& b = rhs.factors();
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    }
  }
  return false;
}

Word gamma_word(unsigned k) {
  if (k == 0) throw std::invalid_argument("gamma words start at k = 1");
  Word w = Word::variable(1);
  for (unsigned i = 2; i <= k; ++i) w = Word::bracket(w, Word::variable(i));
  return w;
}

namespace {

Word delta_on(unsigned k, unsigned offset) {
  if (k == 0) return Word::variable(offset + 1);
  return Word::bracket(delta_on(k - 1, offset),
                       delta_on(k - 1, offset + (1u << (k - 1))));
}

}  // namespace

Word delta_word(unsigned k) { return delta_on(k, 0); }

Word power_word(std::int64_t n) { return Word::power(Word::variable(1), n); }

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size())
      throw WordParseError("unexpected trailing input", pos_);
    return w;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw WordParseError(std::string("expected ") + what, pos_);
    ++pos_;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw WordParseError("expected integer", start);
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      value = value * 10 + (text_[pos_++] - '0');
    return negative ? -value : value;
  }

  Word word() {
    std::vector<Word> terms;
    terms.push_back(term());
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != 'x' && c != '[' && c != '(') break;
      terms.push_back(term());
    }
    return Word::product(std::move(terms));
  }

  Word term() {
    Word a = atom();
    if (peek_is('^')) {
      ++pos_;
      return Word::power(std::move(a), integer());
    }
    return a;
  }

  Word atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw WordParseError("expected a word", pos_);
    char c = text_[pos_];
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      std::int64_t idx = integer();
      if (idx <= 0) throw WordParseError("variable index must be positive", at);
      return Word::variable(static_cast<unsigned>(idx));
    }
    if (c == '[') {
      ++pos_;
      Word w = word();
      expect(',', "',' in bracket");
      w = Word::bracket(std::move(w), word());
      while (peek_is(',')) {
        ++pos_;
        w = Word::bracket(std::move(w), word());
      }
      expect(']', "']'");
      return w;
    }
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')', "')'");
      return w;
    }
    throw WordParseError("expected variable, bracket, or parenthesis", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) { return Parser(text).parse(); }

Word word_from_descriptor(const std::string& text) {
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (head == "gamma" || head == "delta" || head == "pow") {
      std::int64_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number in word shortcut: " + text);
      }
      if (head == "gamma") {
        if (n < 1) throw std::invalid_argument("gamma:k requires k >= 1");
        return gamma_word(static_cast<unsigned>(n));
      }
      if (head == "delta") {
        if (n < 0) throw std::invalid_argument("delta:k requires k >= 0");
        return delta_word(static_cast<unsigned>(n));
      }
      return power_word(n);
    }
  }
  return parse_word(text);
}

namespace {

void print_into(const Word& w, std::ostringstream& os) {
  switch (w.kind()) {
    case Word::Kind::variable:
      os << 'x' << w.variable_index();
      return;
    case Word::Kind::product:
      for (const Word& f : w.factors()) print_into(f, os);
      return;
    case Word::Kind::power: {
      const bool parens = w.base().kind() == Word::Kind::product ||
                          w.base().kind() == Word::Kind::power;
      if (parens) os << '(';
      print_into(w.base(), os);
      if (parens) os << ')';
      os << '^' << w.exponent();
      return;
    }
    case Word::Kind::bracket: {
      // Flatten the left spine so [[u,v],w] prints as [u,v,w].
      std::vector<const Word*> args;
      const Word* spine = &w;
      while (spine->kind() == Word::Kind::bracket) {
        args.push_back(&spine->right());
        spine = &spine->left();
      }
      args.push_back(spine);
      std::reverse(args.begin(), args.end());
      os << '[';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        print_into(*args[i], os);
      }
      os << ']';
      return;
    }
  }
}

}  // namespace

std::string print_word(const Word& w) {
  std::ostringstream os;
  print_into(w, os);
  return os.str();
}

std::string descriptor(const Word& w) {
  for (unsigned k = 1; k <= w.arity(); ++k)
    if (w == gamma_word(k)) return "gamma:" + std::to_string(k);
  for (unsigned k = 0; (1u << k) <= w.arity(); ++k)
    if (w == delta_word(k)) return "delta:" + std::to_string(k);
  if (auto pw = power_word_form(w); pw && pw->first == 1)
    return "pow:" + std::to_string(pw->second);
  return print_word(w);
}

Perm evaluate_word(const Word& w, const std::vector<Perm>& args) {
  if (args.size() < w.arity())
    throw std::invalid_argument("not enough arguments for the word's arity");
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i].degree() != args[0].degree())
      throw std::invalid_argument("argument degree mismatch");
  switch (w.kind()) {
    case Word::Kind::variable:
      return args[w.variable_index() - 1];
    case Word::Kind::product: {
      Perm acc = evaluate_word(w.factors().front(), args);
      for (std::size_t i = 1; i < w.factors().size(); ++i)
        acc = acc * evaluate_word(w.factors()[i], args);
      return acc;
    }
    case Word::Kind::power:
      return evaluate_word(w.base(), args).pow(w.exponent());
    case Word::Kind::bracket:
      return commutator(evaluate_word(w.left(), args),
                        evaluate_word(w.right(), args));
  }
  throw std::logic_error("unreachable word kind");
}

namespace {

bool collect_multilinear(const Word& w, std::vector<unsigned>& vars) {
  if (w.kind() == Word::Kind::variable) {
    vars.push_back(w.variable_index());
    return true;
  }
  if (w.kind() != Word::Kind::bracket) return false;
  std::vector<unsigned> lvars, rvars;
  if (!collect_multilinear(w.left(), lvars)) return false;
  if (!collect_multilinear(w.right(), rvars)) return false;
  for (unsigned v : lvars)
    if (std::find(rvars.begin(), rvars.end(), v) != rvars.end()) return false;
  vars = std::move(lvars);
  vars.insert(vars.end(), rvars.begin(), rvars.end());
  return true;
}

void exponent_sums(const Word& w, std::int64_t coeff,
                   std::map<unsigned, std::int64_t>& sums) {
  switch (w.kind()) {
    case Word::Kind::variable:
      sums[w.variable_index()] += coeff;
      return;
    case Word::Kind::product:
      for (const Word& f : w.factors()) exponent_sums(f, coeff, sums);
      return;
    case Word::Kind::power:
      exponent_sums(w.base(), coeff * w.exponent(), sums);
      return;
    case Word::Kind::bracket:
      // [u,v] = u^-1 v^-1 u v contributes zero to every variable.
      return;
  }
}

}  // namespace

bool is_multilinear_commutator(const Word& w) {
  std::vector<unsigned> vars;
  return collect_multilinear(w, vars);
}

bool is_commutator_word(const Word& w) {
  std::map<unsigned, std::int64_t> sums;
  exponent_sums(w, 1, sums);
  for (const auto& [var, sum] : sums)
    if (sum != 0) return false;
  return true;
}

std::optional<std::pair<unsigned, std::int64_t>> power_word_form(const Word& w) {
  if (w.kind() == Word::Kind::power &&
      w.base().kind() == Word::Kind::variable)
    return std::make_pair(w.base().variable_index(), w.exponent());
  return std::nullopt;
}

}  // namespace verba
