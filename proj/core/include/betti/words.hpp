#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

// A letter is a generator index with a sign, packed so that the 2d letters of
// a rank-d free group are 0..2d-1: letter 2i is x_{i}, letter 2i+1 is x_{i}^-1.
using Letter = std::uint32_t;

constexpr Letter make_letter(std::uint32_t gen, bool inv = false) {
  return 2 * gen + (inv ? 1u : 0u);
}
constexpr Letter inverse_letter(Letter l) { return l ^ 1u; }
constexpr std::uint32_t generator_of(Letter l) { return l >> 1; }
constexpr bool is_inverse(Letter l) { return (l & 1u) != 0; }

/// A freely reduced word: no adjacent mutually inverse letters.
/// The empty word is the identity.
class Word {
public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }
  /// Single-letter word.
  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverted() const;
  Word pow(long n) const;

  /// Largest generator index mentioned plus one; 0 for the identity.
  std::uint32_t generator_span() const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Strips mutually inverse first/last letters; result is conjugate to the input.
Word cyclic_reduce(const Word& w);

/// u v u^-1 v^-1, freely reduced.
Word commutator(const Word& u, const Word& v);

struct Generator {
  std::string name;
};

/// Generators plus freely and cyclically reduced nonempty relator words.
class Presentation {
public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               std::optional<unsigned long> prime_hint = std::nullopt);

  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& name(std::size_t i) const { return generators_[i].name; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<unsigned long> prime_hint() const { return prime_hint_; }

  /// Copy with one more relator (cyclically reduced on ingestion).
  Presentation with_relator(const Word& r) const;
  Presentation with_relators(std::span<const Word> rs) const;

  bool operator==(const Presentation&) const = default;

private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
  std::optional<unsigned long> prime_hint_;
};

/// Parses the presentation grammar:
///   presentation := "<" gens "|" relators ">"
///   gens   := ident ("," ident)*
///   relators := (word ("," word)*)?
///   word   := factor+
///   factor := atom ("^" integer)?
///   atom   := ident | "[" word "," word "]" | "(" word ")"
///   ident  := [A-Za-z][A-Za-z0-9_]*
/// Whitespace is insignificant. Commutator sugar [u,v] expands to u v u^-1 v^-1,
/// w^n to n copies (n < 0: the inverse word repeated, n = 0: the empty factor).
Presentation parse_presentation(std::string_view text);

/// Parses one word against a presentation's generator names. Empty or
/// whitespace-only input is the identity.
Word parse_word(std::string_view text, const Presentation& pres);

/// Comma-separated words; empty input yields an empty list.
std::vector<Word> parse_word_list(std::string_view text, const Presentation& pres);

/// Canonical printer; parse(print(p)) == p. Runs of a letter print as powers.
std::string print_word(const Word& w, const Presentation& pres);
std::string print_presentation(const Presentation& pres);

/// All freely reduced words of length <= max_length over generator_count
/// generators, in length-lexicographic order with letter order
/// x1 < x1^-1 < x2 < x2^-1 < ...; begins with the identity. Deterministic.
std::vector<Word> enumerate_words(std::size_t generator_count, std::size_t max_length);

} // namespace betti
