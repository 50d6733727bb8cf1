#include "betti/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "betti/errors.hpp"

namespace betti {

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::inverted() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return Word(std::move(out));
}

Word Word::pow(long n) const {
  if (n == 0) return Word();
  Word base = n > 0 ? *this : inverted();
  std::vector<Letter> raw;
  long reps = n > 0 ? n : -n;
  raw.reserve(static_cast<std::size_t>(reps) * base.size());
  for (long i = 0; i < reps; ++i)
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  return reduce(raw);
}

std::uint32_t Word::generator_span() const {
  std::uint32_t span = 0;
  for (Letter l : letters_) span = std::max(span, generator_of(l) + 1);
  return span;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.letters_.begin(), a.letters_.end());
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(raw);
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> mid(w.letters().begin() + static_cast<std::ptrdiff_t>(lo),
                          w.letters().begin() + static_cast<std::ptrdiff_t>(hi));
  return Word::reduce(mid);
}

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverted() * v.inverted();
}

namespace {

bool valid_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

} // namespace

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators,
                           std::optional<unsigned long> prime_hint)
    : prime_hint_(prime_hint) {
  if (generator_names.empty())
    throw std::invalid_argument("presentation needs at least one generator");
  generators_.reserve(generator_names.size());
  for (auto& n : generator_names) {
    if (!valid_ident(n))
      throw std::invalid_argument("invalid generator name: '" + n + "'");
    for (const auto& g : generators_)
      if (g.name == n) throw std::invalid_argument("duplicate generator name: '" + n + "'");
    generators_.push_back(Generator{std::move(n)});
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    Word cr = cyclic_reduce(r);
    if (cr.empty())
      throw std::invalid_argument("relator reduces to the empty word");
    if (cr.generator_span() > generators_.size())
      throw std::invalid_argument("relator uses a generator outside the presentation");
    relators_.push_back(std::move(cr));
  }
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

Presentation Presentation::with_relator(const Word& r) const {
  return with_relators(std::span<const Word>(&r, 1));
}

Presentation Presentation::with_relators(std::span<const Word> rs) const {
  std::vector<std::string> names;
  names.reserve(generators_.size());
  for (const auto& g : generators_) names.push_back(g.name);
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), rs.begin(), rs.end());
  return Presentation(std::move(names), std::move(rels), prime_hint_);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Ident, Integer, Punct, End } kind = End;
  std::string text;
  long value = 0; // Integer
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      current_.kind = Token::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      if (c == '-') bump();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      current_.kind = Token::Integer;
      current_.text = std::string(text_.substr(start, pos_ - start));
      try {
        current_.value = std::stol(current_.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: " + current_.text, current_.line,
                         current_.column);
      }
      return;
    }
    current_.kind = Token::Punct;
    current_.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>* names)
      : lex_(text), fixed_names_(names) {}

  Presentation parse_presentation() {
    expect_punct("<");
    std::vector<std::string> names;
    names.push_back(expect_ident("generator name"));
    while (is_punct(",")) {
      lex_.take();
      names.push_back(expect_ident("generator name"));
    }
    expect_punct("|");
    own_names_ = names;
    std::vector<Word> relators;
    if (!is_punct(">")) {
      relators.push_back(parse_relator());
      while (is_punct(",")) {
        lex_.take();
        relators.push_back(parse_relator());
      }
    }
    expect_punct(">");
    if (lex_.peek().kind != Token::End)
      fail("trailing input after presentation");
    try {
      return Presentation(std::move(names), std::move(relators));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lex_.peek().line, lex_.peek().column);
    }
  }

  Word parse_single_word() {
    if (lex_.peek().kind == Token::End) return Word();
    Word w = parse_word();
    if (lex_.peek().kind != Token::End) fail("trailing input after word");
    return w;
  }

  std::vector<Word> parse_words() {
    std::vector<Word> out;
    if (lex_.peek().kind == Token::End) return out;
    out.push_back(parse_word());
    while (is_punct(",")) {
      lex_.take();
      out.push_back(parse_word());
    }
    if (lex_.peek().kind != Token::End) fail("trailing input after word list");
    return out;
  }

private:
  Word parse_relator() {
    const Token at = lex_.peek();
    Word w = parse_word();
    if (w.empty())
      throw ParseError("relator reduces to the empty word", at.line, at.column);
    return w;
  }

  Word parse_word() {
    std::vector<Letter> raw;
    if (!starts_factor()) fail("expected a word");
    while (starts_factor()) parse_factor(raw);
    return Word::reduce(raw);
  }

  bool starts_factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident) return true;
    return t.kind == Token::Punct && (t.text == "[" || t.text == "(");
  }

  void parse_factor(std::vector<Letter>& out) {
    std::vector<Letter> atom;
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident) {
      Token id = lex_.take();
      atom.push_back(make_letter(resolve(id), false));
    } else if (is_punct("[")) {
      lex_.take();
      Word u = parse_word();
      expect_punct(",");
      Word v = parse_word();
      expect_punct("]");
      Word c = commutator(u, v);
      atom.assign(c.begin(), c.end());
    } else if (is_punct("(")) {
      lex_.take();
      Word w = parse_word();
      expect_punct(")");
      atom.assign(w.begin(), w.end());
    } else {
      fail("expected a generator, '[' or '('");
    }
    long exp = 1;
    if (is_punct("^")) {
      lex_.take();
      if (lex_.peek().kind != Token::Integer) fail("expected an integer exponent");
      exp = lex_.take().value;
    }
    if (exp == 0) return; // empty factor
    if (exp < 0) {
      std::reverse(atom.begin(), atom.end());
      for (auto& l : atom) l = inverse_letter(l);
      exp = -exp;
    }
    for (long i = 0; i < exp; ++i) out.insert(out.end(), atom.begin(), atom.end());
  }

  std::uint32_t resolve(const Token& id) {
    const std::vector<std::string>* names = fixed_names_ ? fixed_names_ : &own_names_;
    for (std::size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == id.text) return static_cast<std::uint32_t>(i);
    throw ParseError("unknown generator name '" + id.text + "'", id.line, id.column);
  }

  bool is_punct(std::string_view p) {
    const Token& t = lex_.peek();
    return t.kind == Token::Punct && t.text == p;
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) {
      if (lex_.peek().kind == Token::End)
        fail("unterminated presentation, expected '" + std::string(p) + "'");
      fail("expected '" + std::string(p) + "'");
    }
    lex_.take();
  }

  std::string expect_ident(std::string_view what) {
    if (lex_.peek().kind != Token::Ident) fail("expected " + std::string(what));
    return lex_.take().text;
  }

  [[noreturn]] void fail(std::string message) {
    const Token& t = lex_.peek();
    std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(std::move(message) + ", got " + got, t.line, t.column);
  }

  Lexer lex_;
  const std::vector<std::string>* fixed_names_;
  std::vector<std::string> own_names_;
};

} // namespace

Presentation parse_presentation(std::string_view text) {
  Parser p(text, nullptr);
  return p.parse_presentation();
}

Word parse_word(std::string_view text, const Presentation& pres) {
  std::vector<std::string> names;
  names.reserve(pres.generator_count());
  for (const auto& g : pres.generators()) names.push_back(g.name);
  Parser p(text, &names);
  return p.parse_single_word();
}

std::vector<Word> parse_word_list(std::string_view text, const Presentation& pres) {
  std::vector<std::string> names;
  names.reserve(pres.generator_count());
  for (const auto& g : pres.generators()) names.push_back(g.name);
  Parser p(text, &names);
  return p.parse_words();
}

std::string print_word(const Word& w, const Presentation& pres) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += pres.name(generator_of(w[i]));
    long exp = is_inverse(w[i]) ? -run : run;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string print_presentation(const Presentation& pres) {
  std::string out = "< ";
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    if (i) out += ", ";
    out += pres.name(i);
  }
  out += " | ";
  for (std::size_t i = 0; i < pres.relator_count(); ++i) {
    if (i) out += ", ";
    out += print_word(pres.relators()[i], pres);
  }
  out += " >";
  return out;
}

std::vector<Word> enumerate_words(std::size_t generator_count, std::size_t max_length) {
  std::vector<Word> out;
  out.emplace_back();
  if (max_length == 0 || generator_count == 0) return out;
  const Letter alphabet = static_cast<Letter>(2 * generator_count);
  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (Letter l = 0; l < alphabet; ++l) {
        const Word& base = out[w];
        if (!base.empty() && base[base.size() - 1] == inverse_letter(l)) continue;
        std::vector<Letter> raw(base.letters());
        raw.push_back(l);
        out.push_back(Word::reduce(raw));
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

} // namespace betti
