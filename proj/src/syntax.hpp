#pragma once

// Shared tokenizer, structural parser and renderer for the word and generalised-word grammars.

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "gentle/error.hpp"
#include "gentle/seq.hpp"

namespace gentle::syntax {

struct Token {
  enum class Kind { Ident, Number, Sym, Trivial, Angle, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t at = 0;
  while ((at = s.find(from, at)) != std::string::npos) {
    s.replace(at, from.size(), to);
    at += to.size();
  }
  return s;
}

inline std::string ascii_form(std::string s) {
  s = replace_all(s, "⁻¹", "^-1");
  s = replace_all(s, "⟨", "<");
  s = replace_all(s, "⟩", ">");
  s = replace_all(s, "∞", "inf");
  return s;
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> lex(const std::string& raw) {
  const std::string s = ascii_form(raw);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (c == '1' && i + 1 < s.size() && s[i + 1] == '_') {
      std::size_t j = i + 2;
      while (j < s.size() && ident_char(s[j])) ++j;
      t.kind = Token::Kind::Trivial;
      t.text = s.substr(i + 2, j - i - 2);
      if (t.text.empty()) fail(ErrorKind::Parse, "missing vertex after 1_ at column " + std::to_string(i + 1));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::Kind::Number;
      t.text = s.substr(i, j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      t.kind = Token::Kind::Ident;
      t.text = s.substr(i, j - i);
      i = j;
    } else if (c == '<') {
      std::size_t j = s.find('>', i);
      if (j == std::string::npos) fail(ErrorKind::Parse, "unterminated < at column " + std::to_string(i + 1));
      t.kind = Token::Kind::Angle;
      t.text = s.substr(i + 1, j - i - 1);
      i = j + 1;
    } else if (c == '^' || c == '-' || c == '(' || c == ')' || c == '|' || c == '@') {
      t.kind = Token::Kind::Sym;
      t.text = std::string(1, c);
      ++i;
    } else {
      fail(ErrorKind::Parse, std::string("unexpected character '") + c + "' at column " + std::to_string(i + 1));
    }
    out.push_back(t);
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

template <class L>
struct RawSeq {
  Shape shape = Shape::Finite;
  std::vector<L> left, core, right;
  long bar = -1;  // number of core letters before an origin marker `|`
  long offset = 0;
  bool trivial = false;
  std::string trivial_vertex;
  int trivial_delta = 1;
};

template <class L>
class Parser {
 public:
  using AtomFn = std::function<L(const Token&)>;

  Parser(std::vector<Token> tokens, AtomFn atom) : toks_(std::move(tokens)), atom_(std::move(atom)) {}

  RawSeq<L> parse() {
    RawSeq<L> r;
    if (peek().kind == Token::Kind::Trivial) {
      r.trivial = true;
      r.trivial_vertex = next().text;
      if (is_sym("^")) {
        next();
        expect_sym("-");
        Token n = next();
        if (n.kind != Token::Kind::Number || n.text != "1") bad(n, "trivial words take only the exponent -1");
        r.trivial_delta = -1;
      }
      expect_end();
      return r;
    }
    bool left_tail = false;
    if (is_ident("inf") && toks_[at_ + 1].kind == Token::Kind::Sym && toks_[at_ + 1].text == "(") {
      next();
      next();
      r.left = items(false, nullptr);
      expect_sym(")");
      left_tail = true;
      if (is_ident("inf")) {
        next();
        r.shape = Shape::Periodic;
        r.core = r.left;
        r.left.clear();
        if (is_sym("@")) {
          next();
          int sign = 1;
          if (is_sym("-")) {
            next();
            sign = -1;
          }
          Token n = next();
          if (n.kind != Token::Kind::Number) bad(n, "expected an offset after @");
          r.offset = sign * std::stol(n.text);
        }
        expect_end();
        if (r.core.empty()) bad(peek(), "empty periodic cycle");
        return r;
      }
      if (r.left.empty()) bad(peek(), "empty left tail");
    }
    long bar = -1;
    r.core = items(true, &bar);
    r.bar = bar;
    bool right_tail = false;
    if (is_sym("(")) {
      // only a trailing `(...)^inf` can remain here
      next();
      r.right = items(false, nullptr);
      expect_sym(")");
      expect_sym("^");
      Token t = next();
      if (!(t.kind == Token::Kind::Ident && t.text == "inf")) bad(t, "expected ^inf after the right tail");
      right_tail = true;
      if (r.right.empty()) bad(t, "empty right tail");
    }
    expect_end();
    if (left_tail && right_tail) r.shape = Shape::Bi;
    else if (left_tail) r.shape = Shape::Left;
    else if (right_tail) r.shape = Shape::Right;
    else r.shape = Shape::Finite;
    if (r.shape == Shape::Finite && r.core.empty()) bad(peek(), "empty word (use 1_<vertex> for a trivial word)");
    if (r.bar >= 0 && r.shape != Shape::Bi) bad(peek(), "the origin marker | is only meaningful for Z-words");
    return r;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  bool is_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool is_ident(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }
  [[noreturn]] void bad(const Token& t, const std::string& why) const {
    fail(ErrorKind::Parse, why + " at column " + std::to_string(t.pos + 1));
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) bad(peek(), std::string("expected '") + s + "'");
    next();
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) bad(peek(), "unexpected trailing input '" + peek().text + "'");
  }

  // Items up to a closing parenthesis, the end, or (at top level) a trailing `( ... )^inf`.
  std::vector<L> items(bool top, long* bar) {
    std::vector<L> out;
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::Kind::End) break;
      if (t.kind == Token::Kind::Sym && t.text == ")") break;
      if (t.kind == Token::Kind::Sym && t.text == "|") {
        if (!bar) bad(t, "origin marker | not allowed here");
        if (*bar >= 0) bad(t, "more than one origin marker");
        *bar = static_cast<long>(out.size());
        next();
        continue;
      }
      if (top && t.kind == Token::Kind::Sym && t.text == "(" && closes_right_tail()) break;
      std::vector<L> unit;
      if (t.kind == Token::Kind::Sym && t.text == "(") {
        next();
        unit = items(false, nullptr);
        expect_sym(")");
        if (unit.empty()) bad(t, "empty group");
      } else if (t.kind == Token::Kind::Ident || t.kind == Token::Kind::Angle) {
        unit.push_back(atom_(next()));
      } else if (t.kind == Token::Kind::Trivial) {
        bad(t, "trivial word 1_v cannot be combined with other letters");
      } else {
        bad(t, "unexpected '" + t.text + "'");
      }
      long power = 1;
      if (is_sym("^")) {
        if (toks_[at_ + 1].kind == Token::Kind::Ident && toks_[at_ + 1].text == "inf") bad(peek(), "^inf is only allowed on the final group");
        next();
        int sign = 1;
        if (is_sym("-")) {
          next();
          sign = -1;
        }
        Token n = next();
        if (n.kind != Token::Kind::Number) bad(n, "expected an integer exponent");
        power = sign * std::stol(n.text);
        if (power == 0) bad(n, "exponent 0 is not allowed");
      }
      std::vector<L> base = power > 0 ? unit : inverse_letters(unit);
      for (long k = 0; k < (power > 0 ? power : -power); ++k) out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  // True when the parenthesis at the cursor opens the final `( ... )^inf` group.
  bool closes_right_tail() const {
    int depth = 0;
    for (std::size_t k = at_; k < toks_.size(); ++k) {
      const Token& t = toks_[k];
      if (t.kind == Token::Kind::Sym && t.text == "(") ++depth;
      if (t.kind == Token::Kind::Sym && t.text == ")") {
        if (--depth == 0) {
          return k + 2 < toks_.size() && toks_[k + 1].kind == Token::Kind::Sym && toks_[k + 1].text == "^" &&
                 toks_[k + 2].kind == Token::Kind::Ident && toks_[k + 2].text == "inf";
        }
      }
    }
    return false;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  AtomFn atom_;
};

// Converts a raw parse into a sequence with the origin placed as described by the markers.
template <class L>
Seq<L> to_seq(const RawSeq<L>& r) {
  Seq<L> w;
  w.shape = r.shape;
  w.left = r.left;
  w.core = r.core;
  w.right = r.right;
  if (r.shape == Shape::Bi) w.start = r.bar >= 0 ? -r.bar : 0;
  if (r.shape == Shape::Periodic) w.core = rotate_left(r.core, r.offset);
  return w;
}

// Renders letters with run-length compression; `base` gives the atom text for a letter, with
// `inverse` telling whether the letter carries the exponent -1.
template <class L>
std::string render_run(const std::vector<L>& letters, const std::function<std::string(const L&)>& base,
                       const std::function<bool(const L&)>& inverse, const std::string& sep) {
  std::string out;
  std::size_t k = 0;
  while (k < letters.size()) {
    std::size_t j = k;
    while (j < letters.size() && letters[j] == letters[k]) ++j;
    long n = static_cast<long>(j - k);
    if (!out.empty()) out += sep;
    out += base(letters[k]);
    bool inv = inverse(letters[k]);
    if (inv) out += "^-" + std::to_string(n);
    else if (n > 1) out += "^" + std::to_string(n);
    k = j;
  }
  return out;
}

template <class L>
std::string render_seq(const Seq<L>& w, const std::function<std::string(const L&)>& base,
                       const std::function<bool(const L&)>& inverse, const std::string& sep) {
  auto run = [&](const std::vector<L>& v) { return render_run<L>(v, base, inverse, sep); };
  auto join = [&](std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
      if (p.empty()) continue;
      if (!out.empty()) out += sep.empty() ? "" : " ";
      out += p;
    }
    return out;
  };
  switch (w.shape) {
    case Shape::Finite: return run(w.core);
    case Shape::Right: return join({run(w.core), "(" + run(w.right) + ")^inf"});
    case Shape::Left: return join({"inf(" + run(w.left) + ")", run(w.core)});
    case Shape::Periodic: return "inf(" + run(w.core) + ")inf@0";
    case Shape::Bi: {
      const long c = w.length();
      const long a = std::min(w.start, 0L) + 1;
      const long b = std::max(w.start + c, 0L);
      std::vector<L> before, after, lt, rt;
      for (long i = a; i <= 0; ++i) before.push_back(w.letter(i));
      for (long i = 1; i <= b; ++i) after.push_back(w.letter(i));
      for (long i = a - static_cast<long>(w.left.size()); i < a; ++i) lt.push_back(w.letter(i));
      for (long i = b + 1; i <= b + static_cast<long>(w.right.size()); ++i) rt.push_back(w.letter(i));
      return join({"inf(" + run(lt) + ")", run(before), "|", run(after), "(" + run(rt) + ")^inf"});
    }
  }
  return "";
}

}  // namespace gentle::syntax
