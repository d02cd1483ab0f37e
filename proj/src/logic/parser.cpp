#include "qw/logic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace qw {
namespace {

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_number(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexp read_all() {
    skip_space();
    if (at_end()) throw ParseError("empty input", pos_);
    Sexp e = read();
    skip_space();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_.offset >= text_.size(); }
  char peek() const { return text_[pos_.offset]; }

  void advance() {
    if (peek() == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  Sexp read() {
    Sexp e;
    e.pos = pos_;
    const char c = peek();
    if (c == '(') {
      e.is_list = true;
      advance();
      while (true) {
        skip_space();
        if (at_end()) throw ParseError("unclosed '('", e.pos);
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '=') {
      advance();
      e.atom = "=";
    } else if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && ident_char(peek())) {
        e.atom += peek();
        advance();
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' && peek() != ')') {
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    if (!is_number(e.atom) && !(e.atom == "=") && !is_identifier(e.atom)) {
      throw ParseError("malformed token '" + e.atom + "'", e.pos);
    }
    return e;
  }

  std::string_view text_;
  SourcePos pos_;
};

std::string expect_identifier(const Sexp& e, const char* what) {
  if (e.is_list || !is_identifier(e.atom)) throw ParseError(std::string("expected ") + what, e.pos);
  return e.atom;
}

Term build_term(const Sexp& e) {
  if (e.is_list) throw ParseError("expected a variable or constant", e.pos);
  if (is_number(e.atom)) {
    Element value = 0;
    auto [ptr, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), value);
    if (ec != std::errc{}) throw ParseError("constant out of range", e.pos);
    return Term::constant(value);
  }
  return Term::var(expect_identifier(e, "a variable or constant"));
}

void expect_count(const Sexp& e, std::size_t count, const char* form) {
  if (e.items.size() != count) throw ParseError(std::string("malformed ") + form, e.pos);
}

Formula build(const Sexp& e) {
  Formula f;
  if (!e.is_list) {
    if (e.atom == "true") {
      f = Formula::truth();
    } else if (e.atom == "false") {
      f = Formula::falsity();
    } else {
      throw ParseError("expected a formula, found '" + e.atom + "'", e.pos);
    }
    f.pos = e.pos;
    return f;
  }
  if (e.items.empty()) throw ParseError("empty form", e.pos);
  const Sexp& head = e.items.front();
  if (head.is_list) throw ParseError("form head must be a symbol", head.pos);
  const std::string& h = head.atom;
  auto terms_from = [&](std::size_t first) {
    std::vector<Term> terms;
    for (std::size_t i = first; i < e.items.size(); ++i) terms.push_back(build_term(e.items[i]));
    return terms;
  };
  if (h == "=") {
    expect_count(e, 3, "(= t t)");
    f = Formula::eq(build_term(e.items[1]), build_term(e.items[2]));
  } else if (h == "rel" || h == "fix") {
    if (e.items.size() < 3) throw ParseError("malformed (" + h + " NAME t+)", e.pos);
    std::string name = expect_identifier(e.items[1], "a symbol name");
    f = h == "rel" ? Formula::rel(std::move(name), terms_from(2)) : Formula::fix(std::move(name), terms_from(2));
  } else if (h == "not") {
    expect_count(e, 2, "(not f)");
    f = Formula::negate(build(e.items[1]));
  } else if (h == "and" || h == "or") {
    std::vector<Formula> parts;
    for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(build(e.items[i]));
    f = h == "and" ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
  } else if (h == "exists" || h == "forall") {
    expect_count(e, 3, "binder");
    std::string var = expect_identifier(e.items[1], "a variable");
    f = h == "exists" ? Formula::exists(std::move(var), build(e.items[2]))
                      : Formula::forall(std::move(var), build(e.items[2]));
  } else if (h == "Q") {
    expect_count(e, 4, "(Q NAME (VAR+) f)");
    std::string name = expect_identifier(e.items[1], "a quantifier name");
    const Sexp& list = e.items[2];
    if (!list.is_list || list.items.empty()) throw ParseError("expected a nonempty variable list", list.pos);
    std::vector<std::string> vars;
    for (const auto& v : list.items) vars.push_back(expect_identifier(v, "a variable"));
    f = Formula::quant(std::move(name), std::move(vars), build(e.items[3]));
  } else {
    throw ParseError("unknown head symbol '" + h + "'", head.pos);
  }
  f.pos = e.pos;
  return f;
}

}  // namespace

bool is_identifier(std::string_view s) {
  return !s.empty() && ident_start(s.front()) && std::all_of(s.begin(), s.end(), ident_char);
}

Formula parse_formula(std::string_view text) { return build(Reader(text).read_all()); }

}  // namespace qw
