#include <cubicmw/parse.hpp>

#include <cctype>

namespace cubicmw {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    if (vars_.size() > 3) throw domain_error("at most three variables are supported");
  }

  Poly3 parse() {
    Poly3 p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Error::Kind::Parse,
                "parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Poly3 expr() {
    Poly3 acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly3 term() {
    Poly3 acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const Int d = integer();
        if (d == 0) fail("division by zero");
        acc *= Rat(Int(1), d);
      } else {
        return acc;
      }
    }
  }

  Poly3 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly3 power() {
    Poly3 base = atom();
    if (accept('^')) {
      const Int e = integer();
      if (e > 64) fail("exponent too large");
      Poly3 r = Poly3::constant(Rat(1));
      for (long i = 0; i < e.get_si(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly3 atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly3 inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly3::constant(Rat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly3::variable(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly3 parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

UniPoly parse_unipoly(std::string_view text, std::string_view variable) {
  const Poly3 p = parse_polynomial(text, {std::string(variable)});
  std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(p.degree_in(0), 0)) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
  return UniPoly(std::move(coeffs));
}

HomogeneousPoly3 parse_form(std::string_view text) {
  Poly3 p = parse_polynomial(text, {"X", "Y", "Z"});
  if (p.is_zero()) throw Error(Error::Kind::Parse, "form is identically zero: \"" + std::string(text) + "\"");
  if (!p.is_homogeneous()) throw Error(Error::Kind::Parse, "form is not homogeneous: \"" + std::string(text) + "\"");
  return HomogeneousPoly3(std::move(p));
}

}  // namespace cubicmw
