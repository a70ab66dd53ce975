#include "zariski/poly_parser.hpp"

#include <cctype>
#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

using Sparse = std::map<Exponent, AlgNum>;

void add_into(Sparse& acc, const Exponent& e, const AlgNum& c) {
  auto it = acc.find(e);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Sparse add(Sparse a, const Sparse& b, bool negate) {
  for (auto& [e, c] : b) add_into(a, e, negate ? -c : c);
  return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) add_into(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Sparse constant(const AlgNum& c) {
  Sparse r;
  if (!c.is_zero()) r.emplace(Exponent{0, 0, 0}, c);
  return r;
}

std::string term_text(const Exponent& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, FieldPtr field)
      : text_(text), vars_(std::move(vars)), field_(std::move(field)) {}

  Sparse parse() {
    Sparse r = expr();
    skip_space();
    if (pos_ < text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

  [[noreturn]] void error(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << msg;
    fail(ErrorCode::Syntax, os.str());
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse expr() {
    Sparse r = term();
    while (true) {
      if (accept('+'))
        r = add(std::move(r), term(), false);
      else if (accept('-'))
        r = add(std::move(r), term(), true);
      else
        return r;
    }
  }

  Sparse term() {
    Sparse r = unary();
    while (true) {
      if (accept('*')) {
        r = mul(r, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Sparse d = unary();
        if (d.empty()) {
          pos_ = at;
          error("division by zero");
        }
        if (d.size() != 1 || d.begin()->first != Exponent{0, 0, 0}) {
          pos_ = at;
          error("division by a non-constant");
        }
        r = mul(r, constant(d.begin()->second.inverse()));
      } else {
        return r;
      }
    }
  }

  Sparse unary() {
    if (accept('-')) {
      Sparse r = unary();
      for (auto& [e, c] : r) c = -c;
      return r;
    }
    if (accept('+')) return unary();
    return power();
  }

  Sparse power() {
    Sparse base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a non-negative integer exponent");
    if (pos_ - start > 4) error("exponent too large");
    const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Sparse r = constant(AlgNum(1));
    for (int i = 0; i < k; ++i) r = mul(r, base);
    return r;
  }

  Sparse atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(AlgNum(Rat(Int(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) {
          Exponent e{0, 0, 0};
          e[i] = 1;
          return Sparse{{e, field_ ? AlgNum(1).in_field(field_) : AlgNum(1)}};
        }
      if (field_ && name == field_->symbol()) return constant(AlgNum::generator(field_));
      pos_ = start;
      std::string known;
      for (auto& v : vars_) known += (known.empty() ? "" : ", ") + v;
      if (field_) known += ", " + field_->symbol();
      fail(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "' (known: " + known + ")");
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  FieldPtr field_;
};

}  // namespace

HomogeneousPoly parse_poly(std::string_view text, const FieldPtr& field) {
  const std::vector<std::string> vars{"x", "y", "z"};
  if (field && (field->symbol() == "x" || field->symbol() == "y" || field->symbol() == "z"))
    fail(ErrorCode::InvalidInput, "field generator may not be named x, y or z");
  Sparse s = Parser(text, vars, field).parse();
  if (s.empty()) return HomogeneousPoly(field);
  int top = -1;
  for (auto& [e, c] : s) top = std::max(top, e[0] + e[1] + e[2]);
  for (auto& [e, c] : s) {
    const int d = e[0] + e[1] + e[2];
    if (d != top)
      fail(ErrorCode::Inhomogeneous, "term " + term_text(e, vars) + " has degree " + std::to_string(d) +
                                         " but the polynomial has degree " + std::to_string(top));
  }
  HomogeneousPoly::Terms t(s.begin(), s.end());
  return HomogeneousPoly(std::move(t), field);
}

HomogeneousPoly parse_curve_equation(std::string_view text, const FieldPtr& field) {
  HomogeneousPoly p = parse_poly(text, field);
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "curve equation simplifies to the zero polynomial");
  if (p.degree() == 0) fail(ErrorCode::InvalidInput, "curve equation is a nonzero constant");
  return p;
}

QPoly parse_univariate(std::string_view text, const std::string& symbol) {
  Sparse s = Parser(text, {symbol}, nullptr).parse();
  int top = 0;
  for (auto& [e, c] : s) top = std::max(top, e[0]);
  std::vector<Rat> coeffs(top + 1, Rat(0));
  for (auto& [e, c] : s) coeffs[e[0]] = c.rational_value();
  return QPoly(coeffs);
}

}  // namespace zariski
