#include "gkm/polyparse.hpp"

#include <cctype>
#include <numeric>

namespace gkm {

namespace {

void add_into(SparsePoly& acc, const SparsePoly& p, int sign) {
  for (const auto& [e, c] : p) {
    Int& slot = acc[e];
    slot += sign > 0 ? c : Int(-c);
    if (slot == 0) acc.erase(e);
  }
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Int& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

// Values are per-vertex polynomials; a "scalar" value broadcasts.
struct Value {
  bool scalar = true;
  SparseClass parts;
};

class Parser {
public:
  Parser(std::string_view text, std::size_t nvars, std::size_t nvertices,
         const std::map<std::string, SparseClass>* classes)
      : text_(text), nvars_(nvars), nvertices_(nvertices), classes_(classes) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError("at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value scalar(SparsePoly p) const { return Value{true, {std::move(p)}}; }

  SparsePoly at(const Value& v, std::size_t i) const { return v.scalar ? v.parts[0] : v.parts[i]; }

  Value combine(const Value& a, const Value& b, char op) const {
    Value out;
    out.scalar = a.scalar && b.scalar;
    const std::size_t n = out.scalar ? 1 : nvertices_;
    out.parts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (op == '*') {
        out.parts[i] = multiply(at(a, i), at(b, i));
      } else {
        out.parts[i] = at(a, i);
        add_into(out.parts[i], at(b, i), op == '+' ? 1 : -1);
      }
    }
    return out;
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (eat('+')) acc = combine(acc, term(), '+');
      else if (eat('-')) acc = combine(acc, term(), '-');
      else return acc;
    }
  }

  Value term() {
    Value acc = unary();
    while (eat('*')) acc = combine(acc, unary(), '*');
    return acc;
  }

  Value unary() {
    if (eat('-')) return combine(scalar({}), unary(), '-');
    if (eat('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!eat('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Value out = scalar({{Exponent(nvars_, 0), Int(1)}});
    for (int i = 0; i < n; ++i) out = combine(out, base, '*');
    return out;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Int n(std::string(text_.substr(start, pos_ - start)));
      if (n == 0) return scalar({});
      return scalar({{Exponent(nvars_, 0), n}});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (name == variable_name(nvars_, v)) {
          Exponent e(nvars_, 0);
          e[v] = 1;
          return scalar({{e, Int(1)}});
        }
      }
      if (classes_) {
        auto it = classes_->find(name);
        if (it != classes_->end()) {
          if (it->second.size() != nvertices_) fail("class '" + name + "' has wrong vertex count");
          return Value{false, it->second};
        }
      }
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  std::size_t nvertices_;
  const std::map<std::string, SparseClass>* classes_;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, std::size_t nvars) {
  Value v = Parser(text, nvars, 1, nullptr).parse();
  return v.parts[0];
}

GradedPoly to_graded(const SparsePoly& p, std::size_t nvars, Ring ring, int zero_degree) {
  int degree = -2;
  for (const auto& [e, c] : p) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree != -2 && d != degree) throw ExpressionError("polynomial is not homogeneous");
    degree = d;
  }
  if (degree == -2) return GradedPoly(ring, nvars, zero_degree);
  IntVector coeffs(monomial_count(nvars, degree));
  for (const auto& [e, c] : p) coeffs[monomial_index(nvars, e)] = c;
  return GradedPoly::from_coeffs(ring, nvars, degree, std::move(coeffs));
}

GradedPoly parse_graded(std::string_view text, std::size_t nvars, Ring ring, int zero_degree) {
  return to_graded(parse_polynomial(text, nvars), nvars, ring, zero_degree);
}

SparsePoly to_sparse(const GradedPoly& p) {
  SparsePoly out;
  const auto& mons = monomials(p.nvars(), p.degree());
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (p.coeff(i) != 0) out.emplace(mons[i], p.coeff(i));
  return out;
}

SparseClass evaluate_class_expression(std::string_view text, std::size_t nvars, std::size_t nvertices,
                                      const std::map<std::string, SparseClass>& classes) {
  Value v = Parser(text, nvars, nvertices, &classes).parse();
  if (v.scalar) return SparseClass(nvertices, v.parts[0]);
  return v.parts;
}

}  // namespace gkm
