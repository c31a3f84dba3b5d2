#include "dirosc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace dirosc {

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PolyExpr::PolyExpr(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw Error("polynomial without universe");
}

PolyExpr PolyExpr::constant(UniversePtr universe, GaussianRational c) {
  PolyExpr p(std::move(universe));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.universe_->size(), 0), std::move(c));
  return p;
}

PolyExpr PolyExpr::symbol(UniversePtr universe, const std::string& name, std::uint32_t power) {
  PolyExpr p(std::move(universe));
  if (power == 0) return constant(p.universe_, 1);
  Monomial m(p.universe_->size(), 0);
  m[p.universe_->index_of(name)] = power;
  p.terms_.emplace(std::move(m), GaussianRational(1));
  return p;
}

bool PolyExpr::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

GaussianRational PolyExpr::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  if (terms_.empty()) return GaussianRational(0);
  return terms_.begin()->second;
}

void PolyExpr::check_same_universe(const PolyExpr& o) const {
  if (universe_ == o.universe_) return;
  if (!universe_->same_as(*o.universe_))
    throw UniverseMismatchError("operands declared over different universes");
}

void PolyExpr::reduce_inverses(Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    int j = universe_->inverse_partner(i);
    if (j < 0 || static_cast<std::size_t>(j) <= i) continue;
    std::uint32_t k = std::min(m[i], m[static_cast<std::size_t>(j)]);
    if (k) {
      m[i] -= k;
      m[static_cast<std::size_t>(j)] -= k;
    }
  }
}

void PolyExpr::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr r(universe_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& o) {
  check_same_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& o) {
  check_same_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  a.check_same_universe(b);
  PolyExpr r(a.universe_);
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ma;
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += mb[k];
      r.reduce_inverses(prod);
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

PolyExpr PolyExpr::scale(const GaussianRational& c) const {
  PolyExpr r(universe_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

PolyExpr PolyExpr::pow(std::uint32_t k) const {
  PolyExpr r = constant(universe_, 1);
  for (std::uint32_t n = 0; n < k; ++n) r = r * (*this);
  return r;
}

PolyExpr PolyExpr::conj() const {
  PolyExpr r(universe_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

PolyExpr PolyExpr::partial(std::size_t coord_index) const {
  if (coord_index >= universe_->size() || !universe_->is_coordinate(coord_index))
    throw InvalidVariableError("partial derivative requires a coordinate");
  PolyExpr r(universe_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m[coord_index];
    if (e == 0) continue;
    Monomial d = m;
    d[coord_index] = e - 1;
    r.add_term(d, c * GaussianRational(Rational(static_cast<long long>(e))));
  }
  return r;
}

PolyExpr PolyExpr::partial(const std::string& coord_name) const {
  return partial(universe_->index_of(coord_name));
}

PolyExpr PolyExpr::substitute(const std::map<std::string, PolyExpr>& bindings) const {
  if (bindings.empty()) return *this;

  std::map<std::size_t, const PolyExpr*> raw;
  for (const auto& [name, value] : bindings) {
    std::size_t idx = universe_->index_of(name);
    if (universe_->is_coordinate(idx))
      throw InvalidVariableError("substitution target must be a constant: " + name);
    check_same_universe(value);
    raw.emplace(idx, &value);
  }

  // Cycle detection over the binding keys, then resolve each binding to a
  // form free of bound symbols (DFS post-order).
  std::map<std::size_t, PolyExpr> resolved;
  std::map<std::size_t, int> state;  // 0 unseen, 1 on stack, 2 done
  std::function<void(std::size_t)> resolve = [&](std::size_t idx) {
    if (state[idx] == 2) return;
    if (state[idx] == 1) throw CyclicBindingError("cyclic constant bindings");
    state[idx] = 1;
    const PolyExpr& value = *raw.at(idx);
    for (const auto& [m, c] : value.terms_) {
      (void)c;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && raw.count(k) && k != idx) resolve(k);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && k == idx) throw CyclicBindingError("self-referential binding");
    }
    PolyExpr out(universe_);
    for (const auto& [m, c] : value.terms_) {
      PolyExpr term = constant(universe_, c);
      Monomial rest(m.size(), 0);
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (auto it = resolved.find(k); it != resolved.end())
          term = term * it->second.pow(m[k]);
        else
          rest[k] = m[k];
      }
      PolyExpr mono(universe_);
      mono.add_term(rest, GaussianRational(1));
      out += term * mono;
    }
    resolved.emplace(idx, std::move(out));
    state[idx] = 2;
  };
  for (const auto& [idx, value] : raw) {
    (void)value;
    resolve(idx);
  }

  PolyExpr result(universe_);
  for (const auto& [m, c] : terms_) {
    PolyExpr term = constant(universe_, c);
    Monomial rest(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (auto it = resolved.find(k); it != resolved.end())
        term = term * it->second.pow(m[k]);
      else
        rest[k] = m[k];
    }
    PolyExpr mono(universe_);
    mono.add_term(rest, GaussianRational(1));
    result += term * mono;
  }
  return result;
}

std::complex<double> PolyExpr::eval(
    const std::map<std::string, std::complex<double>>& bindings) const {
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v(c.re().to_double(), c.im().to_double());
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      auto it = bindings.find(universe_->name(k));
      if (it == bindings.end())
        throw Error("unbound symbol in numeric evaluation: " + universe_->name(k));
      for (std::uint32_t e = 0; e < m[k]; ++e) v *= it->second;
    }
    total += v;
  }
  return total;
}

bool operator==(const PolyExpr& a, const PolyExpr& b) {
  a.check_same_universe(b);
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Canonical text

namespace {

// Renders the coefficient split into (negative?, magnitude-text, needs_star).
// Mixed complex coefficients are parenthesized and never sign-extracted.
struct CoeffText {
  bool negative = false;
  std::string text;
};

CoeffText coeff_text(const GaussianRational& c, bool has_monomial) {
  CoeffText out;
  if (c.is_real()) {
    Rational r = c.re();
    out.negative = r.sign() < 0;
    Rational mag = out.negative ? -r : r;
    if (mag.is_one() && has_monomial)
      out.text.clear();
    else
      out.text = mag.str();
    return out;
  }
  if (c.re().is_zero()) {
    Rational im = c.im();
    out.negative = im.sign() < 0;
    Rational mag = out.negative ? -im : im;
    out.text = mag.is_one() ? "i" : mag.str() + "*i";
    return out;
  }
  out.text = c.str();  // "(re ± im*i)"
  return out;
}

}  // namespace

std::string PolyExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += universe_->name(k);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    CoeffText ct = coeff_text(c, !mono.empty());
    if (first) {
      if (ct.negative) out += "-";
      first = false;
    } else {
      out += ct.negative ? " - " : " + ";
    }
    if (!ct.text.empty()) {
      out += ct.text;
      if (!mono.empty()) out += "*";
    }
    out += mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser for the canonical text form (plus harmless generalizations:
// arbitrary parentheses, division by a nonzero rational constant).

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind = End;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {Token::End, ""};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Token::Number, s_.substr(start, pos_ - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Token::Ident, s_.substr(start, pos_ - start)};
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++pos_;
      return {Token::Op, std::string(1, c)};
    }
    throw ParseError("unexpected character in polynomial: " + std::string(1, c));
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(UniversePtr universe, const std::string& text)
      : universe_(std::move(universe)), lexer_(text) {
    advance();
  }

  PolyExpr parse() {
    PolyExpr p = expr();
    if (tok_.kind != Token::End) throw ParseError("trailing input after polynomial");
    return p;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  bool accept_op(const char* op) {
    if (tok_.kind == Token::Op && tok_.text == op) {
      advance();
      return true;
    }
    return false;
  }

  void expect_op(const char* op) {
    if (!accept_op(op)) throw ParseError(std::string("expected '") + op + "'");
  }

  PolyExpr expr() {
    bool neg = false;
    if (accept_op("-"))
      neg = true;
    else
      accept_op("+");
    PolyExpr p = term();
    if (neg) p = -p;
    for (;;) {
      if (accept_op("+"))
        p += term();
      else if (accept_op("-"))
        p -= term();
      else
        break;
    }
    return p;
  }

  PolyExpr term() {
    PolyExpr p = factor();
    for (;;) {
      if (accept_op("*")) {
        p = p * factor();
      } else if (accept_op("/")) {
        PolyExpr d = factor();
        if (!d.is_constant() || d.constant_value().is_zero())
          throw ParseError("division only by nonzero rational constants");
        p = p.scale(GaussianRational(1) / d.constant_value());
      } else {
        break;
      }
    }
    return p;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (accept_op("^")) {
      if (tok_.kind != Token::Number) throw ParseError("exponent must be a nonnegative integer");
      std::uint32_t e = static_cast<std::uint32_t>(std::stoul(tok_.text));
      advance();
      return b.pow(e);
    }
    return b;
  }

  PolyExpr base() {
    if (accept_op("(")) {
      PolyExpr p = expr();
      expect_op(")");
      return p;
    }
    if (accept_op("-")) return -factor();
    if (tok_.kind == Token::Number) {
      BigInt n(tok_.text);
      advance();
      return PolyExpr::constant(universe_, GaussianRational(Rational(n)));
    }
    if (tok_.kind == Token::Ident) {
      std::string name = tok_.text;
      advance();
      if (name == "i") return PolyExpr::imaginary_unit(universe_);
      return PolyExpr::symbol(universe_, name);
    }
    throw ParseError("expected number, symbol, or parenthesized expression");
  }

  UniversePtr universe_;
  Lexer lexer_;
  Token tok_;
};

}  // namespace

PolyExpr PolyExpr::parse(UniversePtr universe, const std::string& text) {
  return Parser(std::move(universe), text).parse();
}

}  // namespace dirosc
