#include "bmw/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>
#include <vector>

#include "bmw/error.hpp"

namespace bmw {

namespace detail {

std::string format_exponent(int e, std::string_view symbol) {
  if (e == 0) return {};
  std::string s(symbol);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string format_exponent(LZExponent e, std::string_view) {
  std::string s = format_exponent(e.lambda, "l");
  std::string zs = format_exponent(e.z, "z");
  if (!s.empty() && !zs.empty()) s += "*";
  return s + zs;
}

std::string_view symbol_of(DeltaVar) { return "d"; }
std::string_view symbol_of(SVar) { return "s"; }
std::string_view symbol_of(LZVar) { return ""; }

namespace {

// Shared term-list renderer: "c*m + c*m - ...".
std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coef, mono] : terms) {
    Integer mag = abs(coef);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = (coef < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (coef < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace
}  // namespace detail

template <class Key, class Var>
std::string SparsePoly<Key, Var>::to_string() const {
  std::vector<std::pair<Integer, std::string>> parts;
  for (const auto& [k, c] : terms_) parts.emplace_back(c, detail::format_exponent(k, detail::symbol_of(Var{})));
  return detail::join_terms(parts);
}

template std::string DeltaPoly::to_string() const;
template std::string SPoly::to_string() const;
template std::string LaurentLZ::to_string() const;

template <class Key, class Var>
SparsePoly<Key, Var> exact_divide(const SparsePoly<Key, Var>& num, const SparsePoly<Key, Var>& den) {
  using Poly = SparsePoly<Key, Var>;
  if (den.is_zero()) throw InexactDivision("division by zero polynomial");
  if (num.is_zero()) return {};

  // Per-coordinate box that any exact quotient's exponents must lie in.
  constexpr std::size_t dims = std::tuple_size_v<decltype(detail::coords(Key{}))>;
  std::array<int, dims> lo, hi;
  lo.fill(std::numeric_limits<int>::max());
  hi.fill(std::numeric_limits<int>::min());
  std::array<int, dims> dlo = lo, dhi = hi;
  for (const auto& [k, c] : num.terms()) {
    auto v = detail::coords(k);
    for (std::size_t i = 0; i < dims; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  for (const auto& [k, c] : den.terms()) {
    auto v = detail::coords(k);
    for (std::size_t i = 0; i < dims; ++i) {
      dlo[i] = std::min(dlo[i], v[i]);
      dhi[i] = std::max(dhi[i], v[i]);
    }
  }

  Poly quotient, rest = num;
  const auto& [dkey, dcoef] = *den.terms().rbegin();
  while (!rest.is_zero()) {
    const auto& [rkey, rcoef] = *rest.terms().rbegin();
    Key qkey = rkey - dkey;
    auto q = detail::coords(qkey);
    for (std::size_t i = 0; i < dims; ++i) {
      if (q[i] < lo[i] - dlo[i] || q[i] > hi[i] - dhi[i] || (!Var::laurent && q[i] < 0))
        throw InexactDivision("polynomial division leaves a remainder");
    }
    if (!mpz_divisible_p(rcoef.get_mpz_t(), dcoef.get_mpz_t()))
      throw InexactDivision("coefficient division leaves a remainder");
    Poly step = Poly::monomial(qkey, Integer(rcoef / dcoef));
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

template DeltaPoly exact_divide(const DeltaPoly&, const DeltaPoly&);
template SPoly exact_divide(const SPoly&, const SPoly&);
template LaurentLZ exact_divide(const LaurentLZ&, const LaurentLZ&);

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(long constant) {
  if (constant != 0) terms_.emplace(RingMonomial{}, Integer(constant));
}

RingElem::RingElem(const Integer& constant) {
  if (constant != 0) terms_.emplace(RingMonomial{}, constant);
}

RingElem RingElem::monomial(const Integer& coefficient, RingMonomial m) {
  if (m.z < 0 || m.delta < 0) throw std::invalid_argument("z and d exponents must be non-negative");
  RingElem r;
  r.add_normalized(m, coefficient);
  return r;
}

RingElem RingElem::lambda(int power) { return monomial(1, {power, 0, 0}); }
RingElem RingElem::z(int power) { return monomial(1, {0, power, 0}); }
RingElem RingElem::delta(int power) { return monomial(1, {0, 0, power}); }

int RingElem::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::abs(m.lambda) + m.z + m.delta);
  return d;
}

void RingElem::add_normalized(RingMonomial m, const Integer& c) {
  if (c == 0) return;
  // Each rewrite lowers the d-exponent by one, so the worklist drains.
  std::vector<std::pair<RingMonomial, Integer>> work{{m, c}};
  while (!work.empty()) {
    auto [mono, coef] = work.back();
    work.pop_back();
    if (mono.z > 0 && mono.delta > 0) {
      RingMonomial base{mono.lambda, mono.z - 1, mono.delta - 1};
      work.push_back({{base.lambda - 1, base.z, base.delta}, coef});
      work.push_back({{base.lambda + 1, base.z, base.delta}, -coef});
      work.push_back({{base.lambda, base.z + 1, base.delta}, coef});
      continue;
    }
    auto [it, inserted] = terms_.try_emplace(mono, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) add_normalized(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) add_normalized(m, -c);
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  RingElem r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_normalized({ma.lambda + mb.lambda, ma.z + mb.z, ma.delta + mb.delta}, ca * cb);
  return r;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem RingElem::pow(unsigned e) const {
  RingElem result(1), base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string RingElem::to_string() const {
  std::vector<std::pair<Integer, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::string piece : {detail::format_exponent(m.lambda, "l"), detail::format_exponent(m.z, "z"),
                              detail::format_exponent(m.delta, "d")}) {
      if (piece.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += piece;
    }
    parts.emplace_back(c, mono);
  }
  return detail::join_terms(parts);
}

// ---------------------------------------------------------------------------
// Parser:  expr := term (('+'|'-') term)* ; term := unary ('*' unary)* ;
//          unary := '-' unary | power ; power := atom ('^' int)?

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view text) : text_(text) {}

  RingElem parse_all() {
    RingElem r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElem expr() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty ring expression");
    RingElem acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  RingElem unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RingElem power() {
    skip_ws();
    char kind = pos_ < text_.size() ? text_[pos_] : '\0';
    RingElem base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t exp_pos = pos_;
    bool negative = accept('-');
    skip_ws();
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError(pos_, "expected exponent");
    long e = std::stol(std::string(text_.substr(digits, pos_ - digits)));
    if (e > 10000) throw ParseError(exp_pos, "exponent too large");
    if (negative) {
      if (kind != 'l') throw ParseError(exp_pos, "negative exponents are only allowed on l");
      return RingElem::lambda(-static_cast<int>(e));
    }
    if (kind == 'l') return RingElem::lambda(static_cast<int>(e));
    return base.pow(static_cast<unsigned>(e));
  }

  RingElem atom() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RingElem(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    ++pos_;
    switch (ch) {
      case 'l': return RingElem::lambda();
      case 'z': return RingElem::z();
      case 'd': return RingElem::delta();
      case '(': {
        RingElem inner = expr();
        if (!accept(')')) throw ParseError(pos_, "expected ')'");
        return inner;
      }
      default:
        throw ParseError(pos_ - 1, std::string("unexpected character '") + ch + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem RingElem::parse(std::string_view text) { return RingParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Ring maps

DeltaPoly spec_brauer(const RingElem& a) {
  DeltaPoly r;
  for (const auto& [m, c] : a.terms())
    if (m.z == 0) r.add_term(m.delta, c);
  return r;
}

SPoly spec_s_delta(int n) {
  if (n < 1) throw std::invalid_argument("spec_s needs n >= 1");
  SPoly num = SPoly::monomial(1 - 2 * n) - SPoly::monomial(2 * n - 1);
  SPoly den = SPoly::monomial(1) - SPoly::monomial(-1);
  return SPoly(1) + exact_divide(num, den);
}

SPoly spec_s(const RingElem& a, int n) {
  const SPoly z_image = SPoly::monomial(1) - SPoly::monomial(-1);
  const SPoly d_image = spec_s_delta(n);
  std::map<int, SPoly> z_pow, d_pow;
  auto cached = [](std::map<int, SPoly>& cache, const SPoly& base, int e) -> const SPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  SPoly r;
  for (const auto& [m, c] : a.terms()) {
    SPoly term = SPoly::monomial((2 * n - 1) * m.lambda, c);
    if (m.z != 0) term *= cached(z_pow, z_image, m.z);
    if (m.delta != 0) term *= cached(d_pow, d_image, m.delta);
    r += term;
  }
  return r;
}

LaurentLZ embed_laurent(const RingElem& a) {
  const LaurentLZ d_image = LaurentLZ(1) + LaurentLZ::monomial({-1, -1}) - LaurentLZ::monomial({1, -1});
  std::map<int, LaurentLZ> d_pow;
  LaurentLZ r;
  for (const auto& [m, c] : a.terms()) {
    LaurentLZ term = LaurentLZ::monomial({m.lambda, m.z}, c);
    if (m.delta != 0) {
      auto it = d_pow.find(m.delta);
      if (it == d_pow.end()) it = d_pow.emplace(m.delta, d_image.pow(static_cast<unsigned>(m.delta))).first;
      term *= it->second;
    }
    r += term;
  }
  return r;
}

}  // namespace bmw
