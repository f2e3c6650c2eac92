#pragma once

// Exact coefficient arithmetic.
//
// RingElem lives in  Z[l^{+-1}, z, d] / < l^{-1} - l = z (d - 1) >  and is kept
// in the normal form where no monomial carries both z and d: every mixed
// product is rewritten with  z*d -> l^{-1} - l + z.  The three auxiliary
// polynomial types are the targets of the ring maps out of it.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmw {

using Integer = mpz_class;

/// Exponent vector of a monomial l^a z^b in the Laurent embedding.
struct LZExponent {
  int lambda = 0;
  int z = 0;

  friend auto operator<=>(const LZExponent&, const LZExponent&) = default;
  friend LZExponent operator+(LZExponent a, LZExponent b) {
    return {a.lambda + b.lambda, a.z + b.z};
  }
  friend LZExponent operator-(LZExponent a, LZExponent b) {
    return {a.lambda - b.lambda, a.z - b.z};
  }
};

namespace detail {

// Variable metadata for the sparse polynomial template.
struct DeltaVar {
  static constexpr bool laurent = false;
};
struct SVar {
  static constexpr bool laurent = true;
};
struct LZVar {
  static constexpr bool laurent = true;
};

inline std::array<int, 1> coords(int e) { return {e}; }
inline std::array<int, 2> coords(LZExponent e) { return {e.lambda, e.z}; }

std::string format_exponent(int e, std::string_view symbol);
std::string format_exponent(LZExponent e, std::string_view unused);
std::string_view symbol_of(DeltaVar);
std::string_view symbol_of(SVar);
std::string_view symbol_of(LZVar);

}  // namespace detail

/// Sparse polynomial over Z. Terms are kept in ascending exponent order and
/// zero coefficients are never stored.
template <class Key, class Var>
class SparsePoly {
 public:
  using TermMap = std::map<Key, Integer>;

  SparsePoly() = default;
  SparsePoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Key{}, Integer(constant));
  }

  static SparsePoly monomial(Key exponent, const Integer& coefficient = 1) {
    SparsePoly p;
    p.add_term(exponent, coefficient);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Key& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Key& exponent, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(unsigned e) const {
    SparsePoly result(1), base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

using DeltaPoly = SparsePoly<int, detail::DeltaVar>;   ///< Z[d]
using SPoly = SparsePoly<int, detail::SVar>;           ///< Z[s^{+-1}]
using LaurentLZ = SparsePoly<LZExponent, detail::LZVar>;  ///< Z[l^{+-1}, z^{+-1}]

/// Thrown when a division that must be exact leaves a remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact quotient `num / den`. Throws InexactDivision when `den` does not
/// divide `num` in the ring (for Z[d], quotients must be polynomials).
template <class Key, class Var>
SparsePoly<Key, Var> exact_divide(const SparsePoly<Key, Var>& num, const SparsePoly<Key, Var>& den);

extern template DeltaPoly exact_divide(const DeltaPoly&, const DeltaPoly&);
extern template SPoly exact_divide(const SPoly&, const SPoly&);
extern template LaurentLZ exact_divide(const LaurentLZ&, const LaurentLZ&);

/// Monomial l^lambda z^z d^delta of the coefficient ring. The ordering is the
/// printing order: by d-exponent, then z-exponent, then l-exponent.
struct RingMonomial {
  int lambda = 0;
  int z = 0;
  int delta = 0;

  friend bool operator==(const RingMonomial&, const RingMonomial&) = default;
  friend std::strong_ordering operator<=>(const RingMonomial& a, const RingMonomial& b) {
    if (auto c = a.delta <=> b.delta; c != 0) return c;
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
};

class RingElem {
 public:
  using TermMap = std::map<RingMonomial, Integer>;

  RingElem() = default;
  RingElem(long constant);  // NOLINT(google-explicit-constructor)
  explicit RingElem(const Integer& constant);

  static RingElem monomial(const Integer& coefficient, RingMonomial m);
  static RingElem lambda(int power = 1);
  static RingElem z(int power = 1);
  static RingElem delta(int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree |a| + b + c over the support.
  int total_degree() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem operator-() const;
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem&, const RingElem&) = default;

  RingElem pow(unsigned e) const;

  /// Text form, e.g. `2*l^-1*z^3 - d^2`; zero prints as `0`.
  std::string to_string() const;
  /// Inverse of to_string; also accepts products, sums and parentheses.
  static RingElem parse(std::string_view text);

 private:
  // Adds c * m, rewriting mixed z/d monomials into normal form first.
  void add_normalized(RingMonomial m, const Integer& c);

  TermMap terms_;
};

/// l -> 1, z -> 0, d -> d.
DeltaPoly spec_brauer(const RingElem& a);

/// l -> s^{2n-1}, z -> s - s^{-1}, d -> 1 + (s^{1-2n} - s^{2n-1}) / (s - s^{-1}).
SPoly spec_s(const RingElem& a, int n);

/// Injective map into Z[l^{+-1}, z^{+-1}] sending d to 1 + (l^{-1} - l) z^{-1}.
LaurentLZ embed_laurent(const RingElem& a);

/// Image of d under spec_s(., n).
SPoly spec_s_delta(int n);

}  // namespace bmw
