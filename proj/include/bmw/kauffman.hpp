#pragma once

// The Dubrovnik link polynomial via closure, and the closure pairing on the
// connector basis.

#include <optional>
#include <string>
#include <vector>

#include "bmw/algebra.hpp"
#include "bmw/ring.hpp"

namespace bmw {

/// Value of the closure, normalised so that the empty diagram is 1 and an
/// unknotted circle is d.
RingElem dubrovnik(const SliceWord& w);
RingElem dubrovnik(const AlgebraElement& x);

/// Number of components of the closure of `w`.
int closure_components(const SliceWord& w);

inline constexpr int kDefaultGramLimit = 3;
inline constexpr int kDefaultFullDetLimit = 2;

struct GramMatrix {
  int n = 0;
  std::vector<Connector> index;  ///< enumeration order
  std::vector<std::vector<RingElem>> entries;
};

/// Entry (c, d) is the closure value of T_c T_d. Throws std::out_of_range if
/// n exceeds `max_n`.
GramMatrix gram_matrix(int n, int max_n = kDefaultGramLimit);

DeltaPoly determinant(std::vector<std::vector<DeltaPoly>> m);
LaurentLZ determinant(std::vector<std::vector<LaurentLZ>> m);

struct GramCertificate {
  int n = 0;
  /// Every specialised entry is d^r with r <= n, and r = n exactly on mirror pairs.
  bool pattern_ok = false;
  std::vector<std::string> pattern_violations;
  DeltaPoly specialized_det;
  Integer delta_n2_coeff;  ///< coefficient of d^(n^2)
  int top_degree = 0;      ///< n * |C_n|
  Integer top_coeff;       ///< coefficient of d^(n |C_n|)
  bool det_nonzero = false;
  std::optional<bool> full_det_nonzero;  ///< set when n <= the full-ring limit

  std::string to_json() const;
};

GramCertificate gram_certificate(const GramMatrix& a, int full_det_max_n = kDefaultFullDetLimit);

std::string gram_to_json(const GramMatrix& a, const GramCertificate& cert);

}  // namespace bmw
