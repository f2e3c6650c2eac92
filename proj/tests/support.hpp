#pragma once

#include <random>
#include <vector>

#include "bmw/algebra.hpp"

namespace bmw::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SliceWord random_word(Rng& rng, int n, int length, bool hooks = true) {
  SliceWord w(n);
  if (n < 2) return w;
  for (int i = 0; i < length; ++i) {
    int kind = uniform(rng, 0, hooks ? 2 : 1);
    w.push({static_cast<SliceKind>(kind), uniform(rng, 1, n - 1)});
  }
  return w;
}

inline RingElem random_coefficient(Rng& rng) {
  RingElem c(uniform(rng, -3, 3));
  if (uniform(rng, 0, 1)) c += RingElem::lambda(uniform(rng, -2, 2)) * RingElem::z(uniform(rng, 0, 2));
  if (uniform(rng, 0, 2) == 0) c += RingElem(uniform(rng, -2, 2)) * RingElem::delta(uniform(rng, 1, 2));
  return c;
}

inline AlgebraElement random_element(Rng& rng, int n, int terms = 2, int length = 4) {
  AlgebraElement x(n);
  for (int t = 0; t < terms; ++t) x += random_coefficient(rng) * normalize(random_word(rng, n, length));
  return x;
}

}  // namespace bmw::testing
