#pragma once

// Elements of the tangle algebra in the connector basis.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw/connector.hpp"
#include "bmw/diagram.hpp"
#include "bmw/ring.hpp"

namespace bmw {

class AlgebraElement {
 public:
  using TermMap = std::map<Connector, RingElem>;

  explicit AlgebraElement(int n = 0) : n_(n) {}
  static AlgebraElement identity(int n);
  static AlgebraElement basis(const Connector& c, const RingElem& coef = RingElem(1));

  int strands() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElem coefficient(const Connector& c) const;
  void add_term(const Connector& c, const RingElem& coef);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const RingElem& s, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// `coef * [connector] + ...`; the zero element prints as `0`.
  std::string to_string() const;
  /// `[{"coef": ..., "connector": ...}, ...]`
  std::string to_json() const;
  /// Inverse of to_string. The strand count comes from the connectors, or
  /// from `n` when the text is `0`.
  static AlgebraElement parse(std::string_view text, int n = -1);
  static AlgebraElement from_json(std::string_view text, int n = -1);

 private:
  int n_;
  TermMap terms_;
};

AlgebraElement normalize(const SliceWord& w);
AlgebraElement normalize(const PartialClosure& w);
AlgebraElement normalize(const std::vector<std::pair<RingElem, SliceWord>>& expr, int n);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// Basis element of a single generator word, multiplied one slice at a time.
AlgebraElement evaluate_by_slices(const SliceWord& w);

// ---- named words -------------------------------------------------------

SliceWord generator(int n, SliceKind kind, int i);
/// g_m g_{m-1} ... g_1 over n strands (inverses when `inverse`).
SliceWord descending_braid(int m, int n, bool inverse = false);
/// f_0 = 1, f_k = alpha(a_{2k-2}) f_{k-1} e_{2k-1} a_{2k-2}.
SliceWord fk_word(int k, int n);
/// alpha(a_j) alpha(a_{j-2}) e_{j+1} e_{j-1}.
SliceWord hj_word(int j, int n);
/// e_1 e_3 ... e_{2k-1}.
SliceWord alternating_hooks(int k, int n);
/// Slice indices shifted by `by`, over n + by strands.
SliceWord shift_word(const SliceWord& w, int by = 1);
/// The same slices over more strands.
SliceWord widen(const SliceWord& w, int n);

// ---- symmetries --------------------------------------------------------

/// i -> m - i on the first m strands (m defaults to all of them).
SliceWord rho_word(const SliceWord& w, int m = -1);
SliceWord alpha_word(const SliceWord& w);
AlgebraElement rho(const AlgebraElement& x);
AlgebraElement alpha(const AlgebraElement& x);

// ---- permutations and braids --------------------------------------------

using Permutation = std::vector<int>;  ///< 0-based images

enum class SortStrategy { LeftFirst, RightFirst };

/// Positive braid whose string from top i ends at bottom perm[i]; one
/// crossing per inversion.
SliceWord perm_braid(const Permutation& perm, SortStrategy strategy = SortStrategy::LeftFirst);
/// Permutation joining top i to bottom perm[i] for a braid word.
Permutation braid_permutation(const SliceWord& w);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer o inner
Permutation inverse(const Permutation& p);
std::vector<Permutation> all_permutations(int n);
/// (left, right) Lorenz permutations in lexicographic order of the right-hand images.
std::vector<Permutation> lorenz_perms(int left, int right);

// ---- Brauer image and rank ---------------------------------------------

BrauerElem brauer_image(const AlgebraElement& x);
/// Largest rank in the support, -1 for zero.
int rank_of(const AlgebraElement& x);
bool in_ideal(const AlgebraElement& x, int r);

// ---- spanning family ----------------------------------------------------

struct SpanningMember {
  SliceWord word;
  Connector leading;  ///< connector of the traced word
  AlgebraElement value;
};

Integer spanning_count(int n, int r);
std::vector<SpanningMember> spanning_family(int n, int r);

// ---- identity suite -----------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 20240601ULL;

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
};

struct VerifyReport {
  int n = 0;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

VerifyReport verify_suite(int n, std::uint64_t seed = kDefaultSeed);

}  // namespace bmw
