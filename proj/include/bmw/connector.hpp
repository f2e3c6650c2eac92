#pragma once

// n-connectors (Brauer diagrams) and Brauer's algebra A_n over Z[d].
//
// Boundary points are numbered 0..n-1 for t1..tn and n..2n-1 for b1..bn.
// That numbering is also the global point order t1 < ... < tn < b1 < ... < bn.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw/ring.hpp"

namespace bmw {

class Connector {
 public:
  /// The unique 0-connector.
  Connector() = default;
  /// `partner[p]` is the point paired with p. Throws std::invalid_argument
  /// unless this is a fixed-point-free involution on an even number of points.
  explicit Connector(std::vector<int> partner);

  static Connector identity(int n);
  /// t_i joined to b_{perm[i]} (0-based images).
  static Connector from_permutation(std::span<const int> perm);
  /// The connector of E_i: (t_i t_{i+1})(b_i b_{i+1}), identity elsewhere. 1-based i.
  static Connector hook(int n, int i);

  int strands() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& pairing() const { return partner_; }

  bool is_top(int point) const { return point < strands(); }

  /// Number of pairs joining a top point to a bottom point.
  int rank() const;
  /// Top and bottom rows exchanged.
  Connector mirror() const;
  /// Points relabelled i -> n+1-i on both rows.
  Connector relabel_rho() const;
  /// Inverse of from_permutation when every pair runs top to bottom.
  std::optional<std::vector<int>> to_permutation() const;
  /// This connector with one extra vertical strand on the right.
  Connector extend_right() const;

  /// Pairs (a, b) with a < b in the global point order, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;
  /// Number of pairs of chords whose endpoints alternate around the boundary.
  int interlocking_pairs() const;

  /// Text form `[(t1 b2)(t2 t3)(b1 b3)]`.
  std::string to_string() const;
  static Connector parse(std::string_view text);

  /// Lexicographic on the pairing vector; this is also the enumeration order.
  friend auto operator<=>(const Connector&, const Connector&) = default;
  friend bool operator==(const Connector&, const Connector&) = default;

 private:
  std::vector<int> partner_;
};

std::string point_name(int point, int n);

/// All n-connectors in lexicographic order; (2n-1)!! of them.
std::vector<Connector> enumerate_connectors(int n);

/// (2n-1)!! as a big integer.
Integer connector_count(int n);

struct Composite {
  Connector connector;
  int loops = 0;
};

/// Stacks `upper` on top of `lower`, gluing upper's bottom row to lower's top row.
Composite compose_connectors(const Connector& upper, const Connector& lower);

class BrauerElem {
 public:
  using TermMap = std::map<Connector, DeltaPoly>;

  explicit BrauerElem(int n = 0) : n_(n) {}
  static BrauerElem basis(const Connector& c, const DeltaPoly& coef = DeltaPoly(1));

  int strands() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Connector& c, const DeltaPoly& coef);

  BrauerElem& operator+=(const BrauerElem& o);
  friend bool operator==(const BrauerElem&, const BrauerElem&) = default;

  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

BrauerElem brauer_mul(const BrauerElem& x, const BrauerElem& y);

}  // namespace bmw
