#pragma once

// Tangle diagrams as stacks of elementary slices, read top to bottom.
//
//   X_i+  crossing of positions i, i+1; the strand entering at i passes over
//   X_i-  the same crossing with the other strand over
//   U_i   cap joining positions i, i+1 from above, then a fresh cup below
//
// A word's left end is the top of the picture, so the product x*y of two
// words is their concatenation with x drawn above y.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw/connector.hpp"
#include "bmw/ring.hpp"

namespace bmw {

enum class SliceKind : std::uint8_t { Positive, Negative, Hook };

struct Slice {
  SliceKind kind = SliceKind::Positive;
  int index = 1;  ///< 1-based left position

  bool is_crossing() const { return kind != SliceKind::Hook; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

class SliceWord {
 public:
  explicit SliceWord(int n = 0) : n_(n) {}
  /// Throws std::out_of_range if a slice index is outside 1..n-1.
  SliceWord(int n, std::vector<Slice> slices);

  /// Parses `g1 g2^-1 e3`. Throws ParseError with the token offset.
  static SliceWord parse(std::string_view text, int n);

  int strands() const { return n_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }
  bool empty() const { return slices_.empty(); }

  SliceWord& push(Slice s);
  SliceWord& append(const SliceWord& w);
  friend SliceWord operator*(SliceWord a, const SliceWord& b) { return a.append(b); }
  friend bool operator==(const SliceWord&, const SliceWord&) = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Slice> slices_;
};

/// A word whose last `closed` strands are joined top to bottom around the
/// right side. The result is a tangle on strands() - closed points per row.
struct PartialClosure {
  SliceWord word;
  int closed = 0;

  int open_strands() const { return word.strands() - closed; }
};

/// A component of a traced diagram, in traversal order.
struct Component {
  bool closed = false;
  int start_point = -1;  ///< base point of an arc (its smaller endpoint)
  int end_point = -1;
  int start_level = 0;  ///< first segment of a loop
  int start_position = 0;
};

struct CrossingInfo {
  int slice = 0;  ///< index into the word
  int over_component = -1;
  int under_component = -1;
  int sign = 0;
  bool first_met_under = false;
};

struct Diagram {
  int open_strands = 0;
  Connector connector;
  int loops = 0;
  int writhe = 0;
  /// Arcs sorted by smaller endpoint, then loops in scan order.
  std::vector<Component> components;
  /// Crossings in the order the traversal first reaches them.
  std::vector<CrossingInfo> crossings;

  std::size_t self_crossings() const;
};

Diagram trace_diagram(const PartialClosure& w);
inline Diagram trace_diagram(const SliceWord& w) { return trace_diagram(PartialClosure{w, 0}); }

/// Slice index of the first crossing first met as an under-crossing.
std::optional<int> first_violation(const Diagram& d);

/// Totally descending, no closed components, no self-crossings, and every
/// pair of arcs crossing at most once.
SliceWord canonical_word(const Connector& c);
int canonical_writhe(const Connector& c);

using ReducedTerm = std::pair<RingElem, Connector>;

/// Skein reduction to canonical diagrams, terms sorted by connector.
std::vector<ReducedTerm> reduce_term(const RingElem& coef, const SliceWord& w);
std::vector<ReducedTerm> reduce_term(const RingElem& coef, const PartialClosure& w);

/// Value of the full closure, with the empty diagram worth 1.
RingElem close_diagram(const SliceWord& w);

/// Joins the last strand's top and bottom around the right side.
PartialClosure close_last_strand(const SliceWord& w);
PartialClosure close_last_strand(const PartialClosure& w);

/// Drops memoized reductions held by the calling thread.
void clear_reduction_cache();

}  // namespace bmw
