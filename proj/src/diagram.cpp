#include "bmw/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "bmw/error.hpp"

namespace bmw {

SliceWord::SliceWord(int n, std::vector<Slice> slices) : n_(n) {
  for (const Slice& s : slices) push(s);
}

SliceWord& SliceWord::push(Slice s) {
  if (s.index < 1 || s.index >= n_)
    throw std::out_of_range("index " + std::to_string(s.index) + " out of range for n=" + std::to_string(n_));
  slices_.push_back(s);
  return *this;
}

SliceWord& SliceWord::append(const SliceWord& w) {
  if (w.n_ != n_) throw StrandMismatch(n_, w.n_);
  slices_.insert(slices_.end(), w.slices_.begin(), w.slices_.end());
  return *this;
}

SliceWord SliceWord::parse(std::string_view text, int n) {
  SliceWord w(n);
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    char letter = text[pos];
    if (letter != 'g' && letter != 'e') throw ParseError(pos, "expected generator g<i>, g<i>^-1 or e<i>");
    ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos || pos - digits > 6) throw ParseError(digits, "expected generator index");
    int index = std::stoi(std::string(text.substr(digits, pos - digits)));
    SliceKind kind = letter == 'e' ? SliceKind::Hook : SliceKind::Positive;
    if (pos < text.size() && text[pos] == '^') {
      if (letter != 'g' || text.substr(pos, 3) != "^-1") throw ParseError(pos, "only g<i>^-1 takes an exponent");
      kind = SliceKind::Negative;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "unexpected character in word");
    if (index < 1 || index >= n)
      throw ParseError(start, "index " + std::to_string(index) + " out of range for n=" + std::to_string(n));
    w.slices_.push_back({kind, index});
  }
  return w;
}

std::string SliceWord::to_string() const {
  std::string out;
  for (const Slice& s : slices_) {
    if (!out.empty()) out += ' ';
    out += s.kind == SliceKind::Hook ? 'e' : 'g';
    out += std::to_string(s.index);
    if (s.kind == SliceKind::Negative) out += "^-1";
  }
  return out;
}

std::size_t Diagram::self_crossings() const {
  return static_cast<std::size_t>(std::count_if(crossings.begin(), crossings.end(), [](const CrossingInfo& x) {
    return x.over_component == x.under_component;
  }));
}

namespace {

// Segment (k, p) is the piece of strand at position p between slice k-1 and
// slice k, for k = 0..L. Each segment has an upper and a lower end; ends are
// numbered 2*segment and 2*segment+1.
struct Link {
  int to = -1;  // another end, or -1 - point for a boundary point
  int crossing = -1;
  bool over = false;
};

struct Direction {
  int x = 0;
  int y = 0;  // y grows downward
};

struct CrossingScratch {
  bool seen = false;
  bool first_met_under = false;
  int over_component = -1;
  int under_component = -1;
  Direction over_dir;
  Direction under_dir;
};

class Tracer {
 public:
  explicit Tracer(const PartialClosure& pc)
      : word_(pc.word.slices()),
        width_(pc.word.strands()),
        levels_(static_cast<int>(pc.word.size())),
        open_(pc.open_strands()) {
    if (pc.closed < 0 || pc.closed > width_) throw std::out_of_range("closed strand count out of range");
    links_.assign(static_cast<std::size_t>(2 * (levels_ + 1) * width_), Link{});
    build();
  }

  Diagram run() {
    Diagram d;
    d.open_strands = open_;
    visited_.assign(static_cast<std::size_t>((levels_ + 1) * width_), false);
    scratch_.assign(static_cast<std::size_t>(levels_), CrossingScratch{});
    std::vector<int> partner(static_cast<std::size_t>(2 * open_), -1);

    for (int point = 0; point < 2 * open_; ++point) {
      if (partner[static_cast<std::size_t>(point)] != -1) continue;
      int other = walk(boundary_end(point), static_cast<int>(d.components.size()), false);
      partner[static_cast<std::size_t>(point)] = other;
      partner[static_cast<std::size_t>(other)] = point;
      Component c;
      c.start_point = point;
      c.end_point = other;
      d.components.push_back(c);
    }
    for (int k = 0; k <= levels_; ++k)
      for (int p = 1; p <= width_; ++p) {
        if (visited_[static_cast<std::size_t>(segment(k, p))]) continue;
        walk(up(k, p), static_cast<int>(d.components.size()), true);
        Component c;
        c.closed = true;
        c.start_level = k;
        c.start_position = p;
        d.components.push_back(c);
        ++d.loops;
      }

    d.connector = Connector(std::move(partner));
    for (int k : order_) {
      const auto& cs = scratch_[static_cast<std::size_t>(k)];
      CrossingInfo info;
      info.slice = k;
      info.over_component = cs.over_component;
      info.under_component = cs.under_component;
      int cross = cs.over_dir.x * cs.under_dir.y - cs.over_dir.y * cs.under_dir.x;
      info.sign = cross > 0 ? 1 : -1;
      info.first_met_under = cs.first_met_under;
      d.writhe += info.sign;
      d.crossings.push_back(info);
    }
    return d;
  }

 private:
  // Follows one component from `entry`; returns the boundary point reached,
  // or -1 for a loop.
  int walk(int entry, int component, bool closed) {
    int e = entry;
    for (;;) {
      visited_[static_cast<std::size_t>(e / 2)] = true;
      int exit = e ^ 1;
      const Link& l = links_[static_cast<std::size_t>(exit)];
      if (l.to < 0) return -1 - l.to;
      if (l.crossing >= 0) {
        auto& cs = scratch_[static_cast<std::size_t>(l.crossing)];
        if (!cs.seen) {
          cs.seen = true;
          cs.first_met_under = !l.over;
          order_.push_back(l.crossing);
        }
        Direction dir{position(l.to) - position(exit), level(l.to) - level(exit)};
        if (l.over) {
          cs.over_component = component;
          cs.over_dir = dir;
        } else {
          cs.under_component = component;
          cs.under_dir = dir;
        }
      }
      e = l.to;
      if (closed && e == entry) return -1;
    }
  }

  int segment(int k, int p) const { return k * width_ + (p - 1); }
  int up(int k, int p) const { return 2 * segment(k, p); }
  int down(int k, int p) const { return 2 * segment(k, p) + 1; }
  int level(int end) const { return end / 2 / width_; }
  int position(int end) const { return end / 2 % width_ + 1; }

  int boundary_end(int point) const {
    return point < open_ ? up(0, point + 1) : down(levels_, point - open_ + 1);
  }

  void connect(int a, int b, int crossing = -1, bool over = false) {
    links_[static_cast<std::size_t>(a)] = {b, crossing, over};
    links_[static_cast<std::size_t>(b)] = {a, crossing, over};
  }

  void build() {
    for (int k = 0; k < levels_; ++k) {
      const Slice& s = word_[static_cast<std::size_t>(k)];
      const int i = s.index;
      for (int p = 1; p <= width_; ++p)
        if (p != i && p != i + 1) connect(down(k, p), up(k + 1, p));
      if (s.kind == SliceKind::Hook) {
        connect(down(k, i), down(k, i + 1));
        connect(up(k + 1, i), up(k + 1, i + 1));
      } else {
        bool left_over = s.kind == SliceKind::Positive;
        connect(down(k, i), up(k + 1, i + 1), k, left_over);
        connect(down(k, i + 1), up(k + 1, i), k, !left_over);
      }
    }
    for (int p = 1; p <= width_; ++p) {
      if (p > open_) {
        connect(up(0, p), down(levels_, p));
      } else {
        links_[static_cast<std::size_t>(up(0, p))].to = -1 - (p - 1);
        links_[static_cast<std::size_t>(down(levels_, p))].to = -1 - (open_ + p - 1);
      }
    }
  }

  const std::vector<Slice>& word_;
  int width_;
  int levels_;
  int open_;
  std::vector<Link> links_;
  std::vector<bool> visited_;
  std::vector<CrossingScratch> scratch_;
  std::vector<int> order_;
};

}  // namespace

Diagram trace_diagram(const PartialClosure& w) { return Tracer(w).run(); }

std::optional<int> first_violation(const Diagram& d) {
  for (const CrossingInfo& x : d.crossings)
    if (x.first_met_under) return x.slice;
  return std::nullopt;
}

namespace {

// Events of the cap-closing sweep over one boundary row.
struct BandEvent {
  bool close = false;
  int position = 0;  // 1-based; for a swap the left position, for a close the left leg
  int active = 0;    // strands active before a close
};

// Sweeps a row of arc labels, returning the events and leaving the labels of
// the surviving (through) strands in `labels`. Same-row arcs appear twice.
std::vector<BandEvent> sweep_band(std::vector<int>& labels) {
  std::vector<BandEvent> events;
  for (;;) {
    const int m = static_cast<int>(labels.size());
    bool closed = false;
    for (int i = 0; i + 1 < m; ++i) {
      if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(i + 1)]) continue;
      events.push_back({true, i + 1, m});
      labels.erase(labels.begin() + i, labels.begin() + i + 2);
      closed = true;
      break;
    }
    if (closed) continue;

    // Innermost same-row arc, leftmost on ties.
    int best_left = -1, best_span = 0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q)
        if (labels[static_cast<std::size_t>(p)] == labels[static_cast<std::size_t>(q)] &&
            (best_left < 0 || q - p < best_span)) {
          best_left = p;
          best_span = q - p;
        }
    if (best_left < 0) break;
    std::swap(labels[static_cast<std::size_t>(best_left)], labels[static_cast<std::size_t>(best_left + 1)]);
    events.push_back({false, best_left + 1, m});
  }
  return events;
}

void simplify_snakes(std::vector<Slice>& slices) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 2 < slices.size(); ++k) {
      const Slice &a = slices[k], &b = slices[k + 1], &c = slices[k + 2];
      if (a.kind != SliceKind::Hook || b.kind != SliceKind::Hook || c.kind != SliceKind::Hook) continue;
      if (a.index != c.index || std::abs(a.index - b.index) != 1) continue;
      slices.erase(slices.begin() + static_cast<std::ptrdiff_t>(k + 1), slices.begin() + static_cast<std::ptrdiff_t>(k + 3));
      changed = true;
      break;
    }
  }
}

}  // namespace

SliceWord canonical_word(const Connector& c) {
  const int n = c.strands();
  // Arc labels, ordered by smaller endpoint.
  std::vector<int> arc_of(static_cast<std::size_t>(2 * n), -1);
  int next = 0;
  for (auto [a, b] : c.pairs()) {
    arc_of[static_cast<std::size_t>(a)] = next;
    arc_of[static_cast<std::size_t>(b)] = next;
    ++next;
  }

  std::vector<Slice> out;
  auto crossing = [&](int position) { out.push_back({SliceKind::Positive, position}); };
  auto hook = [&](int position) { out.push_back({SliceKind::Hook, position}); };

  std::vector<int> top(arc_of.begin(), arc_of.begin() + n);
  for (const BandEvent& ev : sweep_band(top)) {
    if (!ev.close) {
      crossing(ev.position);
    } else {
      // Cap the pair, then walk the fresh cup out to the parked region.
      for (int j = ev.position; j <= ev.active - 1; ++j) hook(j);
    }
  }

  std::vector<int> bottom(arc_of.begin() + n, arc_of.end());
  std::vector<BandEvent> bottom_events = sweep_band(bottom);

  // Through strands: top order to bottom order.
  std::vector<int> rank_in_bottom(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < bottom.size(); ++i) rank_in_bottom[static_cast<std::size_t>(bottom[i])] = static_cast<int>(i);
  for (std::size_t pass = 0; pass < top.size(); ++pass)
    for (std::size_t i = 0; i + 1 < top.size(); ++i)
      if (rank_in_bottom[static_cast<std::size_t>(top[i])] > rank_in_bottom[static_cast<std::size_t>(top[i + 1])]) {
        std::swap(top[i], top[i + 1]);
        crossing(static_cast<int>(i) + 1);
      }

  for (auto it = bottom_events.rbegin(); it != bottom_events.rend(); ++it) {
    if (!it->close) {
      crossing(it->position);
    } else {
      // Bring a parked cup back in to open the pair.
      for (int j = it->active - 2; j >= it->position; --j) hook(j);
    }
  }

  simplify_snakes(out);

  // Earlier arcs pass over later ones.
  SliceWord word(n, out);
  Diagram d = trace_diagram(word);
  std::vector<Slice> signed_slices = word.slices();
  for (const CrossingInfo& x : d.crossings)
    if (x.over_component > x.under_component) signed_slices[static_cast<std::size_t>(x.slice)].kind = SliceKind::Negative;
  return SliceWord(n, std::move(signed_slices));
}

namespace {

using Reduction = std::map<Connector, RingElem>;

struct ReductionCache {
  std::unordered_map<std::string, Reduction> words;
  std::map<Connector, int> writhes;
};

ReductionCache& cache() {
  thread_local ReductionCache c;
  return c;
}

constexpr std::size_t kCacheLimit = 400000;

std::string cache_key(const PartialClosure& pc) {
  std::string key;
  key.reserve(2 * pc.word.size() + 2);
  key.push_back(static_cast<char>(pc.word.strands()));
  key.push_back(static_cast<char>(pc.closed));
  for (const Slice& s : pc.word.slices()) {
    key.push_back(static_cast<char>(s.kind));
    key.push_back(static_cast<char>(s.index));
  }
  return key;
}

void accumulate(Reduction& into, const Reduction& from, const RingElem& factor) {
  for (const auto& [c, coef] : from) {
    RingElem term = coef * factor;
    auto [it, inserted] = into.try_emplace(c, term);
    if (!inserted) {
      it->second += term;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

PartialClosure with_slice(const PartialClosure& pc, int k, std::optional<Slice> replacement) {
  std::vector<Slice> slices = pc.word.slices();
  if (replacement)
    slices[static_cast<std::size_t>(k)] = *replacement;
  else
    slices.erase(slices.begin() + k);
  return {SliceWord(pc.word.strands(), std::move(slices)), pc.closed};
}

Reduction reduce(const PartialClosure& pc) {
  std::string key = cache_key(pc);
  if (auto it = cache().words.find(key); it != cache().words.end()) return it->second;

  Reduction result;
  Diagram d = trace_diagram(pc);
  if (auto k = first_violation(d)) {
    const Slice& s = pc.word.slices()[static_cast<std::size_t>(*k)];
    const bool positive = s.kind == SliceKind::Positive;
    Slice switched{positive ? SliceKind::Negative : SliceKind::Positive, s.index};
    Slice hooked{SliceKind::Hook, s.index};
    // X+ = X- + z (X0 - U),  X- = X+ - z (X0 - U)
    RingElem z = positive ? RingElem::z() : -RingElem::z();
    accumulate(result, reduce(with_slice(pc, *k, switched)), RingElem(1));
    accumulate(result, reduce(with_slice(pc, *k, std::nullopt)), z);
    accumulate(result, reduce(with_slice(pc, *k, hooked)), -z);
  } else {
    int shift = canonical_writhe(d.connector) - d.writhe;
    result.emplace(d.connector, RingElem::lambda(shift) * RingElem::delta(d.loops));
  }

  if (cache().words.size() >= kCacheLimit) cache().words.clear();
  cache().words.emplace(std::move(key), result);
  return result;
}

std::vector<ReducedTerm> scaled(const Reduction& r, const RingElem& coef) {
  std::vector<ReducedTerm> out;
  for (const auto& [c, v] : r) {
    RingElem term = coef * v;
    if (!term.is_zero()) out.emplace_back(std::move(term), c);
  }
  return out;
}

}  // namespace

int canonical_writhe(const Connector& c) {
  auto& writhes = cache().writhes;
  if (auto it = writhes.find(c); it != writhes.end()) return it->second;
  int w = trace_diagram(canonical_word(c)).writhe;
  writhes.emplace(c, w);
  return w;
}

std::vector<ReducedTerm> reduce_term(const RingElem& coef, const SliceWord& w) {
  return reduce_term(coef, PartialClosure{w, 0});
}

std::vector<ReducedTerm> reduce_term(const RingElem& coef, const PartialClosure& w) {
  if (coef.is_zero()) return {};
  return scaled(reduce(w), coef);
}

RingElem close_diagram(const SliceWord& w) {
  Reduction r = reduce(PartialClosure{w, w.strands()});
  return r.empty() ? RingElem(0) : r.begin()->second;
}

PartialClosure close_last_strand(const SliceWord& w) { return close_last_strand(PartialClosure{w, 0}); }

PartialClosure close_last_strand(const PartialClosure& w) {
  if (w.closed >= w.word.strands()) throw std::invalid_argument("no open strand left to close");
  return {w.word, w.closed + 1};
}

void clear_reduction_cache() {
  cache().words.clear();
  cache().writhes.clear();
}

}  // namespace bmw
