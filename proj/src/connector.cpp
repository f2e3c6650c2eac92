#include "bmw/connector.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "bmw/error.hpp"

namespace bmw {

Connector::Connector(std::vector<int> partner) : partner_(std::move(partner)) {
  const int size = static_cast<int>(partner_.size());
  if (size % 2 != 0) throw std::invalid_argument("connector needs an even number of points");
  for (int p = 0; p < size; ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw std::invalid_argument("connector pairing is not a fixed-point-free involution");
  }
}

Connector Connector::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return from_permutation(perm);
}

Connector Connector::from_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (int i = 0; i < n; ++i) {
    int j = perm[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n) throw std::invalid_argument("permutation image out of range");
    partner[static_cast<std::size_t>(i)] = n + j;
    partner[static_cast<std::size_t>(n + j)] = i;
  }
  return Connector(std::move(partner));
}

Connector Connector::hook(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("hook index out of range");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    partner[static_cast<std::size_t>(p)] = n + p;
    partner[static_cast<std::size_t>(n + p)] = p;
  }
  auto join = [&](int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  };
  join(i - 1, i);
  join(n + i - 1, n + i);
  return Connector(std::move(partner));
}

int Connector::rank() const {
  const int n = strands();
  int r = 0;
  for (int p = 0; p < n; ++p)
    if (partner(p) >= n) ++r;
  return r;
}

Connector Connector::mirror() const {
  const int n = strands();
  auto flip = [n](int p) { return p < n ? p + n : p - n; };
  std::vector<int> out(partner_.size());
  for (int p = 0; p < 2 * n; ++p) out[static_cast<std::size_t>(flip(p))] = flip(partner(p));
  return Connector(std::move(out));
}

Connector Connector::relabel_rho() const {
  const int n = strands();
  auto flip = [n](int p) { return p < n ? n - 1 - p : n + (2 * n - 1 - p); };
  std::vector<int> out(partner_.size());
  for (int p = 0; p < 2 * n; ++p) out[static_cast<std::size_t>(flip(p))] = flip(partner(p));
  return Connector(std::move(out));
}

std::optional<std::vector<int>> Connector::to_permutation() const {
  const int n = strands();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (partner(i) < n) return std::nullopt;
    perm[static_cast<std::size_t>(i)] = partner(i) - n;
  }
  return perm;
}

Connector Connector::extend_right() const {
  const int n = strands();
  auto shift = [n](int p) { return p < n ? p : p + 1; };
  std::vector<int> out(static_cast<std::size_t>(2 * n + 2));
  for (int p = 0; p < 2 * n; ++p) out[static_cast<std::size_t>(shift(p))] = shift(partner(p));
  out[static_cast<std::size_t>(n)] = 2 * n + 1;
  out[static_cast<std::size_t>(2 * n + 1)] = n;
  return Connector(std::move(out));
}

std::vector<std::pair<int, int>> Connector::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p)
    if (p < partner(p)) out.emplace_back(p, partner(p));
  return out;
}

int Connector::interlocking_pairs() const {
  const int n = strands();
  // Position around the boundary circle: along the top, then back along the bottom.
  auto around = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  std::vector<std::pair<int, int>> chords;
  for (auto [a, b] : pairs()) {
    int x = around(a), y = around(b);
    chords.emplace_back(std::min(x, y), std::max(x, y));
  }
  int count = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      bool c_in = a < c && c < b;
      bool d_in = a < d && d < b;
      if (c_in != d_in) ++count;
    }
  return count;
}

std::string point_name(int point, int n) {
  return point < n ? "t" + std::to_string(point + 1) : "b" + std::to_string(point - n + 1);
}

std::string Connector::to_string() const {
  std::string out = "[";
  for (auto [a, b] : pairs()) out += "(" + point_name(a, strands()) + " " + point_name(b, strands()) + ")";
  return out + "]";
}

Connector Connector::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch) throw ParseError(pos, std::string("expected '") + ch + "'");
    ++pos;
  };
  struct RawPoint {
    bool top;
    int index;
  };
  auto point = [&]() -> RawPoint {
    skip();
    if (pos >= text.size() || (text[pos] != 't' && text[pos] != 'b'))
      throw ParseError(pos, "expected point t<i> or b<i>");
    bool top = text[pos] == 't';
    std::size_t start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError(start, "expected point index");
    int index = std::stoi(std::string(text.substr(start, pos - start)));
    if (index < 1) throw ParseError(start, "point index must be positive");
    return {top, index};
  };

  expect('[');
  std::vector<std::pair<RawPoint, RawPoint>> raw;
  std::vector<std::size_t> offsets;
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    offsets.push_back(pos);
    expect('(');
    RawPoint a = point();
    RawPoint b = point();
    expect(')');
    raw.emplace_back(a, b);
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, "trailing characters after connector");

  const int n = static_cast<int>(raw.size());
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    auto id = [&](RawPoint p) {
      if (p.index > n) throw ParseError(offsets[k], "point index " + std::to_string(p.index) + " exceeds n=" + std::to_string(n));
      return p.top ? p.index - 1 : n + p.index - 1;
    };
    int a = id(raw[k].first), b = id(raw[k].second);
    if (a == b || partner[static_cast<std::size_t>(a)] != -1 || partner[static_cast<std::size_t>(b)] != -1)
      throw ParseError(offsets[k], "point used twice");
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  return Connector(std::move(partner));
}

std::vector<Connector> enumerate_connectors(int n) {
  if (n < 0) throw std::invalid_argument("negative strand count");
  std::vector<Connector> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::function<void()> rec = [&] {
    auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      out.emplace_back(partner);
      return;
    }
    int p = static_cast<int>(first - partner.begin());
    for (int q = p + 1; q < 2 * n; ++q) {
      if (partner[static_cast<std::size_t>(q)] != -1) continue;
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      rec();
      partner[static_cast<std::size_t>(p)] = -1;
      partner[static_cast<std::size_t>(q)] = -1;
    }
  };
  rec();
  return out;
}

Integer connector_count(int n) {
  Integer r = 1;
  for (int k = 1; k <= n; ++k) r *= 2 * k - 1;
  return r;
}

Composite compose_connectors(const Connector& upper, const Connector& lower) {
  const int n = upper.strands();
  if (lower.strands() != n) throw StrandMismatch(n, lower.strands());
  // Result points: upper's top row (0..n-1) and lower's bottom row (n..2n-1).
  // Walking from an outer point alternates between the two connectors through
  // the glued middle row until it reaches another outer point.
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<bool> middle_seen(static_cast<std::size_t>(n), false);

  auto walk = [&](int start) {
    bool in_upper = start < n;
    int here = start;  // point index inside the current connector
    for (;;) {
      const Connector& c = in_upper ? upper : lower;
      int there = c.partner(here);
      bool outer = in_upper ? there < n : there >= n;
      if (outer) return there;  // same numbering in the result
      int mid = in_upper ? there - n : there;
      middle_seen[static_cast<std::size_t>(mid)] = true;
      in_upper = !in_upper;
      here = in_upper ? mid + n : mid;
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    if (partner[static_cast<std::size_t>(p)] != -1) continue;
    int q = walk(p);
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    // Follow the closed curve through the middle row.
    int here = m;  // index in lower's top row
    do {
      middle_seen[static_cast<std::size_t>(here)] = true;
      int via_lower = lower.partner(here);   // another lower-top point
      middle_seen[static_cast<std::size_t>(via_lower)] = true;
      here = upper.partner(via_lower + n) - n;  // back to a middle point
    } while (here != m);
  }
  return {Connector(std::move(partner)), loops};
}

BrauerElem BrauerElem::basis(const Connector& c, const DeltaPoly& coef) {
  BrauerElem e(c.strands());
  e.add_term(c, coef);
  return e;
}

void BrauerElem::add_term(const Connector& c, const DeltaPoly& coef) {
  if (c.strands() != n_) throw StrandMismatch(n_, c.strands());
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BrauerElem& BrauerElem::operator+=(const BrauerElem& o) {
  if (o.n_ != n_) throw StrandMismatch(n_, o.n_);
  for (const auto& [c, p] : o.terms_) add_term(c, p);
  return *this;
}

std::string BrauerElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, p] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ") * " + c.to_string();
  }
  return out;
}

BrauerElem brauer_mul(const BrauerElem& x, const BrauerElem& y) {
  if (x.strands() != y.strands()) throw StrandMismatch(x.strands(), y.strands());
  BrauerElem out(x.strands());
  for (const auto& [c, p] : x.terms())
    for (const auto& [d, q] : y.terms()) {
      auto [e, loops] = compose_connectors(c, d);
      out.add_term(e, p * q * DeltaPoly::monomial(loops));
    }
  return out;
}

}  // namespace bmw
