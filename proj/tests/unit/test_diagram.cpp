#include <doctest.h>

#include "bmw/algebra.hpp"
#include "bmw/error.hpp"
#include "support.hpp"

using namespace bmw;
using bmw::testing::Rng;
using bmw::testing::uniform;

namespace {

const RingElem l = RingElem::lambda(), li = RingElem::lambda(-1), z = RingElem::z(), d = RingElem::delta();

AlgebraElement word(const char* text, int n) { return normalize(SliceWord::parse(text, n)); }

// One random regular-isotopy move applied somewhere in the word.
SliceWord rewrite(Rng& rng, const SliceWord& w) {
  const int n = w.strands();
  std::vector<Slice> s = w.slices();
  std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.size())));
  int move = uniform(rng, 0, 3);
  int i = uniform(rng, 1, n - 1);
  auto insert = [&](std::vector<Slice> piece) { s.insert(s.begin() + static_cast<long>(at), piece.begin(), piece.end()); };
  if (move == 0) {
    insert({{SliceKind::Positive, i}, {SliceKind::Negative, i}});
  } else if (move == 1) {
    insert({{SliceKind::Negative, i}, {SliceKind::Positive, i}});
  } else if (move == 2 && n >= 3) {
    // g_i g_{i+1} g_i -> g_{i+1} g_i g_{i+1}, inserted as one side times the inverse of the other
    int j = uniform(rng, 1, n - 2);
    insert({{SliceKind::Positive, j}, {SliceKind::Positive, j + 1}, {SliceKind::Positive, j},
            {SliceKind::Negative, j + 1}, {SliceKind::Negative, j}, {SliceKind::Negative, j + 1}});
  } else {
    // far commutation of an adjacent pair
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
      if (std::abs(s[k].index - s[k + 1].index) > 1) {
        std::swap(s[k], s[k + 1]);
        break;
      }
  }
  return SliceWord(n, s);
}

}  // namespace

TEST_CASE("word grammar") {
  SliceWord w = SliceWord::parse("g1 e2 g1^-1", 3);
  CHECK(w.size() == 3);
  CHECK(w.slices()[1] == Slice{SliceKind::Hook, 2});
  CHECK(w.slices()[2] == Slice{SliceKind::Negative, 1});
  CHECK(SliceWord::parse(w.to_string(), 3) == w);
  CHECK(SliceWord::parse("", 1).empty());
  try {
    (void)SliceWord::parse("g1 g5", 2);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
    CHECK(std::string(e.what()).find("index 5 out of range for n=2") != std::string::npos);
  }
  CHECK_THROWS_AS(SliceWord::parse("g1 h2", 3), ParseError);
  CHECK_THROWS_AS(SliceWord(2, {{SliceKind::Hook, 2}}), std::out_of_range);
}

TEST_CASE("tracing") {
  Diagram hopf = trace_diagram(PartialClosure{SliceWord::parse("g1 g1", 2), 2});
  CHECK(hopf.open_strands == 0);
  CHECK(hopf.loops == 2);
  CHECK(std::abs(hopf.writhe) == 2);
  CHECK(hopf.self_crossings() == 0);

  Diagram curl = trace_diagram(PartialClosure{SliceWord::parse("g1", 2), 2});
  CHECK(curl.loops == 1);
  CHECK(curl.self_crossings() == 1);

  Diagram e = trace_diagram(SliceWord::parse("e1 e1", 2));
  CHECK(e.connector == Connector::hook(2, 1));
  CHECK(e.loops == 1);

  // Positive braid on arcs ordered by top endpoint: every crossing met over first.
  Diagram braid = trace_diagram(SliceWord::parse("g1 g2 g1", 3));
  CHECK(braid.connector == Connector::from_permutation(std::vector<int>{2, 1, 0}));
  CHECK_FALSE(first_violation(braid).has_value());
  Diagram inverse = trace_diagram(SliceWord::parse("g1^-1", 2));
  CHECK(first_violation(inverse) == 0);
}

TEST_CASE("skein values computed by hand") {
  Connector id = Connector::identity(2), hook = Connector::hook(2, 1);
  Connector swap = Connector::from_permutation(std::vector<int>{1, 0});
  CHECK(word("g1", 2) == AlgebraElement::basis(swap));
  CHECK(word("g1^-1", 2) == AlgebraElement::basis(swap) + z * AlgebraElement::basis(hook) - z * AlgebraElement::basis(id));
  CHECK(word("g1 e1", 2) == l * AlgebraElement::basis(hook));
  CHECK(word("e1 g1^-1", 2) == li * AlgebraElement::basis(hook));
  CHECK(word("e1 e1", 2) == d * AlgebraElement::basis(hook));
  CHECK(word("e1 g2 e1", 3) == li * AlgebraElement::basis(Connector::hook(3, 1)));
  CHECK(word("e1 e2 e1", 3) == AlgebraElement::basis(Connector::hook(3, 1)));
  // g1^2 = 1 - z l e1 + z g1
  CHECK(word("g1 g1", 2) == AlgebraElement::basis(id) - z * l * AlgebraElement::basis(hook) + z * AlgebraElement::basis(swap));
}

TEST_CASE("closure values") {
  CHECK(close_diagram(SliceWord(0)) == RingElem(1));
  CHECK(close_diagram(SliceWord(1)) == d);
  CHECK(close_diagram(SliceWord(3)) == d.pow(3));
  CHECK(close_diagram(SliceWord::parse("g1", 2)) == li * d);
  CHECK(close_diagram(SliceWord::parse("g1^-1", 2)) == l * d);
  // Expanding g1^2 as above: d^2 - z l d + z l^-1 d.
  CHECK(close_diagram(SliceWord::parse("g1 g1", 2)) == d * d - z * l * d + z * li * d);
  CHECK(close_diagram(SliceWord::parse("g1 g1", 2)).to_string() == "l^-2 - 2 + l^2 + l^-1*z - l*z + d^2");
}

TEST_CASE("closing the last strand") {
  PartialClosure open2 = close_last_strand(SliceWord(2));
  CHECK(open2.open_strands() == 1);
  CHECK(normalize(open2) == d * AlgebraElement::identity(1));
  CHECK(normalize(close_last_strand(SliceWord::parse("g1", 2))) == li * AlgebraElement::identity(1));
  CHECK(normalize(close_last_strand(SliceWord::parse("e1", 2))) == AlgebraElement::identity(1));
  PartialClosure twice = close_last_strand(close_last_strand(SliceWord::parse("g1 g2 g1", 3)));
  CHECK(twice.open_strands() == 1);
}

TEST_CASE("closing onto the hook absorbs the tangle") {
  // T E_m equals eps(T) E_m, where eps(T) is T E_m with its last strand closed.
  Rng rng(31);
  for (int m : {2, 3}) {
    SliceWord em = generator(m + 1, SliceKind::Hook, m);
    for (int trial = 0; trial < 50; ++trial) {
      SliceWord t = bmw::testing::random_word(rng, m + 1, uniform(rng, 0, 5));
      AlgebraElement eps = normalize(close_last_strand(t * em));
      AlgebraElement lifted(m + 1);
      for (const auto& [c, v] : eps.terms()) lifted.add_term(c.extend_right(), v);
      CHECK(multiply(lifted, normalize(em)) == normalize(t * em));
    }
  }
}

TEST_CASE("canonical words") {
  CHECK(canonical_word(Connector::identity(3)).empty());
  CHECK(canonical_word(Connector::hook(3, 2)) == SliceWord::parse("e2", 3));
  CHECK(canonical_word(Connector::from_permutation(std::vector<int>{1, 0})) == SliceWord::parse("g1", 2));
  for (int n = 0; n <= 4; ++n)
    for (const Connector& c : enumerate_connectors(n)) {
      SliceWord w = canonical_word(c);
      Diagram dg = trace_diagram(w);
      CHECK(dg.connector == c);
      CHECK(dg.loops == 0);
      CHECK(dg.self_crossings() == 0);
      CHECK_FALSE(first_violation(dg).has_value());
      CHECK(static_cast<int>(dg.crossings.size()) == c.interlocking_pairs());
      CHECK(dg.writhe == canonical_writhe(c));
      auto reduced = reduce_term(RingElem(1), w);
      REQUIRE(reduced.size() == 1);
      CHECK(reduced.front().first == RingElem(1));
      CHECK(reduced.front().second == c);
    }
}

TEST_CASE("reduction and writhe are regular-isotopy invariant") {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    int n = uniform(rng, 2, 4);
    SliceWord w = bmw::testing::random_word(rng, n, uniform(rng, 0, 6));
    SliceWord v = rewrite(rng, w);
    CHECK(reduce_term(RingElem(1), w) == reduce_term(RingElem(1), v));
    CHECK(trace_diagram(w).writhe == trace_diagram(v).writhe);
    CHECK(close_diagram(w) == close_diagram(v));
  }
}

TEST_CASE("reduction is linear in the coefficient") {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    SliceWord w = bmw::testing::random_word(rng, 3, 5);
    RingElem c = bmw::testing::random_coefficient(rng);
    if (c.is_zero()) continue;
    auto one = reduce_term(RingElem(1), w), scaled = reduce_term(c, w);
    REQUIRE(one.size() == scaled.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      CHECK(scaled[k].first == c * one[k].first);
      CHECK(scaled[k].second == one[k].second);
    }
  }
}
