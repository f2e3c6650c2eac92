#include <doctest.h>

#include "bmw/error.hpp"
#include "bmw/ring.hpp"
#include "support.hpp"

using namespace bmw;
using bmw::testing::Rng;
using bmw::testing::uniform;

namespace {

// Evaluation at a rational point on the relation surface: d is forced to
// 1 + (l^-1 - l) / z, so every representative of a class gives the same value.
mpq_class evaluate(const RingElem& a, const mpq_class& l, const mpq_class& z) {
  mpq_class d = 1 + (1 / l - l) / z;
  mpq_class total = 0;
  for (const auto& [m, c] : a.terms()) {
    mpq_class v = c;
    for (int i = 0; i < std::abs(m.lambda); ++i) v *= m.lambda > 0 ? l : mpq_class(1 / l);
    for (int i = 0; i < m.z; ++i) v *= z;
    for (int i = 0; i < m.delta; ++i) v *= d;
    total += v;
  }
  return total;
}

const std::pair<mpq_class, mpq_class> kPoints[] = {
    {mpq_class(2), mpq_class(3)}, {mpq_class(-3, 2), mpq_class(5, 7)}, {mpq_class(7, 3), mpq_class(-2, 11)}};

RingElem random_ring(Rng& rng) {
  RingElem a;
  int terms = uniform(rng, 0, 4);
  for (int t = 0; t < terms; ++t) {
    RingMonomial m{uniform(rng, -3, 3), 0, 0};
    if (uniform(rng, 0, 1))
      m.z = uniform(rng, 0, 3);
    else
      m.delta = uniform(rng, 0, 3);
    a += RingElem::monomial(uniform(rng, -5, 5), m);
  }
  return a;
}

bool normal_form(const RingElem& a) {
  for (const auto& [m, c] : a.terms())
    if ((m.z != 0 && m.delta != 0) || c == 0) return false;
  return true;
}

Integer spoly_at(const SPoly& p, long s_value) {
  // Clears negative powers by scaling with s^shift.
  int shift = p.is_zero() ? 0 : -std::min(0, p.terms().begin()->first);
  Integer v = 0, s = s_value;
  for (const auto& [e, c] : p.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(e + shift));
    v += c * power;
  }
  return v;
}

}  // namespace

TEST_CASE("mixed monomials rewrite to normal form") {
  RingElem z = RingElem::z(), d = RingElem::delta(), l = RingElem::lambda();
  CHECK(z * d == RingElem::lambda(-1) - l + z);
  CHECK(RingElem::lambda(-1) - l == z * (d - 1));
  RingElem zz_d = RingElem::z(2) * d;
  // z^2 d = z (l^-1 - l + z)
  CHECK(zz_d == z * RingElem::lambda(-1) - z * l + RingElem::z(2));
  CHECK(zz_d.to_string() == "l^-1*z - l*z + z^2");
  CHECK(embed_laurent(zz_d) == embed_laurent(RingElem::z(2)) * embed_laurent(d));
  CHECK(normal_form(RingElem::z(3) * RingElem::delta(4)));
}

TEST_CASE("printing and parsing") {
  RingElem a = RingElem::parse("2*l^-1*z^3 - d^2");
  CHECK(a.to_string() == "2*l^-1*z^3 - d^2");
  CHECK(RingElem::parse(a.to_string()) == a);
  CHECK(RingElem().to_string() == "0");
  CHECK(RingElem::parse("(l + z)*(l - z)") == RingElem::lambda(2) - RingElem::z(2));
  CHECK(RingElem::parse("z*d") == RingElem::parse("l^-1 - l + z"));
  CHECK_THROWS_AS(RingElem::parse("2*q"), ParseError);
  CHECK_THROWS_AS(RingElem::parse("z^-1"), ParseError);
  CHECK_THROWS_AS(RingElem::parse("(l + 1"), ParseError);
}

TEST_CASE("ring axioms and the Laurent embedding on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    RingElem a = random_ring(rng), b = random_ring(rng), c = random_ring(rng);
    RingElem ab = a * b;
    REQUIRE(normal_form(ab));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(embed_laurent(ab) == embed_laurent(a) * embed_laurent(b));
    CHECK(embed_laurent(a + b) == embed_laurent(a) + embed_laurent(b));
    CHECK((a == b) == (embed_laurent(a) == embed_laurent(b)));
    CHECK(RingElem::parse(ab.to_string()) == ab);
    for (const auto& [l, z] : kPoints) CHECK(evaluate(ab, l, z) == evaluate(a, l, z) * evaluate(b, l, z));
  }
}

TEST_CASE("embedding is injective on differences") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    RingElem a = random_ring(rng);
    if (a.is_zero()) continue;
    CHECK_FALSE(embed_laurent(a).is_zero());
  }
}

TEST_CASE("specializations") {
  CHECK(spec_brauer(RingElem::delta(2)) == DeltaPoly::monomial(2));
  CHECK(spec_brauer(RingElem::z() * RingElem::lambda(3)).is_zero());
  CHECK(spec_brauer(RingElem::lambda(-1) - RingElem::lambda() + RingElem::z()).is_zero());
  CHECK(spec_s(RingElem::lambda(), 1) == SPoly::monomial(1));
  CHECK(spec_s(RingElem(1), 4) == SPoly(1));
  CHECK(spec_s(RingElem::delta(), 1).is_zero());
  // n = 2: d -> 1 + (s^-3 - s^3)/(s - s^-1) = -s^-2 - s^2
  CHECK(spec_s_delta(2) == -SPoly::monomial(-2) - SPoly::monomial(2));
  CHECK(embed_laurent(RingElem::delta()) ==
        LaurentLZ(1) + LaurentLZ::monomial({-1, -1}) - LaurentLZ::monomial({1, -1}));

  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    RingElem a = random_ring(rng), b = random_ring(rng);
    CHECK(spec_brauer(a * b) == spec_brauer(a) * spec_brauer(b));
    int n = uniform(rng, 1, 5);
    CHECK(spec_s(a * b, n) == spec_s(a, n) * spec_s(b, n));
    CHECK(spec_s(a + b, n) == spec_s(a, n) + spec_s(b, n));
  }
}

TEST_CASE("spec_s agrees with direct substitution at integer points") {
  // l = s^(2n-1), z = s - 1/s, d from the relation; s = 2 and s = 3.
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    RingElem a = random_ring(rng);
    int n = uniform(rng, 1, 4);
    for (long s : {2L, 3L}) {
      mpq_class sq(s), l = 1, z = sq - mpq_class(1, s);
      for (int i = 0; i < 2 * n - 1; ++i) l *= sq;
      SPoly image = spec_s(a, n);
      int shift = image.is_zero() ? 0 : -std::min(0, image.terms().begin()->first);
      mpq_class scale = 1;
      for (int i = 0; i < shift; ++i) scale *= sq;
      CHECK(evaluate(a, l, z) * scale == mpq_class(spoly_at(image, s)));
    }
  }
}

TEST_CASE("some specialization separates every small nonzero element") {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    RingElem a = random_ring(rng);
    if (a.is_zero() || a.total_degree() > 4) continue;
    bool separated = false;
    for (int n = 1; n <= 12 && !separated; ++n) separated = !spec_s(a, n).is_zero();
    CHECK_MESSAGE(separated, a.to_string());
  }
}

TEST_CASE("exact division") {
  DeltaPoly d = DeltaPoly::monomial(1);
  CHECK(exact_divide(d * d - DeltaPoly(1), d - DeltaPoly(1)) == d + DeltaPoly(1));
  CHECK_THROWS_AS(exact_divide(d * d + DeltaPoly(1), d - DeltaPoly(1)), InexactDivision);
}
