#include "bmw/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bmw/error.hpp"

namespace bmw {

// ---- AlgebraElement ----------------------------------------------------

AlgebraElement AlgebraElement::identity(int n) { return basis(Connector::identity(n)); }

AlgebraElement AlgebraElement::basis(const Connector& c, const RingElem& coef) {
  AlgebraElement x(c.strands());
  x.add_term(c, coef);
  return x;
}

RingElem AlgebraElement::coefficient(const Connector& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? RingElem(0) : it->second;
}

void AlgebraElement::add_term(const Connector& c, const RingElem& coef) {
  if (c.strands() != n_) throw StrandMismatch(n_, c.strands());
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_) throw StrandMismatch(n_, o.n_);
  for (const auto& [c, v] : o.terms_) add_term(c, v);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n_ != n_) throw StrandMismatch(n_, o.n_);
  for (const auto& [c, v] : o.terms_) add_term(c, -v);
  return *this;
}

AlgebraElement operator*(const RingElem& s, const AlgebraElement& x) {
  AlgebraElement out(x.n_);
  for (const auto& [c, v] : x.terms_) out.add_term(c, s * v);
  return out;
}

namespace {

bool negative_monomial(const RingElem& r) { return r.terms().size() == 1 && r.terms().begin()->second < 0; }

std::string coef_text(const RingElem& r) {
  std::string s = r.to_string();
  return r.terms().size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : terms_) {
    bool neg = negative_monomial(v);
    RingElem shown = neg ? -v : v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coef_text(shown) + " * " + c.to_string();
  }
  return out;
}

std::string AlgebraElement::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [c, v] : terms_) j.push_back({{"connector", c.to_string()}, {"coef", v.to_string()}});
  return j.dump();
}

namespace {

[[noreturn]] void rethrow_at(const ParseError& e, std::size_t base) { throw ParseError(base + e.offset(), e.reason()); }

struct TermSpan {
  std::size_t begin;
  std::size_t end;
  bool negative;
};

// Splits at top-level '+'/'-' that act as binary operators between terms.
std::vector<TermSpan> split_terms(std::string_view text) {
  std::vector<TermSpan> spans;
  int depth = 0;
  std::size_t begin = 0;
  bool negative = false;
  char prev = 0;  // last non-space character
  bool have_content = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') {
      if (--depth < 0) throw ParseError(i, "unbalanced bracket");
    }
    bool sign = depth == 0 && (ch == '+' || ch == '-') && prev != '^' && prev != '*';
    if (sign && !have_content) {
      if (ch == '-') negative = !negative;
      begin = i + 1;
    } else if (sign) {
      spans.push_back({begin, i, negative});
      negative = ch == '-';
      begin = i + 1;
      have_content = false;
    } else {
      have_content = true;
    }
    prev = ch;
  }
  if (depth != 0) throw ParseError(text.size(), "unbalanced bracket");
  if (!have_content) throw ParseError(text.size(), "expected a term");
  spans.push_back({begin, text.size(), negative});
  return spans;
}

}  // namespace

AlgebraElement AlgebraElement::parse(std::string_view text, int n) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first).starts_with("0") &&
      text.find_first_not_of(" \t\r\n", first + 1) == std::string_view::npos) {
    if (n < 0) throw ParseError(first, "zero element needs an explicit strand count");
    return AlgebraElement(n);
  }

  struct Parsed {
    RingElem value;
    Connector connector;
    std::size_t offset;
  };
  std::vector<Parsed> parsed;
  for (const TermSpan& span : split_terms(text)) {
    std::string_view term = text.substr(span.begin, span.end - span.begin);
    std::size_t open = term.find('[');
    if (open == std::string_view::npos) throw ParseError(span.begin, "term has no connector");
    std::size_t close = term.find(']', open);
    if (close == std::string_view::npos) throw ParseError(span.begin + open, "unterminated connector");
    if (term.find('[', close) != std::string_view::npos) throw ParseError(span.begin + close, "term has two connectors");

    Connector c;
    try {
      c = Connector::parse(term.substr(open, close - open + 1));
    } catch (const ParseError& e) {
      rethrow_at(e, span.begin + open);
    }

    // The coefficient is whatever multiplies the connector on either side.
    std::string coef(term.substr(0, open));
    std::string after(term.substr(close + 1));
    auto trim = [](std::string& s) {
      s.erase(0, std::min(s.find_first_not_of(" \t\r\n"), s.size()));
      s.erase(std::min(s.find_last_not_of(" \t\r\n") + 1, s.size()));
    };
    trim(coef);
    trim(after);
    std::size_t coef_base = span.begin + term.find_first_not_of(" \t\r\n");
    if (!coef.empty()) {
      if (coef.back() != '*') throw ParseError(span.begin + open, "expected '*' before connector");
      coef.pop_back();
      trim(coef);
    }
    if (!after.empty()) {
      if (after.front() != '*') throw ParseError(span.begin + close + 1, "expected '*' after connector");
      after.erase(0, 1);
      trim(after);
      coef = coef.empty() ? after : "(" + coef + ")*(" + after + ")";
      coef_base = span.begin + close + 1;
    }
    RingElem value(1);
    if (!coef.empty()) {
      try {
        value = RingElem::parse(coef);
      } catch (const ParseError& e) {
        rethrow_at(e, coef_base);
      }
    }
    parsed.push_back({span.negative ? -value : value, c, span.begin + open});
  }

  int strands = n >= 0 ? n : parsed.front().connector.strands();
  AlgebraElement x(strands);
  for (const auto& [v, c, offset] : parsed) {
    if (c.strands() != strands)
      throw ParseError(offset, "connector " + c.to_string() + " has " + std::to_string(c.strands()) +
                              " strands, expected " + std::to_string(strands));
    x.add_term(c, v);
  }
  return x;
}

AlgebraElement AlgebraElement::from_json(std::string_view text, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  if (!j.is_array()) throw ParseError(0, "expected a JSON array of terms");
  if (j.empty()) {
    if (n < 0) throw ParseError(0, "zero element needs an explicit strand count");
    return AlgebraElement(n);
  }
  std::optional<AlgebraElement> x;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("connector") || !term.contains("coef") ||
        !term["connector"].is_string() || !term["coef"].is_string())
      throw ParseError(0, "each term needs string fields 'connector' and 'coef'");
    Connector c = Connector::parse(term["connector"].get<std::string>());
    RingElem v = RingElem::parse(term["coef"].get<std::string>());
    if (!x) x.emplace(n >= 0 ? n : c.strands());
    if (c.strands() != x->strands()) throw ParseError(0, "mixed strand counts");
    x->add_term(c, v);
  }
  return *x;
}

// ---- normalize and multiply --------------------------------------------

namespace {

const SliceWord& canonical(const Connector& c) {
  thread_local std::map<Connector, SliceWord> words;
  auto it = words.find(c);
  if (it == words.end()) it = words.emplace(c, canonical_word(c)).first;
  return it->second;
}

void add_reduced(AlgebraElement& into, const std::vector<ReducedTerm>& terms) {
  for (const auto& [v, c] : terms) into.add_term(c, v);
}

}  // namespace

AlgebraElement normalize(const SliceWord& w) { return normalize(PartialClosure{w, 0}); }

AlgebraElement normalize(const PartialClosure& w) {
  AlgebraElement out(w.open_strands());
  add_reduced(out, reduce_term(RingElem(1), w));
  return out;
}

AlgebraElement normalize(const std::vector<std::pair<RingElem, SliceWord>>& expr, int n) {
  AlgebraElement out(n);
  for (const auto& [coef, w] : expr) {
    if (w.strands() != n) throw StrandMismatch(n, w.strands());
    add_reduced(out, reduce_term(coef, w));
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.strands() != y.strands()) throw StrandMismatch(x.strands(), y.strands());
  AlgebraElement out(x.strands());
  for (const auto& [c, p] : x.terms())
    for (const auto& [d, q] : y.terms()) add_reduced(out, reduce_term(p * q, canonical(c) * canonical(d)));
  return out;
}

AlgebraElement evaluate_by_slices(const SliceWord& w) {
  AlgebraElement x = AlgebraElement::identity(w.strands());
  for (const Slice& s : w.slices()) x = multiply(x, normalize(SliceWord(w.strands(), {s})));
  return x;
}

// ---- named words -------------------------------------------------------

SliceWord generator(int n, SliceKind kind, int i) { return SliceWord(n, {Slice{kind, i}}); }

SliceWord descending_braid(int m, int n, bool inverse) {
  if (m < 0 || m >= std::max(n, 1)) throw std::out_of_range("a_m needs m+1 <= n strands");
  SliceWord w(n);
  for (int i = m; i >= 1; --i) w.push({inverse ? SliceKind::Negative : SliceKind::Positive, i});
  return w;
}

SliceWord fk_word(int k, int n) {
  if (k < 0 || 2 * k > n) throw std::out_of_range("f_k needs 2k <= n");
  SliceWord w(n);
  if (k == 0) return w;
  SliceWord a = descending_braid(2 * k - 2, n);
  return alpha_word(a) * fk_word(k - 1, n) * generator(n, SliceKind::Hook, 2 * k - 1) * a;
}

SliceWord hj_word(int j, int n) {
  if (j < 2 || j + 2 > n) throw std::out_of_range("h_j needs 2 <= j and j+2 <= n");
  return alpha_word(descending_braid(j, n)) * alpha_word(descending_braid(j - 2, n)) *
         generator(n, SliceKind::Hook, j + 1) * generator(n, SliceKind::Hook, j - 1);
}

SliceWord alternating_hooks(int k, int n) {
  if (k < 0 || 2 * k > n) throw std::out_of_range("e_1 e_3 ... e_{2k-1} needs 2k <= n");
  SliceWord w(n);
  for (int i = 1; i <= k; ++i) w.push({SliceKind::Hook, 2 * i - 1});
  return w;
}

SliceWord shift_word(const SliceWord& w, int by) {
  SliceWord out(w.strands() + by);
  for (const Slice& s : w.slices()) out.push({s.kind, s.index + by});
  return out;
}

SliceWord widen(const SliceWord& w, int n) {
  if (n < w.strands()) throw std::invalid_argument("cannot narrow a word");
  return SliceWord(n, w.slices());
}

// ---- symmetries --------------------------------------------------------

SliceWord rho_word(const SliceWord& w, int m) {
  if (m < 0) m = w.strands();
  SliceWord out(w.strands());
  for (const Slice& s : w.slices()) {
    if (s.index >= m) throw std::out_of_range("slice outside the reflected strands");
    out.push({s.kind, m - s.index});
  }
  return out;
}

SliceWord alpha_word(const SliceWord& w) {
  std::vector<Slice> slices(w.slices().rbegin(), w.slices().rend());
  return SliceWord(w.strands(), std::move(slices));
}

AlgebraElement rho(const AlgebraElement& x) {
  AlgebraElement out(x.strands());
  for (const auto& [c, v] : x.terms()) add_reduced(out, reduce_term(v, rho_word(canonical(c))));
  return out;
}

AlgebraElement alpha(const AlgebraElement& x) {
  AlgebraElement out(x.strands());
  for (const auto& [c, v] : x.terms()) add_reduced(out, reduce_term(v, alpha_word(canonical(c))));
  return out;
}

// ---- permutations and braids --------------------------------------------

SliceWord perm_braid(const Permutation& perm, SortStrategy strategy) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  // target[p]: where the string now at position p must end.
  std::vector<int> target = perm;
  SliceWord w(n);
  for (;;) {
    int pick = -1;
    for (int p = 0; p + 1 < n; ++p)
      if (target[static_cast<std::size_t>(p)] > target[static_cast<std::size_t>(p + 1)]) {
        pick = p;
        if (strategy == SortStrategy::LeftFirst) break;
      }
    if (pick < 0) break;
    std::swap(target[static_cast<std::size_t>(pick)], target[static_cast<std::size_t>(pick + 1)]);
    w.push({SliceKind::Positive, pick + 1});
  }
  return w;
}

Permutation braid_permutation(const SliceWord& w) {
  const int n = w.strands();
  std::vector<int> at(static_cast<std::size_t>(n));  // string at each position
  std::iota(at.begin(), at.end(), 0);
  for (const Slice& s : w.slices()) {
    if (!s.is_crossing()) throw std::invalid_argument("braid_permutation needs a braid word");
    std::swap(at[static_cast<std::size_t>(s.index - 1)], at[static_cast<std::size_t>(s.index)]);
  }
  Permutation perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  return perm;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> lorenz_perms(int left, int right) {
  if (left < 0 || right < 0) throw std::invalid_argument("negative Lorenz type");
  const int n = left + right;
  std::vector<Permutation> out;
  // Choose which bottom positions the right-hand strings reach.
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + right, true);
  do {
    Permutation p(static_cast<std::size_t>(n));
    int l = 0, r = left;
    for (int pos = 0; pos < n; ++pos) p[static_cast<std::size_t>(chosen[static_cast<std::size_t>(pos)] ? r++ : l++)] = pos;
    out.push_back(std::move(p));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

// ---- Brauer image and rank ---------------------------------------------

BrauerElem brauer_image(const AlgebraElement& x) {
  BrauerElem out(x.strands());
  for (const auto& [c, v] : x.terms()) out.add_term(c, spec_brauer(v));
  return out;
}

int rank_of(const AlgebraElement& x) {
  int r = -1;
  for (const auto& [c, v] : x.terms()) r = std::max(r, c.rank());
  return r;
}

bool in_ideal(const AlgebraElement& x, int r) { return rank_of(x) <= r; }

// ---- spanning family ----------------------------------------------------

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

Integer spanning_count(int n, int r) {
  if (r < 0 || r > n || (n - r) % 2 != 0) throw std::invalid_argument("need r = n - 2k >= 0");
  Integer ck = connector_count((n - r) / 2);
  Integer b = binomial(n, r);
  return b * b * ck * ck * factorial(r);
}

std::vector<SpanningMember> spanning_family(int n, int r) {
  if (r < 0 || r > n || (n - r) % 2 != 0) throw std::invalid_argument("need r = n - 2k >= 0");
  const int k = (n - r) / 2;
  const auto lorenz = lorenz_perms(2 * k, r);
  const auto cuts = enumerate_connectors(k);
  const auto shuffles = all_permutations(r);

  thread_local std::map<std::string, AlgebraElement> value_of;
  auto value = [&](const SliceWord& w) -> const AlgebraElement& {
    std::string key = std::to_string(w.strands()) + ":" + w.to_string();
    auto it = value_of.find(key);
    if (it == value_of.end()) it = value_of.emplace(key, normalize(w)).first;
    return it->second;
  };

  const SliceWord f = widen(fk_word(k, 2 * k), n);
  std::vector<SpanningMember> out;
  for (const Permutation& pi_inv : lorenz) {
    const SliceWord left = perm_braid(inverse(pi_inv));
    for (const Connector& c : cuts) {
      const SliceWord tc = widen(canonical(c), n);
      for (const Connector& d : cuts) {
        const SliceWord td = widen(canonical(d), n);
        // Middle block, rank 0 on the first 2k strands.
        const AlgebraElement middle = multiply(multiply(value(tc), value(f)), value(td));
        for (const Permutation& tau : shuffles) {
          const SliceWord shuffled = shift_word(perm_braid(tau), 2 * k);
          for (const Permutation& mu : lorenz) {
            const SliceWord right = perm_braid(mu);
            SpanningMember m{left * tc * f * td * shuffled * right, Connector{}, AlgebraElement(n)};
            m.leading = trace_diagram(m.word).connector;
            m.value = multiply(multiply(multiply(value(left), middle), value(shuffled)), value(right));
            out.push_back(std::move(m));
          }
        }
      }
    }
  }
  return out;
}

// ---- identity suite -----------------------------------------------------

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.name << "\n";
  os << "n=" << n << " seed=" << seed << " checks=" << checks.size() << " failures=" << failures() << "\n";
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["seed"] = seed;
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) j["checks"].push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed}});
  return j.dump(2);
}

namespace {

using Expr = std::vector<std::pair<RingElem, SliceWord>>;

class Suite {
 public:
  Suite(VerifyReport& report, std::mt19937_64& rng) : report_(report), rng_(rng) {}

  // Both sides through word reduction and through products of normalized generators.
  void equal(const std::string& group, const std::string& name, const Expr& lhs, const Expr& rhs) {
    const int n = lhs.front().second.strands();
    bool ok = normalize(lhs, n) == normalize(rhs, n) && by_products(lhs, n) == by_products(rhs, n);
    report_.checks.push_back({group, name, ok});
  }
  void equal(const std::string& group, const std::string& name, const SliceWord& lhs, const SliceWord& rhs) {
    equal(group, name, Expr{{RingElem(1), lhs}}, Expr{{RingElem(1), rhs}});
  }
  void flag(const std::string& group, const std::string& name, bool ok) { report_.checks.push_back({group, name, ok}); }

  SliceWord random_word(int n, int max_len) {
    SliceWord w(n);
    if (n < 2) return w;
    std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), kind(0, 2);
    for (int l = len(rng_); l > 0; --l) w.push({static_cast<SliceKind>(kind(rng_)), idx(rng_)});
    return w;
  }

  Permutation random_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  static AlgebraElement by_products(const Expr& e, int n) {
    AlgebraElement out(n);
    for (const auto& [coef, w] : e) out += coef * evaluate_by_slices(w);
    return out;
  }

  VerifyReport& report_;
  std::mt19937_64& rng_;
};

std::string idx(int i) { return std::to_string(i); }

SliceWord g(int n, int i) { return generator(n, SliceKind::Positive, i); }
SliceWord gi(int n, int i) { return generator(n, SliceKind::Negative, i); }
SliceWord e(int n, int i) { return generator(n, SliceKind::Hook, i); }

void relation_checks(Suite& s, int n) {
  const RingElem z = RingElem::z(), l = RingElem::lambda(), li = RingElem::lambda(-1), d = RingElem::delta();
  const SliceWord one(n);
  for (int i = 1; i < n; ++i) {
    const std::string I = idx(i);
    s.equal("relations", "g" + I + " - g" + I + "^-1 = z(1 - e" + I + ")", Expr{{1, g(n, i)}, {-1, gi(n, i)}},
            Expr{{z, one}, {-z, e(n, i)}});
    s.equal("relations", "g" + I + " g" + I + "^-1 = 1", g(n, i) * gi(n, i), one);
    s.equal("relations", "g" + I + "^-1 g" + I + " = 1", gi(n, i) * g(n, i), one);
    s.equal("relations", "e" + I + " e" + I + " = d e" + I, Expr{{1, e(n, i) * e(n, i)}}, Expr{{d, e(n, i)}});
    s.equal("relations", "g" + I + " e" + I + " = l e" + I, Expr{{1, g(n, i) * e(n, i)}}, Expr{{l, e(n, i)}});
    s.equal("relations", "e" + I + " g" + I + " = l e" + I, Expr{{1, e(n, i) * g(n, i)}}, Expr{{l, e(n, i)}});
    for (int j = 1; j < n; ++j) {
      const std::string J = idx(j);
      if (std::abs(i - j) > 1 && i < j) s.equal("relations", "g" + I + " g" + J + " = g" + J + " g" + I, g(n, i) * g(n, j), g(n, j) * g(n, i));
      if (std::abs(i - j) != 1) continue;
      if (i < j) s.equal("relations", "g" + I + " g" + J + " g" + I + " = g" + J + " g" + I + " g" + J, g(n, i) * g(n, j) * g(n, i), g(n, j) * g(n, i) * g(n, j));
      s.equal("relations", "e" + I + " e" + J + " e" + I + " = e" + I, e(n, i) * e(n, j) * e(n, i), e(n, i));
      s.equal("relations", "g" + I + " g" + J + " e" + I + " = e" + J + " e" + I, g(n, i) * g(n, j) * e(n, i), e(n, j) * e(n, i));
      s.equal("relations", "e" + I + " g" + J + " e" + I + " = l^-1 e" + I, Expr{{1, e(n, i) * g(n, j) * e(n, i)}}, Expr{{li, e(n, i)}});
    }
  }
}

void shift_checks(Suite& s, int n, int samples) {
  for (int m = 2; m + 1 <= n; ++m)
    for (int t = 0; t < samples; ++t) {
      SliceWord w = s.random_word(m, 5);
      const int width = m + 1;
      for (bool inv : {false, true}) {
        SliceWord a = descending_braid(m, width, inv);
        std::string name = std::string(inv ? "w b" : "w a") + idx(m) + " = " + (inv ? "b" : "a") + idx(m) + " S(w), w = [" + w.to_string() + "]";
        s.equal("shift", name, widen(w, width) * a, a * shift_word(w));
      }
    }
}

void fk_checks(Suite& s, int n) {
  for (int k = 1; k <= 2 && 2 * k <= n; ++k) {
    const std::string K = idx(k);
    const SliceWord f = fk_word(k, n);
    const SliceWord rf = rho_word(fk_word(k, 2 * k), 2 * k);
    const SliceWord rfw = widen(rf, n);
    s.equal("fk", "alpha(f" + K + ") = f" + K, alpha_word(f), f);
    s.equal("fk", "rho(f" + K + ") = f" + K, rfw, f);
    AlgebraElement value = normalize(f);
    s.flag("fk", "f" + K + " has one term of rank " + idx(n - 2 * k), value.terms().size() == 1 && rank_of(value) == n - 2 * k);
    s.flag("fk", "f" + K + " agrees with e1 e3 ... up to rank", rank_of(normalize(alternating_hooks(k, n))) == n - 2 * k);
    for (int i = 1; i < k; ++i) {
      const std::string I = idx(i), J = idx(2 * k - i);
      for (const auto& [label, base] : {std::pair{std::string("f"), f}, std::pair{std::string("rho(f)"), rfw}}) {
        const std::string F = label + K;
        s.equal("fk", "g" + I + " " + F + " = g" + J + " " + F, g(n, i) * base, g(n, 2 * k - i) * base);
        s.equal("fk", "e" + I + " " + F + " = e" + J + " " + F, e(n, i) * base, e(n, 2 * k - i) * base);
        s.equal("fk", F + " g" + I + " = " + F + " g" + J, base * g(n, i), base * g(n, 2 * k - i));
        s.equal("fk", F + " e" + I + " = " + F + " e" + J, base * e(n, i), base * e(n, 2 * k - i));
      }
    }
  }
}

void hj_checks(Suite& s, int n) {
  for (int j = 2; j + 2 <= n; ++j) {
    const SliceWord h = hj_word(j, n);
    const std::string J = idx(j), J1 = idx(j + 1);
    s.equal("hj", "g1 h" + J + " = g" + J1 + " h" + J, g(n, 1) * h, g(n, j + 1) * h);
    s.equal("hj", "e1 h" + J + " = e" + J1 + " h" + J, e(n, 1) * h, e(n, j + 1) * h);
  }
}

std::string perm_text(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i] + 1);
  return out + ")";
}

void perm_braid_checks(Suite& s, int n, int samples) {
  const int m = std::min(n, 4);
  for (const Permutation& p : all_permutations(m)) {
    SliceWord a = widen(perm_braid(p, SortStrategy::LeftFirst), n), b = widen(perm_braid(p, SortStrategy::RightFirst), n);
    if (a != b) s.equal("perm-braid", "two reduced words for " + perm_text(p), a, b);
  }

  std::vector<Permutation> picks;
  if (n <= 4) {
    picks = all_permutations(n);
  } else {
    for (int t = 0; t < samples; ++t) picks.push_back(s.random_permutation(n));
  }
  for (const Permutation& rho : picks) {
    for (int i = 1; i < n; ++i) {
      Permutation swap(static_cast<std::size_t>(n));
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[static_cast<std::size_t>(i - 1)], swap[static_cast<std::size_t>(i)]);
      const Permutation rho1 = compose(rho, swap);
      const std::string tag = "rho = " + perm_text(rho) + ", i = " + idx(i);
      if (rho[static_cast<std::size_t>(i - 1)] < rho[static_cast<std::size_t>(i)])
        s.equal("perm-braid", "b_rho1 = g_i b_rho, " + tag, perm_braid(rho1), g(n, i) * perm_braid(rho));
      else
        s.equal("perm-braid", "b_rho = g_i b_rho1, " + tag, perm_braid(rho), g(n, i) * perm_braid(rho1));

      if (rho[static_cast<std::size_t>(i)] == rho[static_cast<std::size_t>(i - 1)] + 1) {
        const int j = rho[static_cast<std::size_t>(i - 1)] + 1;
        const SliceWord b = perm_braid(rho);
        s.equal("perm-braid", "g_i b_rho = b_rho g_rho(i), " + tag, g(n, i) * b, b * g(n, j));
        s.equal("perm-braid", "e_i b_rho = b_rho e_rho(i), " + tag, e(n, i) * b, b * e(n, j));
      }
    }
  }
}

}  // namespace

VerifyReport verify_suite(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("verify needs n >= 2");
  VerifyReport report;
  report.n = n;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  Suite s(report, rng);
  relation_checks(s, n);
  shift_checks(s, n, 4);
  fk_checks(s, n);
  hj_checks(s, n);
  perm_braid_checks(s, n, 12);
  return report;
}

}  // namespace bmw
