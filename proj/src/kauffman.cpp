#include "bmw/kauffman.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace bmw {

RingElem dubrovnik(const SliceWord& w) { return close_diagram(w); }

RingElem dubrovnik(const AlgebraElement& x) {
  RingElem total;
  for (const auto& [c, v] : x.terms()) total += v * close_diagram(canonical_word(c));
  return total;
}

int closure_components(const SliceWord& w) { return trace_diagram(PartialClosure{w, w.strands()}).loops; }

GramMatrix gram_matrix(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("negative strand count");
  if (n > max_n)
    throw std::out_of_range("gram matrix for n=" + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
  GramMatrix a;
  a.n = n;
  a.index = enumerate_connectors(n);
  std::vector<SliceWord> words;
  for (const Connector& c : a.index) words.push_back(canonical_word(c));
  for (const SliceWord& wc : words) {
    std::vector<RingElem> row;
    for (const SliceWord& wd : words) row.push_back(close_diagram(wc * wd));
    a.entries.push_back(std::move(row));
  }
  return a;
}

namespace {

// Fraction-free elimination; every division is exact in an integral domain.
template <class Poly>
Poly bareiss(std::vector<std::vector<Poly>> m) {
  const std::size_t size = m.size();
  if (size == 0) return Poly(1);
  bool negate = false;
  Poly previous(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < size && m[swap][k].is_zero()) ++swap;
      if (swap == size) return Poly(0);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      m[i][k] = Poly(0);
    }
    previous = m[k][k];
  }
  Poly det = m[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace

DeltaPoly determinant(std::vector<std::vector<DeltaPoly>> m) { return bareiss(std::move(m)); }
LaurentLZ determinant(std::vector<std::vector<LaurentLZ>> m) { return bareiss(std::move(m)); }

GramCertificate gram_certificate(const GramMatrix& a, int full_det_max_n) {
  GramCertificate cert;
  cert.n = a.n;
  const std::size_t size = a.index.size();
  std::vector<std::vector<DeltaPoly>> specialised(size, std::vector<DeltaPoly>(size));
  cert.pattern_ok = true;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      DeltaPoly e = spec_brauer(a.entries[i][j]);
      specialised[i][j] = e;
      const Connector& c = a.index[i];
      const Connector& d = a.index[j];
      int components = closure_components(canonical_word(c) * canonical_word(d));
      bool mirror = d == c.mirror();
      bool ok = e == DeltaPoly::monomial(components) && components <= a.n && ((components == a.n) == mirror);
      if (!ok) {
        cert.pattern_ok = false;
        cert.pattern_violations.push_back(c.to_string() + " x " + d.to_string() + ": e = " + e.to_string() +
                                          ", components = " + std::to_string(components));
      }
    }
  cert.specialized_det = determinant(specialised);
  cert.delta_n2_coeff = cert.specialized_det.coefficient(a.n * a.n);
  cert.top_degree = a.n * static_cast<int>(size);
  cert.top_coeff = cert.specialized_det.coefficient(cert.top_degree);
  cert.det_nonzero = !cert.specialized_det.is_zero();

  if (a.n <= full_det_max_n) {
    std::vector<std::vector<LaurentLZ>> embedded(size, std::vector<LaurentLZ>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) embedded[i][j] = embed_laurent(a.entries[i][j]);
    cert.full_det_nonzero = !determinant(std::move(embedded)).is_zero();
  }
  return cert;
}

namespace {

nlohmann::json certificate_json(const GramCertificate& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["pattern_ok"] = c.pattern_ok;
  j["pattern_violations"] = c.pattern_violations;
  j["specialized_det"] = c.specialized_det.to_string();
  j["delta_n2_coeff"] = c.delta_n2_coeff.get_str();
  j["top_degree"] = c.top_degree;
  j["top_coeff"] = c.top_coeff.get_str();
  j["det_nonzero"] = c.det_nonzero;
  j["full_det_nonzero"] = c.full_det_nonzero ? nlohmann::json(*c.full_det_nonzero) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string GramCertificate::to_json() const { return certificate_json(*this).dump(2); }

std::string gram_to_json(const GramMatrix& a, const GramCertificate& cert) {
  nlohmann::json j;
  j["n"] = a.n;
  j["index"] = nlohmann::json::array();
  for (const Connector& c : a.index) j["index"].push_back(c.to_string());
  j["matrix"] = nlohmann::json::array();
  for (const auto& row : a.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const RingElem& e : row) r.push_back(e.to_string());
    j["matrix"].push_back(std::move(r));
  }
  j["certificate"] = certificate_json(cert);
  return j.dump(2);
}

}  // namespace bmw
