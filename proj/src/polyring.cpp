#include "gkm/polyring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace gkm {

Ring Ring::mod(std::uint64_t prime) {
  require_prime(prime);
  return Ring{prime};
}

// ---- Weight ------------------------------------------------------------

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Weight::content() const {
  std::int64_t g = 0;
  for (auto c : coords) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

bool Weight::divisible_by(std::uint64_t p) const {
  return std::all_of(coords.begin(), coords.end(), [p](std::int64_t c) {
    return c % static_cast<std::int64_t>(p) == 0;
  });
}

Weight Weight::normalized() const {
  for (auto c : coords) {
    if (c > 0) return *this;
    if (c < 0) return -*this;
  }
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] += o.coords[i];
  return out;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

bool weight_congruent(const Weight& a, const Weight& b, const Weight& c) {
  if (c.is_zero()) throw std::invalid_argument("congruence modulo the zero weight");
  const Weight diff = a - b;
  std::size_t lead = 0;
  while (c.coords[lead] == 0) ++lead;
  if (diff.coords[lead] % c.coords[lead] != 0) return false;
  const std::int64_t lambda = diff.coords[lead] / c.coords[lead];
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (diff.coords[i] != lambda * c.coords[i]) return false;
  return true;
}

bool linearly_independent(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      const __int128 minor = static_cast<__int128>(a.coords[i]) * b.coords[j] -
                             static_cast<__int128>(a.coords[j]) * b.coords[i];
      if (minor != 0) return true;
    }
  return false;
}

// ---- monomials -----------------------------------------------------------

namespace {

struct MonomialTable {
  std::vector<Exponent> list;
  std::map<Exponent, std::size_t> index;
};

void enumerate(std::size_t nvars, int degree, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    enumerate(nvars, degree - e, pos + 1, cur, out);
  }
}

const MonomialTable& table(std::size_t nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, std::unique_ptr<MonomialTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) {
    slot = std::make_unique<MonomialTable>();
    if (degree >= 0 && nvars > 0) {
      Exponent cur(nvars, 0);
      enumerate(nvars, degree, 0, cur, slot->list);
      for (std::size_t i = 0; i < slot->list.size(); ++i) slot->index.emplace(slot->list[i], i);
    }
  }
  return *slot;
}

}  // namespace

const std::vector<Exponent>& monomials(std::size_t nvars, int degree) { return table(nvars, degree).list; }

std::size_t monomial_count(std::size_t nvars, int degree) { return monomials(nvars, degree).size(); }

std::size_t monomial_index(std::size_t nvars, const Exponent& e) {
  const int degree = std::accumulate(e.begin(), e.end(), 0);
  const auto& t = table(nvars, degree);
  auto it = t.index.find(e);
  if (it == t.index.end()) throw std::invalid_argument("monomial_index: bad exponent");
  return it->second;
}

std::string variable_name(std::size_t nvars, std::size_t i) {
  static const char* small[] = {"x", "y", "z"};
  if (nvars <= 3) return small[i];
  return "x" + std::to_string(i + 1);
}

// ---- GradedPoly ----------------------------------------------------------

GradedPoly::GradedPoly(Ring ring, std::size_t nvars, int degree)
    : ring_(ring), nvars_(nvars), degree_(degree), coeffs_(monomial_count(nvars, degree)) {
  if (nvars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  if (degree < -1) throw std::invalid_argument("negative polynomial degree");
}

GradedPoly GradedPoly::constant(Ring ring, std::size_t nvars, const Int& c) {
  GradedPoly out(ring, nvars, 0);
  out.coeffs_[0] = c;
  out.normalize();
  return out;
}

GradedPoly GradedPoly::from_coeffs(Ring ring, std::size_t nvars, int degree, IntVector coeffs) {
  GradedPoly out(ring, nvars, degree);
  if (coeffs.size() != out.coeffs_.size()) throw DimensionError("coefficient vector has wrong length");
  out.coeffs_ = std::move(coeffs);
  out.normalize();
  return out;
}

GradedPoly GradedPoly::monomial(Ring ring, std::size_t nvars, const Exponent& e, const Int& c) {
  const int degree = std::accumulate(e.begin(), e.end(), 0);
  GradedPoly out(ring, nvars, degree);
  out.coeffs_[monomial_index(nvars, e)] = c;
  out.normalize();
  return out;
}

void GradedPoly::normalize() {
  if (ring_.is_integers()) return;
  const Int p(static_cast<unsigned long>(ring_.p));
  for (auto& c : coeffs_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
}

Int GradedPoly::coeff(const Exponent& e) const {
  const int d = std::accumulate(e.begin(), e.end(), 0);
  if (d != degree_) return 0;
  return coeffs_[monomial_index(nvars_, e)];
}

bool GradedPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

void GradedPoly::require_compatible(const GradedPoly& o, bool same_degree) const {
  if (ring_ != o.ring_) throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
  if (nvars_ != o.nvars_) throw RingMismatch("variable count mismatch");
  if (same_degree && degree_ != o.degree_)
    throw std::invalid_argument("degree mismatch: " + std::to_string(degree_) + " vs " +
                                std::to_string(o.degree_));
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_compatible(o, true);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_compatible(o, true);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  GradedPoly out = *this;
  out += o;
  return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  GradedPoly out = *this;
  out -= o;
  return out;
}

GradedPoly GradedPoly::operator-() const { return scaled(-1); }

GradedPoly GradedPoly::scaled(const Int& c) const {
  GradedPoly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  require_compatible(o, false);
  GradedPoly out(ring_, nvars_, degree_ + o.degree_);
  const auto& ma = monomials(nvars_, degree_);
  const auto& mb = monomials(nvars_, o.degree_);
  Exponent e(nvars_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = ma[i][v] + mb[j][v];
      out.coeffs_[monomial_index(nvars_, e)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  return ring_ == o.ring_ && nvars_ == o.nvars_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

std::string GradedPoly::to_string() const {
  std::ostringstream os;
  const auto& mons = monomials(nvars_, degree_);
  bool first = true;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (mons[i][v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(nvars_, v);
      if (mons[i][v] > 1) mono += '^' + std::to_string(mons[i][v]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << mono;
    }
  }
  if (first) return "0";
  return os.str();
}

GradedPoly mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly linear_from_weight(const Weight& w, Ring ring) {
  GradedPoly out(ring, w.rank(), 1);
  IntVector c(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) c[i] = static_cast<long>(w.coords[i]);
  // degree-1 monomials are x1, ..., xk in order
  return GradedPoly::from_coeffs(ring, w.rank(), 1, std::move(c));
}

std::optional<GradedPoly> divide_by_linear(const GradedPoly& f, const Weight& w) {
  if (w.rank() != f.nvars()) throw RingMismatch("weight rank does not match variable count");
  const Ring ring = f.ring();
  const GradedPoly ell = linear_from_weight(w, ring);
  if (ell.is_zero()) throw std::invalid_argument("division by a vanishing linear form");
  const std::size_t k = f.nvars();
  if (f.degree() <= 0) {
    if (f.is_zero()) return GradedPoly(ring, k, f.degree() - 1 < -1 ? -1 : f.degree() - 1);
    return std::nullopt;
  }
  std::size_t lead = 0;
  while (ell.coeff(lead) == 0) ++lead;
  const Int lead_coeff = ell.coeff(lead);
  Int lead_inv;
  if (!ring.is_integers()) {
    lead_inv = static_cast<unsigned long>(mod_inverse(mod_reduce(lead_coeff, ring.p), ring.p));
  }

  // Division by a single form: monomials are visited in decreasing order, so
  // the current index is always the leading term of the remainder.
  IntVector rem = f.coeffs();
  GradedPoly q(ring, k, f.degree() - 1);
  IntVector qc(q.coeffs().size());
  const auto& mons = monomials(k, f.degree());
  const Int p(static_cast<unsigned long>(ring.p));
  Exponent shifted(k);
  for (std::size_t idx = 0; idx < mons.size(); ++idx) {
    if (!ring.is_integers()) mpz_fdiv_r(rem[idx].get_mpz_t(), rem[idx].get_mpz_t(), p.get_mpz_t());
    if (rem[idx] == 0) continue;
    if (mons[idx][lead] == 0) return std::nullopt;
    Int c;
    if (ring.is_integers()) {
      if (!mpz_divisible_p(rem[idx].get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
      c = rem[idx] / lead_coeff;
    } else {
      c = rem[idx] * lead_inv;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    shifted = mons[idx];
    --shifted[lead];
    qc[monomial_index(k, shifted)] = c;
    for (std::size_t v = 0; v < k; ++v) {
      if (w.coords[v] == 0) continue;
      ++shifted[v];
      rem[monomial_index(k, shifted)] -= c * static_cast<long>(w.coords[v]);
      --shifted[v];
    }
  }
  return GradedPoly::from_coeffs(ring, k, f.degree() - 1, std::move(qc));
}

GradedPoly reduce_mod_p(const GradedPoly& f, std::uint64_t p) {
  if (!f.ring().is_integers()) throw RingMismatch("reduce_mod_p expects an integer polynomial");
  return GradedPoly::from_coeffs(Ring::mod(p), f.nvars(), f.degree(), f.coeffs());
}

bool congruent_mod_weight(const GradedPoly& f, const GradedPoly& g, const Weight& w) {
  const GradedPoly diff = f - g;
  if (linear_from_weight(w, f.ring()).is_zero()) return diff.is_zero();
  return divide_by_linear(diff, w).has_value();
}

// ---- PolySeries ----------------------------------------------------------

PolySeries::PolySeries(Ring ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

PolySeries PolySeries::one(Ring ring, std::size_t nvars) {
  PolySeries s(ring, nvars);
  s.components_.push_back(GradedPoly::constant(ring, nvars, 1));
  return s;
}

PolySeries PolySeries::one_plus_linear(const Weight& w, Ring ring) {
  PolySeries s = one(ring, w.rank());
  s.components_.push_back(linear_from_weight(w, ring));
  return s;
}

GradedPoly PolySeries::component(int degree) const {
  if (degree >= 0 && degree < static_cast<int>(components_.size())) return components_[degree];
  return GradedPoly(ring_, nvars_, degree < -1 ? -1 : degree);
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_) throw RingMismatch("series ring mismatch");
  PolySeries out(ring_, nvars_);
  if (components_.empty() || o.components_.empty()) return out;
  const int top = top_degree() + o.top_degree();
  for (int d = 0; d <= top; ++d) out.components_.emplace_back(ring_, nvars_, d);
  for (int i = 0; i <= top_degree(); ++i)
    for (int j = 0; j <= o.top_degree(); ++j) out.components_[i + j] += components_[i] * o.components_[j];
  return out;
}

PolySeries PolySeries::operator-(const PolySeries& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_) throw RingMismatch("series ring mismatch");
  PolySeries out(ring_, nvars_);
  const int top = std::max(top_degree(), o.top_degree());
  for (int d = 0; d <= top; ++d) out.components_.push_back(component(d) - o.component(d));
  return out;
}

bool PolySeries::operator==(const PolySeries& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_) return false;
  const int top = std::max(top_degree(), o.top_degree());
  for (int d = 0; d <= top; ++d)
    if (!(component(d) == o.component(d))) return false;
  return true;
}

}  // namespace gkm
