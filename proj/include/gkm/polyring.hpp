#pragma once

#include "gkm/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

/// Coefficient ring: the integers (p == 0) or the prime field Z_p.
struct Ring {
  std::uint64_t p = 0;

  static Ring integers() { return {}; }
  static Ring mod(std::uint64_t prime);

  bool is_integers() const { return p == 0; }
  std::string name() const { return p == 0 ? "Z" : "Z_" + std::to_string(p); }
  bool operator==(const Ring&) const = default;
};

class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An element of Z^k. Edge labels are stored sign-normalised
/// (first nonzero coordinate positive); signed lifts are derived on demand.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  /// gcd of the coordinates (0 for the zero weight).
  std::int64_t content() const;
  bool divisible_by(std::uint64_t p) const;
  Weight normalized() const;
  Weight operator-() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string to_string() const;
};

/// True iff a - b is an integer multiple of c (c nonzero).
bool weight_congruent(const Weight& a, const Weight& b, const Weight& c);
/// True iff a and b are linearly independent over Q.
bool linearly_independent(const Weight& a, const Weight& b);

using Exponent = std::vector<int>;

/// Monomials of total degree d in k variables, graded lex with x1 > ... > xk.
/// Negative degrees have no monomials.
const std::vector<Exponent>& monomials(std::size_t nvars, int degree);
std::size_t monomial_count(std::size_t nvars, int degree);
std::size_t monomial_index(std::size_t nvars, const Exponent& e);

std::string variable_name(std::size_t nvars, std::size_t i);

/// Homogeneous polynomial with dense coefficients in the fixed monomial order.
/// Cohomological degree is twice the polynomial degree. A polynomial of
/// degree -1 is the zero element of the shifted summand H^{-2}.
class GradedPoly {
public:
  GradedPoly() = default;
  GradedPoly(Ring ring, std::size_t nvars, int degree);

  static GradedPoly constant(Ring ring, std::size_t nvars, const Int& c);
  static GradedPoly from_coeffs(Ring ring, std::size_t nvars, int degree, IntVector coeffs);
  static GradedPoly monomial(Ring ring, std::size_t nvars, const Exponent& e, const Int& c = 1);

  Ring ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int cohomological_degree() const { return 2 * degree_; }
  const IntVector& coeffs() const { return coeffs_; }
  const Int& coeff(std::size_t idx) const { return coeffs_[idx]; }
  Int coeff(const Exponent& e) const;

  bool is_zero() const;

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator-() const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly scaled(const Int& c) const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  bool operator==(const GradedPoly& o) const;

  std::string to_string() const;

private:
  void require_compatible(const GradedPoly& o, bool same_degree) const;
  void normalize();

  Ring ring_;
  std::size_t nvars_ = 0;
  int degree_ = 0;
  IntVector coeffs_;
};

GradedPoly mul(const GradedPoly& a, const GradedPoly& b);

/// sum_i w_i x_i in the given ring.
GradedPoly linear_from_weight(const Weight& w, Ring ring);

/// q with q * l_w == f exactly, or nullopt. Over Z the quotient must have
/// integer coefficients; over Z_p the reduced linear form must be nonzero.
std::optional<GradedPoly> divide_by_linear(const GradedPoly& f, const Weight& w);

GradedPoly reduce_mod_p(const GradedPoly& f, std::uint64_t p);

/// f == g modulo the linear form of w in f's ring. When the form vanishes
/// (Z_p with p | w), the condition is f == g.
bool congruent_mod_weight(const GradedPoly& f, const GradedPoly& g, const Weight& w);

/// Finite sum of homogeneous components, indexed by polynomial degree.
class PolySeries {
public:
  PolySeries(Ring ring, std::size_t nvars);
  static PolySeries one(Ring ring, std::size_t nvars);
  /// 1 + l_w
  static PolySeries one_plus_linear(const Weight& w, Ring ring);

  Ring ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  int top_degree() const { return static_cast<int>(components_.size()) - 1; }
  GradedPoly component(int degree) const;

  PolySeries operator*(const PolySeries& o) const;
  PolySeries operator-(const PolySeries& o) const;
  bool operator==(const PolySeries& o) const;

private:
  Ring ring_;
  std::size_t nvars_;
  std::vector<GradedPoly> components_;
};

}  // namespace gkm
