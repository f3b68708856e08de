#pragma once

#include "gkm/polyring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

class ExpressionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Sparse, possibly inhomogeneous integer polynomial.
using SparsePoly = std::map<Exponent, Int>;

/// A graph class under construction: one sparse polynomial per vertex.
using SparseClass = std::vector<SparsePoly>;

/// Parses "x^2 - 3*x*y + 2*y^2" style input. Variables are named as in
/// variable_name(nvars, i).
SparsePoly parse_polynomial(std::string_view text, std::size_t nvars);

/// Parses and checks homogeneity. The zero polynomial takes `zero_degree`.
GradedPoly parse_graded(std::string_view text, std::size_t nvars, Ring ring = Ring::integers(),
                        int zero_degree = 0);

GradedPoly to_graded(const SparsePoly& p, std::size_t nvars, Ring ring, int zero_degree = 0);
SparsePoly to_sparse(const GradedPoly& p);

/// Evaluates an expression whose identifiers are variables or names from
/// `classes`. Polynomials broadcast to every vertex.
SparseClass evaluate_class_expression(std::string_view text, std::size_t nvars, std::size_t nvertices,
                                      const std::map<std::string, SparseClass>& classes);

}  // namespace gkm
