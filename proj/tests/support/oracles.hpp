#pragma once

// Reference computations that share no code with the library's linear
// algebra or polynomial layers; they only read graph data.

#include "gkm/connection.hpp"
#include "gkm/gkmgraph.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace gkm::testing {

using QMatrix = std::vector<std::vector<mpq_class>>;

std::size_t rational_rank(QMatrix m);
std::size_t fp_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p);

/// Unique rational solution of d y = w when d has full column rank, checked
/// for integrality. Throws if d is rank deficient.
bool in_integer_image_full_rank(const QMatrix& d, const std::vector<mpq_class>& w);

/// rank_Z H^{2d}_T(G; Z) from the nullity of the divisibility system over Q.
std::size_t oracle_rank_z(const GkmGraph& g, int poly_degree);

/// dim H^{2d}_T(G; Z_p) from the nullity over F_p, corrected for the quotient
/// unknowns that multiplication by a vanishing label leaves free.
std::size_t oracle_dim_fp(const GkmGraph& g, int poly_degree, std::int64_t p);

/// Orientability by enumerating every closed walk of length up to
/// max(|V|, 2); this length covers a cycle basis.
bool oracle_orientable(const GkmGraph& g, const Connection& c);

/// True iff some prime p in {2,3,5,7} divides two labels meeting at a vertex.
bool oracle_adjacent_divisible(const GkmGraph& g);

}  // namespace gkm::testing
