#pragma once

#include "esnorm/det_theory.hpp"

namespace esnorm {

/// Scales a d x d invertible matrix into SL(d, q): returns lambda * M
/// where lambda is the canonical smallest d-th root of det(M)^-1, so the
/// result has determinant exactly 1. Throws Singular for det = 0 and
/// NoRoot when no such lambda exists.
Matrix scale_to_sl(const Matrix& m, std::uint64_t d);

/// Classification-driven scaling of a tower generator: returns the matrix
/// unscaled when its determinant is known to be 1, scales by the inverse
/// of the classification witness when a root exists, and throws NoRoot
/// without ever touching a d x d determinant otherwise.
Matrix scale_tower_to_sl(const GeneratorId& id);

}  // namespace esnorm
