#pragma once

#include <vector>

#include <gmpxx.h>

namespace indvar {
namespace linalg {

/// Basis of the nullspace of the matrix (rows x cols) over Q, computed by
/// exact Gaussian elimination. Deterministic: reduced row echelon form with
/// free columns in ascending order, free coordinate set to 1.
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> rows,
                                              std::size_t cols);

}  // namespace linalg
}  // namespace indvar
