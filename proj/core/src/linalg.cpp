#include "indvar/linalg.hpp"

namespace indvar {
namespace linalg {

std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> rows,
                                              std::size_t cols) {
  for (auto& r : rows) r.resize(cols, mpq_class(0));

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    mpq_class inv = 1 / rows[rank][col];
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;

  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linalg
}  // namespace indvar
