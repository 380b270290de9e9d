#include "drinfeld/linalg.hpp"

#include "drinfeld/fp_poly.hpp"

namespace drinfeld::linalg {

namespace {

// Reduce m to row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(MatFp& m) {
  const std::uint32_t p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const std::uint32_t inv = fppoly::mod_inverse(m.at(row, col), p);
    for (std::size_t j = col; j < m.cols; ++j) {
      m.at(row, j) = static_cast<std::uint32_t>((std::uint64_t)m.at(row, j) * inv % p);
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const std::uint64_t f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = static_cast<std::uint32_t>(
            (m.at(i, j) + (p - 1ull) * f % p * m.at(row, j)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> null_space(MatFp m) {
  const std::uint32_t p = m.p;
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint32_t coef = m.at(r, free_col);
      if (coef) v[pivots[r]] = (p - coef) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve(MatFp m, std::vector<std::uint32_t> rhs) {
  // Augment and eliminate.
  MatFp aug(m.rows, m.cols + 1, m.p);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i] % m.p;
  }
  const auto pivots = echelon(aug);
  // Inconsistent if a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<std::uint32_t> x(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;
}

std::size_t rank(MatFp m) { return echelon(m).size(); }

}  // namespace drinfeld::linalg
