#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace drinfeld::linalg {

// Row-major dense matrix over F_p.
struct MatFp {
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 2;
  std::vector<std::uint32_t> a;

  MatFp() = default;
  MatFp(std::size_t r, std::size_t c, std::uint32_t prime)
      : rows(r), cols(c), p(prime), a(r * c, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Basis of the right null space {x : M x = 0}, each vector of length cols.
std::vector<std::vector<std::uint32_t>> null_space(MatFp m);

// One solution of M x = rhs, or nullopt if inconsistent.
std::optional<std::vector<std::uint32_t>> solve(MatFp m, std::vector<std::uint32_t> rhs);

std::size_t rank(MatFp m);

}  // namespace drinfeld::linalg
