#pragma once

#include <cstddef>
#include <vector>

#include "nlc/rational.hpp"

namespace nlc {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Reduced row echelon form: zero rows dropped, each pivot normalised to 1,
// pivot columns cleared above and below. The result is a canonical basis of
// the row space for a fixed column order.
struct RowEchelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t cols);

// Basis of {z : m z = 0}, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

// Incrementally maintained row space, used when vectors arrive one at a
// time and only the rank / membership is of interest.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}
  // Returns true when v enlarged the space.
  bool insert(RationalVector v);
  bool contains(RationalVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  void reduce(RationalVector& v) const;

  std::size_t cols_;
  RationalMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nlc
