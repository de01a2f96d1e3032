#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "quiverforge/scalar.hpp"

namespace quiverforge {

// Sparse vector: column index -> nonzero coefficient.
using SparseVec = std::map<std::size_t, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a*x, zeros dropped
SparseVec scaled(const SparseVec& x, const Scalar& a);

// Incremental row echelon form over an exact field. Each stored row has its
// pivot at its lowest column with pivot coefficient 1. When tracking is on,
// every row remembers which combination of inserted vectors produced it, so
// solve() can return a preimage in terms of the original generators.
class Echelon {
 public:
  explicit Echelon(Field field, bool track = false) : field_(field), track_(track) {}

  // Inserts v; returns true if it increased the rank.
  bool insert(const SparseVec& v);

  // Residue of v after eliminating every pivot column.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Coefficients c_k (k = insertion index) with sum c_k g_k = target, or nullopt.
  // Requires tracking.
  std::optional<SparseVec> solve(const SparseVec& target) const;

  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  const Field& field() const { return field_; }

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };

  Field field_;
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot column
};

}  // namespace quiverforge
