#include "quiverforge/linalg.hpp"

#include "quiverforge/error.hpp"

namespace quiverforge {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [col, c] : x) {
    auto it = y.find(col);
    if (it == y.end()) {
      y.emplace(col, a * c);
    } else {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec r;
  if (a.is_zero()) return r;
  for (const auto& [col, c] : x) r.emplace(col, c * a);
  return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    axpy(v, -it->second, row->second.v);
    it = v.upper_bound(col);
  }
  return v;
}

bool Echelon::insert(const SparseVec& v) {
  const std::size_t index = inserted_++;
  SparseVec combo;
  if (track_) combo.emplace(index, Scalar::one(field_));
  SparseVec w = v;
  auto it = w.begin();
  while (it != w.end()) {
    const std::size_t col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Scalar f = -it->second;
    if (track_) axpy(combo, f, row->second.combo);
    axpy(w, f, row->second.v);
    it = w.upper_bound(col);
  }
  if (w.empty()) return false;
  const Scalar lead_inv = w.begin()->second.inverse();
  const std::size_t pivot = w.begin()->first;
  rows_.emplace(pivot, Row{scaled(w, lead_inv), track_ ? scaled(combo, lead_inv) : SparseVec{}});
  return true;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& target) const {
  if (!track_) throw InternalError("Echelon::solve requires tracking");
  SparseVec w = target;
  SparseVec combo;
  auto it = w.begin();
  while (it != w.end()) {
    const std::size_t col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) return std::nullopt;
    const Scalar f = it->second;
    axpy(combo, f, row->second.combo);
    axpy(w, -f, row->second.v);
    it = w.upper_bound(col);
  }
  return combo;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> r;
  r.reserve(rows_.size());
  for (const auto& [col, row] : rows_) r.push_back(col);
  return r;
}

}  // namespace quiverforge
