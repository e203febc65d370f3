#include "filicenter/linalg.hpp"

namespace filicenter {

bool DenseEchelon::insert(std::vector<Rational> v) {
  if (v.size() != width_) throw std::invalid_argument("DenseEchelon: width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    Rational c = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = p; j < width_; ++j)
      if (sgn(row[j]) != 0) v[j] -= c * row[j];
  }
  std::size_t p = 0;
  while (p < width_ && sgn(v[p]) == 0) ++p;
  if (p == width_) return false;
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < width_; ++j) v[j] *= inv;
  // keep earlier rows reduced at the new pivot so later inserts stay correct
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational c = row[p];
    for (std::size_t j = p; j < width_; ++j)
      if (sgn(v[j]) != 0) row[j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  DenseEchelon e(rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace filicenter
