#pragma once

#include <initializer_list>
#include <vector>

#include "ccschur/schur.hpp"

namespace ccschur::test {

inline Poly P(const FieldSpec& f, std::initializer_list<std::int64_t> c) {
  return Poly(f, std::vector<std::int64_t>(c));
}

inline Vec V(std::initializer_list<Residue> c) { return Vec(c); }

inline MatrixFq M(const FieldSpec& f, std::initializer_list<std::initializer_list<Residue>> rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.emplace_back(row);
  return MatrixFq(f, r.empty() ? 0 : r.front().size(), r);
}

}  // namespace ccschur::test
