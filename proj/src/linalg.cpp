#include "multireg/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace multireg {

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, const PrimeField& k) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  if (rows.empty()) return 0;
  // Short rows with early pivots first keeps fill-in down.
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) {
    if (a.front().first != b.front().first) return a.front().first < b.front().first;
    return a.size() < b.size();
  });

  std::vector<SparseRow> pivots;
  std::vector<std::int32_t> pivot_of(ncols, -1);
  std::vector<Coeff> acc(ncols, 0);
  std::vector<char> queued(ncols, 0);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  auto touch = [&](std::uint32_t c) {
    if (!queued[c]) {
      queued[c] = 1;
      heap.push(c);
    }
  };

  for (const auto& row : rows) {
    for (const auto& [c, v] : row) {
      acc[c] = v;
      touch(c);
    }
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      if (acc[c] == 0) {
        heap.pop();
        queued[c] = 0;
        continue;
      }
      if (pivot_of[c] < 0) break;
      heap.pop();
      queued[c] = 0;
      Coeff f = k.neg(acc[c]);
      for (const auto& [pc, pv] : pivots[pivot_of[c]]) {
        acc[pc] = k.add(acc[pc], k.mul(f, pv));
        touch(pc);
      }
      acc[c] = 0;
    }
    if (heap.empty()) continue;
    SparseRow piv;
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      queued[c] = 0;
      if (acc[c]) piv.push_back({c, acc[c]});
      acc[c] = 0;
    }
    Coeff inv = k.inv(piv.front().second);
    for (auto& e : piv) e.second = k.mul(e.second, inv);
    pivot_of[piv.front().first] = std::int32_t(pivots.size());
    pivots.push_back(std::move(piv));
  }
  return pivots.size();
}

std::size_t dense_rank(std::vector<std::vector<Coeff>>& m, const PrimeField& k) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    Coeff inv = k.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Coeff f = k.neg(k.mul(m[r][c], inv));
      for (std::size_t j = c; j < cols; ++j) m[r][j] = k.add(m[r][j], k.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

} // namespace multireg
