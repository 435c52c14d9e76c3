#pragma once

#include <map>
#include <vector>

#include "daha/algebra.hpp"

namespace daha {

template <class Key>
using SparseVec = std::map<Key, Rational>;

template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x) {
  for (const auto& [k, q] : x) {
    auto [it, fresh] = y.try_emplace(k, 0);
    it->second += a * q;
    if (it->second == 0) y.erase(it);
  }
}

// Incremental row echelon form over the rationals. Each row is normalized so
// that its smallest key (the pivot) has coefficient 1.
template <class Key>
class Echelon {
 public:
  SparseVec<Key> reduce(SparseVec<Key> v) const {
    for (const auto& [p, row] : rows_) {
      auto it = v.find(p);
      if (it == v.end()) continue;
      Rational a = -it->second;
      axpy(v, a, row);
    }
    return v;
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).empty(); }

  bool insert(const SparseVec<Key>& v) {
    SparseVec<Key> r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.begin()->second;
    for (auto& [k, q] : r) q /= lead;
    Key p = r.begin()->first;
    rows_.emplace(p, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, SparseVec<Key>>& rows() const { return rows_; }

  // Fully reduced basis, ordered by pivot.
  std::vector<SparseVec<Key>> rref() const {
    std::map<Key, SparseVec<Key>> out = rows_;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      for (auto& [p, row] : out) {
        if (!(p < it->first)) break;
        auto f = row.find(it->first);
        if (f == row.end()) continue;
        Rational a = -f->second;
        axpy(row, a, it->second);
      }
    }
    std::vector<SparseVec<Key>> basis;
    for (auto& [p, row] : out) basis.push_back(std::move(row));
    return basis;
  }

 private:
  std::map<Key, SparseVec<Key>> rows_;
};

// Coefficient vectors c with sum_k c_k images[k] = 0, as a basis of the kernel.
template <class Key>
std::vector<std::vector<Rational>> kernel_combinations(const std::vector<SparseVec<Key>>& images) {
  const std::size_t r = images.size();
  struct Row {
    SparseVec<Key> v;
    std::vector<Rational> comb;
  };
  std::map<Key, Row> rows;
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t k = 0; k < r; ++k) {
    Row cur{images[k], std::vector<Rational>(r, 0)};
    cur.comb[k] = 1;
    for (const auto& [p, row] : rows) {
      auto it = cur.v.find(p);
      if (it == cur.v.end()) continue;
      Rational a = -it->second;
      axpy(cur.v, a, row.v);
      for (std::size_t t = 0; t < r; ++t)
        if (row.comb[t] != 0) cur.comb[t] += a * row.comb[t];
    }
    if (cur.v.empty()) {
      kernel.push_back(std::move(cur.comb));
      continue;
    }
    Rational lead = cur.v.begin()->second;
    for (auto& [key, q] : cur.v) q /= lead;
    for (auto& q : cur.comb) q /= lead;
    Key p = cur.v.begin()->first;
    rows.emplace(p, std::move(cur));
  }
  return kernel;
}

}  // namespace daha
