#pragma once

// Connected components of the epsilon-graph on unit directions modulo +-1
// (two directions are adjacent when their antipodal distance is below eps).
// Directions are bucketed on a grid of cells whose diameter is below eps, so
// every cell is a clique and only nearby cells need pairwise tests.

#include "sinfty/projective.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sinfty {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

/// Flip v so its first nonzero coordinate is positive.
inline std::vector<double> canonical_direction(std::vector<double> v) {
  for (double x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (double& y : v) y = -y;
    break;
  }
  return v;
}

struct ClusterSummary {
  std::vector<std::size_t> members;  // indices into the input
  std::vector<double> centroid;      // unit, canonical sign
  double extent = 0;                 // max distance from a member to the centroid
};

struct Clustering {
  std::vector<std::size_t> labels;  // cluster index per input direction
  std::vector<ClusterSummary> clusters;
  std::size_t count() const { return clusters.size(); }
};

inline Clustering component_count(const std::vector<std::vector<double>>& directions, double eps) {
  if (!(eps > 0 && eps < 2)) throw std::invalid_argument("component_count: eps must lie in (0, 2)");
  Clustering out;
  const std::size_t N = directions.size();
  if (N == 0) return out;
  const std::size_t dim = directions[0].size();
  std::vector<std::vector<double>> pts;
  pts.reserve(N);
  for (const auto& d : directions) {
    if (d.size() != dim) throw std::invalid_argument("component_count: mixed dimensions");
    pts.push_back(canonical_direction(d));
  }

  const double cell = eps / std::sqrt(double(dim)) * 0.999;
  const int reach = static_cast<int>(std::ceil(eps / cell));
  using Key = std::vector<int>;
  auto key_of = [&](const std::vector<double>& v) {
    Key k(dim);
    for (std::size_t i = 0; i < dim; ++i) k[i] = static_cast<int>(std::floor(v[i] / cell));
    return k;
  };
  std::map<Key, std::size_t> cell_index;
  std::vector<std::vector<std::size_t>> cells;
  std::vector<Key> keys;
  for (std::size_t i = 0; i < N; ++i) {
    Key k = key_of(pts[i]);
    auto [it, inserted] = cell_index.emplace(k, cells.size());
    if (inserted) {
      cells.emplace_back();
      keys.push_back(k);
    }
    cells[it->second].push_back(i);
  }

  UnionFind uf(cells.size());
  auto linked = [&](std::size_t a, std::size_t b) {
    for (std::size_t i : cells[a])
      for (std::size_t j : cells[b])
        if (antipodal_distance(pts[i], pts[j]) < eps) return true;
    return false;
  };
  // offsets in [-reach, reach]^dim
  std::vector<Key> offsets;
  {
    Key o(dim, -reach);
    while (true) {
      offsets.push_back(o);
      std::size_t k = 0;
      while (k < dim && o[k] == reach) o[k++] = -reach;
      if (k == dim) break;
      ++o[k];
    }
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    // neighbours of the cell and of its antipode
    Key anti = key_of([&] {
      std::vector<double> v = pts[cells[c][0]];
      for (double& x : v) x = -x;
      return v;
    }());
    for (const Key* base : {&keys[c], &anti}) {
      // the antipodal base key comes from one member only, so allow one more cell of slack
      const int slack = base == &anti ? 2 : 1;
      for (const auto& o : offsets) {
        double gap2 = 0;
        for (std::size_t i = 0; i < dim; ++i) {
          double g = std::max(0, std::abs(o[i]) - slack) * cell;
          gap2 += g * g;
        }
        if (gap2 >= eps * eps) continue;
        Key k(dim);
        for (std::size_t i = 0; i < dim; ++i) k[i] = (*base)[i] + o[i];
        auto it = cell_index.find(k);
        if (it == cell_index.end() || it->second == c) continue;
        if (uf.find(c) == uf.find(it->second)) continue;
        if (linked(c, it->second)) uf.unite(c, it->second);
      }
    }
  }

  // labels in order of first appearance
  std::map<std::size_t, std::size_t> root_label;
  out.labels.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t r = uf.find(cell_index[key_of(pts[i])]);
    auto [it, inserted] = root_label.emplace(r, root_label.size());
    if (inserted) out.clusters.emplace_back();
    out.labels[i] = it->second;
    out.clusters[it->second].members.push_back(i);
  }
  for (auto& cl : out.clusters) {
    const auto& ref = pts[cl.members.front()];
    std::vector<double> sum(dim, 0.0);
    for (std::size_t i : cl.members) {
      double dot = 0;
      for (std::size_t k = 0; k < dim; ++k) dot += pts[i][k] * ref[k];
      double s = dot < 0 ? -1.0 : 1.0;
      for (std::size_t k = 0; k < dim; ++k) sum[k] += s * pts[i][k];
    }
    double norm = 0;
    for (double x : sum) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0)
      for (double& x : sum) x /= norm;
    else
      sum = ref;
    cl.centroid = canonical_direction(sum);
    for (std::size_t i : cl.members) cl.extent = std::max(cl.extent, antipodal_distance(pts[i], cl.centroid));
  }
  return out;
}

}  // namespace sinfty
