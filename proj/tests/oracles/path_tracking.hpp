#pragma once

// Test-only oracle for space curves given by real parametrized branches:
// each branch is sampled densely (consecutive samples closer than `step`) and
// branches whose samples come within `tol` of each other are merged. The
// number of merged groups is the number of connected components of the
// union of the branches.

#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <numeric>
#include <vector>

namespace oracle {

using PointN = std::vector<double>;

struct Branch {
  std::function<PointN(double)> at;
  double t0 = 0;
  double t1 = 1;
};

class PathTracker {
 public:
  PathTracker(std::vector<Branch> branches, double step = 2e-3, double tol = 1e-2)
      : branches_(std::move(branches)), tol_(tol), parent_(branches_.size()) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t b = 0; b < branches_.size(); ++b) track(b, step);
    for (const auto& [cell, members] : grid_) {
      for (const auto& [b, p] : members) {
        for_neighbours(cell, [&](const std::vector<std::pair<std::size_t, PointN>>& other) {
          for (const auto& [c, q] : other) {
            if (c != b && dist(p, q) < tol_) unite(b, c);
          }
        });
      }
    }
  }

  std::size_t sample_count() const { return samples_; }

  int components() {
    int n = 0;
    for (std::size_t b = 0; b < parent_.size(); ++b) n += find(b) == b ? 1 : 0;
    return n;
  }

  // Group of the branch passing within tol of p, -1 if none does.
  int group_of(const PointN& p) {
    int found = -1;
    for_neighbours(cell_of(p), [&](const std::vector<std::pair<std::size_t, PointN>>& other) {
      for (const auto& [c, q] : other) {
        if (found < 0 && dist(p, q) < tol_) found = static_cast<int>(find(c));
      }
    });
    return found;
  }

 private:
  using Cell = std::vector<std::int64_t>;
  struct CellHash {
    std::size_t operator()(const Cell& c) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : c) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
      return h;
    }
  };

  static double dist(const PointN& a, const PointN& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }

  Cell cell_of(const PointN& p) const {
    Cell c;
    for (double v : p) c.push_back(static_cast<std::int64_t>(std::floor(v / tol_)));
    return c;
  }

  template <class F>
  void for_neighbours(const Cell& cell, F&& f) const {
    Cell probe = cell;
    const std::size_t n = cell.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        probe[i] = cell[i] + static_cast<std::int64_t>(c % 3) - 1;
        c /= 3;
      }
      auto it = grid_.find(probe);
      if (it != grid_.end()) f(it->second);
    }
  }

  void track(std::size_t b, double step) {
    const Branch& br = branches_[b];
    double t = br.t0, dt = (br.t1 - br.t0) / 1024;
    PointN p = br.at(t);
    add(b, p);
    while (t < br.t1) {
      double tn = std::min(br.t1, t + dt);
      PointN q = br.at(tn);
      while (dist(p, q) > step && tn - t > 1e-12) {
        dt /= 2;
        tn = t + dt;
        q = br.at(tn);
      }
      add(b, q);
      if (dist(p, q) < step / 4) dt *= 2;
      t = tn;
      p = std::move(q);
    }
  }

  void add(std::size_t b, const PointN& p) {
    grid_[cell_of(p)].emplace_back(b, p);
    ++samples_;
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::vector<Branch> branches_;
  double tol_;
  std::vector<std::size_t> parent_;
  std::unordered_map<Cell, std::vector<std::pair<std::size_t, PointN>>, CellHash> grid_;
  std::size_t samples_ = 0;
};

}  // namespace oracle
