#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multireg {

/// An element of Z^r. Used for degrees, twists and points of regions.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t r, int fill = 0) : v_(r, fill) {}
  MultiDegree(std::initializer_list<int> xs) : v_(xs) {}
  explicit MultiDegree(std::vector<int> xs) : v_(std::move(xs)) {}

  static MultiDegree zero(std::size_t r) { return MultiDegree(r, 0); }
  static MultiDegree ones(std::size_t r) { return MultiDegree(r, 1); }
  static MultiDegree unit(std::size_t r, std::size_t i) {
    MultiDegree e(r);
    e.v_.at(i) = 1;
    return e;
  }

  std::size_t rank() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& coords() const { return v_; }

  /// |v| = sum of coordinates.
  int total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

  /// Sum of the positive coordinates.
  int positive_part_sum() const {
    int s = 0;
    for (int x : v_) s += std::max(x, 0);
    return s;
  }

  bool is_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
  }
  bool is_strictly_positive() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x > 0; });
  }

  /// Componentwise partial order.
  bool leq(const MultiDegree& o) const {
    check_rank(o);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] > o.v_[i]) return false;
    return true;
  }

  MultiDegree operator+(const MultiDegree& o) const {
    check_rank(o);
    MultiDegree r(*this);
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
  }
  MultiDegree operator-(const MultiDegree& o) const {
    check_rank(o);
    MultiDegree r(*this);
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
    return r;
  }
  MultiDegree operator-() const {
    MultiDegree r(*this);
    for (int& x : r.v_) x = -x;
    return r;
  }
  MultiDegree& operator+=(const MultiDegree& o) { return *this = *this + o; }
  MultiDegree& operator-=(const MultiDegree& o) { return *this = *this - o; }

  friend MultiDegree max(const MultiDegree& a, const MultiDegree& b) {
    a.check_rank(b);
    MultiDegree r(a);
    for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = std::max(a.v_[i], b.v_[i]);
    return r;
  }
  friend MultiDegree min(const MultiDegree& a, const MultiDegree& b) {
    a.check_rank(b);
    MultiDegree r(a);
    for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = std::min(a.v_[i], b.v_[i]);
    return r;
  }

  bool operator==(const MultiDegree& o) const = default;
  /// Lexicographic order, only for use as a sort/map key.
  bool operator<(const MultiDegree& o) const { return v_ < o.v_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

private:
  void check_rank(const MultiDegree& o) const {
    if (o.v_.size() != v_.size()) throw std::invalid_argument("multidegree rank mismatch");
  }

  std::vector<int> v_;
};

struct MultiDegreeHash {
  std::size_t operator()(const MultiDegree& d) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : d.coords()) h = (h ^ std::size_t(std::uint32_t(x))) * 1099511628211ull;
    return h;
  }
};

/// A closed box [lo, hi] of multidegrees.
struct DegreeBox {
  MultiDegree lo;
  MultiDegree hi;

  bool contains(const MultiDegree& p) const { return lo.leq(p) && p.leq(hi); }

  /// All points in lexicographic order (first coordinate slowest).
  std::vector<MultiDegree> points() const {
    std::vector<MultiDegree> out;
    if (!lo.leq(hi)) return out;
    MultiDegree cur = lo;
    const std::size_t r = lo.rank();
    while (true) {
      out.push_back(cur);
      std::size_t i = r;
      while (i > 0) {
        --i;
        if (cur[i] < hi[i]) {
          ++cur[i];
          for (std::size_t j = i + 1; j < r; ++j) cur[j] = lo[j];
          break;
        }
        if (i == 0) return out;
      }
      if (r == 0) return out;
    }
  }
};

} // namespace multireg
