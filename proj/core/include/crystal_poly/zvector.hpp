#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace crystal_poly {

/// Finitely supported vector (..., a_2, a_1), stored densely as [a_1, a_2, ...]
/// with trailing zeros trimmed, so equality and hashing are canonical.
class ZVector {
 public:
  ZVector() = default;
  explicit ZVector(std::vector<int> flat);

  /// a_r for r >= 1; zero beyond the stored range.
  int operator[](int r) const {
    return r >= 1 && r <= static_cast<int>(v_.size()) ? v_[r - 1] : 0;
  }
  void add(int r, int delta);
  int max_pos() const { return static_cast<int>(v_.size()); }
  long total() const;
  bool is_zero() const { return v_.empty(); }
  bool nonnegative() const;
  const std::vector<int>& flat() const { return v_; }

  friend bool operator==(const ZVector& a, const ZVector& b) { return a.v_ == b.v_; }
  friend bool operator<(const ZVector& a, const ZVector& b);

 private:
  void trim();
  std::vector<int> v_;
};

struct ZVectorHash {
  std::size_t operator()(const ZVector& z) const noexcept;
};

}  // namespace crystal_poly
