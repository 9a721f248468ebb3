#pragma once

#include <cstdint>
#include <vector>

namespace pbd {

/// Fixed-universe bitset over point ids 0..n-1.  Designs here stay small
/// (a few hundred points), so a flat word array beats std::set by a wide
/// margin in the closure inner loop.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  /// Returns true if the bit was newly set.
  bool set(int i) {
    std::uint64_t& w = words_[i >> 6];
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (w & m) return false;
    w |= m;
    ++count_;
    return true;
  }

  int count() const { return count_; }

  bool contains(const PointSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool operator==(const PointSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  static PointSet of(int universe, const std::vector<int>& points) {
    PointSet s(universe);
    for (int p : points) s.set(p);
    return s;
  }

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pbd
