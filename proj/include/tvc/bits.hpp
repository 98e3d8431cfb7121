#pragma once

// Dynamic fixed-width bitset sized once per solve; just the handful of
// operations the solvers need.

#include <bit>
#include <cstdint>
#include <vector>

namespace tvc::detail {

class DynBits {
public:
  DynBits() = default;
  explicit DynBits(int nbits) : w_((nbits + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& x : w_) x = 0;
  }

  void or_with(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  // every bit of `need` present here?
  bool covers(const DynBits& need) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (need.w_[i] & ~w_[i]) return false;
    return true;
  }

  // need subset of (a | b), without materializing the union
  static bool covers_or(const DynBits& need, const DynBits& a, const DynBits& b) {
    for (std::size_t i = 0; i < need.w_.size(); ++i)
      if (need.w_[i] & ~(a.w_[i] | b.w_[i])) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  // popcount of need & ~this
  int missing_from(const DynBits& need) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(need.w_[i] & ~w_[i]);
    return c;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  bool intersects(const DynBits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  friend bool operator==(const DynBits&, const DynBits&) = default;

private:
  std::vector<std::uint64_t> w_;
};

} // namespace tvc::detail
