#ifndef PERMCOH_PERMUTATION_HPP
#define PERMCOH_PERMUTATION_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "permcoh/registry.hpp"

namespace permcoh {

/// An element of the symmetric group in one-line notation. Internally
/// 0-based: the token at position i lands at position images[i]. Rendering
/// and the one_line factory use the 1-based convention `[3,1,2]`.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(static_cast<size_t>(n));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  /// From 1-based one-line images, e.g. one_line({3,1,2}).
  static Permutation one_line(std::vector<int> images) {
    Permutation p;
    p.img_.reserve(images.size());
    for (int v : images) p.img_.push_back(v - 1);
    p.validate();
    return p;
  }

  static Permutation from_zero_based(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    p.validate();
    return p;
  }

  /// The block transposition underlying beta on words of lengths m and k:
  /// the first m tokens move past the last k.
  static Permutation block_swap(int m, int k) {
    Permutation p;
    p.img_.resize(static_cast<size_t>(m + k));
    for (int i = 0; i < m; ++i) p.img_[static_cast<size_t>(i)] = i + k;
    for (int i = 0; i < k; ++i) p.img_[static_cast<size_t>(m + i)] = i;
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return p;
  }

  /// Monoidal sum: this acting on the first block, q on the second.
  Permutation block_sum(const Permutation& q) const {
    Permutation p;
    p.img_.reserve(img_.size() + q.img_.size());
    int n = degree();
    for (int v : img_) p.img_.push_back(v);
    for (int v : q.img_) p.img_.push_back(v + n);
    return p;
  }

  /// Composition "apply sigma first": (tau * sigma)(i) = tau(sigma(i)),
  /// matching the product [tau,1] o [sigma,1] = [tau sigma,1].
  friend Permutation operator*(const Permutation& tau, const Permutation& sigma) {
    if (tau.degree() != sigma.degree()) throw Error("permutation degree mismatch");
    Permutation p;
    p.img_.resize(tau.img_.size());
    for (int i = 0; i < tau.degree(); ++i)
      p.img_[static_cast<size_t>(i)] = tau(sigma(i));
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// +1 for even, -1 for odd, via merge-counted inversions.
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  bool even() const { return sign() == 1; }

  long inversions() const {
    std::vector<int> buf(img_);
    std::vector<int> tmp(buf.size());
    return merge_count(buf, tmp, 0, static_cast<long>(buf.size()));
  }

  /// 1-based bracket rendering, e.g. "[3,1,2]"; identity on 0 renders "[]".
  std::string str() const {
    std::string out = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(img_[i] + 1);
    }
    out += ']';
    return out;
  }

private:
  std::vector<int> img_;

  void validate() const {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
        throw Error("not a permutation in one-line notation");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  static long merge_count(std::vector<int>& a, std::vector<int>& tmp, long lo, long hi) {
    if (hi - lo <= 1) return 0;
    long mid = lo + (hi - lo) / 2;
    long count = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    long i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
      if (a[static_cast<size_t>(i)] <= a[static_cast<size_t>(j)]) {
        tmp[static_cast<size_t>(k++)] = a[static_cast<size_t>(i++)];
      } else {
        count += mid - i;
        tmp[static_cast<size_t>(k++)] = a[static_cast<size_t>(j++)];
      }
    }
    while (i < mid) tmp[static_cast<size_t>(k++)] = a[static_cast<size_t>(i++)];
    while (j < hi) tmp[static_cast<size_t>(k++)] = a[static_cast<size_t>(j++)];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
    return count;
  }
};

} // namespace permcoh

#endif
