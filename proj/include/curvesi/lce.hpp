#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace curvesi {

/// Longest-common-extension queries on a fixed text in O(1) after
/// O(N log N) preprocessing: suffix array by prefix doubling, Kasai LCP,
/// sparse-table range minimum.
class LceIndex {
 public:
  LceIndex() = default;

  explicit LceIndex(std::span<const std::uint32_t> text) : n_(text.size()) {
    if (n_ == 0) return;
    build_suffix_array(text);
    build_lcp(text);
    build_sparse_table();
  }

  std::size_t size() const { return n_; }

  /// Length of the longest common prefix of the suffixes starting at i and j.
  std::size_t lce(std::size_t i, std::size_t j) const {
    if (i == j) return n_ - i;
    std::size_t ri = rank_[i], rj = rank_[j];
    if (ri > rj) std::swap(ri, rj);
    // min of lcp_[ri+1 .. rj]
    const std::size_t lo = ri + 1, len = rj - ri;
    const unsigned level = static_cast<unsigned>(std::bit_width(len) - 1);
    return std::min(table_[level][lo], table_[level][rj + 1 - (std::size_t{1} << level)]);
  }

 private:
  void build_suffix_array(std::span<const std::uint32_t> text) {
    sa_.resize(n_);
    rank_.assign(text.begin(), text.end());
    std::iota(sa_.begin(), sa_.end(), 0);
    std::vector<std::size_t> tmp(n_);
    for (std::size_t k = 1;; k <<= 1) {
      auto key = [&](std::size_t i) {
        return std::pair<std::size_t, std::size_t>(rank_[i], i + k < n_ ? rank_[i + k] + 1 : 0);
      };
      std::sort(sa_.begin(), sa_.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
      tmp[sa_[0]] = 0;
      for (std::size_t i = 1; i < n_; ++i) tmp[sa_[i]] = tmp[sa_[i - 1]] + (key(sa_[i - 1]) < key(sa_[i]) ? 1 : 0);
      rank_.swap(tmp);
      if (rank_[sa_[n_ - 1]] == n_ - 1) break;
    }
  }

  void build_lcp(std::span<const std::uint32_t> text) {
    lcp_.assign(n_, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (rank_[i] == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa_[rank_[i] - 1];
      while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h]) ++h;
      lcp_[rank_[i]] = h;
      if (h > 0) --h;
    }
  }

  void build_sparse_table() {
    const unsigned levels = static_cast<unsigned>(std::bit_width(n_));
    table_.assign(levels, {});
    table_[0] = lcp_;
    for (unsigned l = 1; l < levels; ++l) {
      const std::size_t span = std::size_t{1} << l;
      table_[l].resize(n_ - span + 1);
      for (std::size_t i = 0; i + span <= n_; ++i)
        table_[l][i] = std::min(table_[l - 1][i], table_[l - 1][i + span / 2]);
    }
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> sa_, rank_, lcp_;
  std::vector<std::vector<std::size_t>> table_;
};

}  // namespace curvesi
