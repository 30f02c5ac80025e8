#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mcrpc::detail {

/// Symmetric 0/1 matrix stored as packed rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t size = 0)
      : size_(size), stride_((size + 63) / 64), words_(size * stride_, 0) {}

  std::size_t size() const { return size_; }
  std::size_t stride() const { return stride_; }

  void connect(std::size_t a, std::size_t b) {
    words_[a * stride_ + b / 64] |= std::uint64_t{1} << (b % 64);
    words_[b * stride_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return (words_[a * stride_ + b / 64] >> (b % 64)) & 1U;
  }
  const std::uint64_t* row(std::size_t a) const { return words_.data() + a * stride_; }

 private:
  std::size_t size_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

template <class W>
struct CliqueSearchResult {
  std::vector<std::size_t> members;  // ascending vertex order
  W weight{};
  bool stopped_early = false;
};

// Branch and bound for a maximum-weight clique. Vertices are visited in index
// order with the include branch first, so the first optimum reached is the
// lexicographically smallest one; later ties are never recorded. All weights
// must be strictly positive.
//
// lower_bound is the weight of some known clique: subtrees that cannot reach
// it are cut. When stop_at is set the search returns as soon as a clique of at
// least that weight is found (the result is then only a witness of >= stop_at).
template <class W>
class CliqueSearch {
 public:
  CliqueSearch(std::span<const W> weights, const BitMatrix& adjacency, W lower_bound,
               std::optional<W> stop_at)
      : weights_(weights),
        adjacency_(adjacency),
        lower_bound_(std::move(lower_bound)),
        stop_at_(std::move(stop_at)),
        stride_(adjacency.stride()),
        buffer_((weights.size() + 2) * (stride_ == 0 ? 1 : stride_), 0) {}

  CliqueSearchResult<W> run() {
    result_ = {};
    path_.clear();
    const std::size_t size = weights_.size();
    if (size == 0) return result_;
    std::fill(buffer_.begin(), buffer_.end(), 0);
    std::uint64_t* root = buffer_.data();
    for (std::size_t v = 0; v < size; ++v) root[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(0, W{0});
    return result_;
  }

 private:
  bool cut(const W& bound) const {
    // Ties with the incumbent are lexicographically later, so they go too.
    return bound < lower_bound_ || bound <= result_.weight;
  }

  W colour_bound(const std::uint64_t* candidates) {
    // Greedy partition into independent sets; each class adds its heaviest.
    scratch_uncoloured_.assign(candidates, candidates + stride_);
    W bound{0};
    while (any(scratch_uncoloured_.data())) {
      scratch_avail_ = scratch_uncoloured_;
      W heaviest{0};
      while (any(scratch_avail_.data())) {
        std::size_t v = lowest(scratch_avail_.data());
        if (heaviest < weights_[v]) heaviest = weights_[v];
        scratch_uncoloured_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* nb = adjacency_.row(v);
        for (std::size_t k = 0; k < stride_; ++k) scratch_avail_[k] &= ~nb[k];
        scratch_avail_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      }
      bound += heaviest;
    }
    return bound;
  }

  bool any(const std::uint64_t* bits) const {
    for (std::size_t k = 0; k < stride_; ++k) {
      if (bits[k]) return true;
    }
    return false;
  }

  std::size_t lowest(const std::uint64_t* bits) const {
    for (std::size_t k = 0; k < stride_; ++k) {
      if (bits[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(bits[k]));
    }
    return weights_.size();
  }

  void expand(std::size_t depth, const W& current) {
    std::uint64_t* candidates = buffer_.data() + depth * stride_;
    std::uint64_t* next = candidates + stride_;

    W remaining{0};
    std::size_t count = 0;
    for (std::size_t k = 0; k < stride_; ++k) {
      for (std::uint64_t bits = candidates[k]; bits; bits &= bits - 1) {
        remaining += weights_[k * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        ++count;
      }
    }
    if (cut(current + remaining)) return;
    if (count > 8 && cut(current + colour_bound(candidates))) return;

    for (std::size_t k = 0; k < stride_; ++k) {
      while (candidates[k]) {
        std::size_t v = k * 64 + static_cast<std::size_t>(std::countr_zero(candidates[k]));
        if (cut(current + remaining)) return;
        candidates[k] &= candidates[k] - 1;

        W with_v = current + weights_[v];
        path_.push_back(v);
        if (result_.weight < with_v) {
          result_.weight = with_v;
          result_.members = path_;
          if (stop_at_ && !(result_.weight < *stop_at_)) {
            result_.stopped_early = true;
            return;
          }
        }
        // Later candidates adjacent to v.
        const std::uint64_t* nb = adjacency_.row(v);
        bool nonempty = false;
        for (std::size_t m = 0; m < stride_; ++m) {
          next[m] = (m < k ? 0 : candidates[m]) & nb[m];
          nonempty = nonempty || next[m] != 0;
        }
        if (nonempty) {
          expand(depth + 1, with_v);
          if (result_.stopped_early) return;
        }
        path_.pop_back();
        remaining -= weights_[v];
      }
    }
  }

  std::span<const W> weights_;
  const BitMatrix& adjacency_;
  W lower_bound_;
  std::optional<W> stop_at_;
  std::size_t stride_;
  std::vector<std::uint64_t> buffer_;
  std::vector<std::uint64_t> scratch_uncoloured_;
  std::vector<std::uint64_t> scratch_avail_;
  std::vector<std::size_t> path_;
  CliqueSearchResult<W> result_;
};

}  // namespace mcrpc::detail
