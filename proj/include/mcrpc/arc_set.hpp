#pragma once

#include <cstdint>
#include <vector>

namespace mcrpc {

/// Subset of the n unit arcs of a ring. Arc k (1-based) is (k, k mod n + 1).
class ArcSet {
 public:
  explicit ArcSet(int ring_size = 0);

  int ring_size() const { return ring_size_; }

  void insert(int arc);
  bool contains(int arc) const;

  bool empty() const;
  bool full() const;
  int size() const;

  bool intersects(const ArcSet& other) const;
  bool is_subset_of(const ArcSet& other) const;

  ArcSet complement() const;
  ArcSet operator|(const ArcSet& other) const;
  ArcSet operator&(const ArcSet& other) const;

  /// True iff the set is a single nonempty run of consecutive arcs around the
  /// ring that does not wrap all the way round.
  bool is_proper_path() const;

  std::vector<int> arcs() const;

  bool operator==(const ArcSet& other) const = default;

 private:
  void check_arc(int arc) const;
  void check_same_ring(const ArcSet& other) const;
  void clear_padding();

  int ring_size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mcrpc
