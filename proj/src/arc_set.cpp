#include "mcrpc/arc_set.hpp"

#include <bit>
#include <string>

#include "mcrpc/errors.hpp"

namespace mcrpc {

ArcSet::ArcSet(int ring_size)
    : ring_size_(ring_size), words_((static_cast<std::size_t>(ring_size) + 63) / 64, 0) {}

void ArcSet::check_arc(int arc) const {
  if (arc < 1 || arc > ring_size_) {
    throw IndexError("arc " + std::to_string(arc) + " outside 1.." + std::to_string(ring_size_));
  }
}

void ArcSet::check_same_ring(const ArcSet& other) const {
  if (other.ring_size_ != ring_size_) {
    throw InvalidInstanceError("arc sets on rings of size " + std::to_string(ring_size_) +
                               " and " + std::to_string(other.ring_size_));
  }
}

void ArcSet::clear_padding() {
  if (int tail = ring_size_ % 64; tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

void ArcSet::insert(int arc) {
  check_arc(arc);
  auto bit = static_cast<std::size_t>(arc - 1);
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

bool ArcSet::contains(int arc) const {
  check_arc(arc);
  auto bit = static_cast<std::size_t>(arc - 1);
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

bool ArcSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool ArcSet::full() const { return size() == ring_size_; }

int ArcSet::size() const {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count;
}

bool ArcSet::intersects(const ArcSet& other) const {
  check_same_ring(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & other.words_[k]) return true;
  }
  return false;
}

bool ArcSet::is_subset_of(const ArcSet& other) const {
  check_same_ring(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

ArcSet ArcSet::complement() const {
  ArcSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_padding();
  return out;
}

ArcSet ArcSet::operator|(const ArcSet& other) const {
  check_same_ring(other);
  ArcSet out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] |= other.words_[k];
  return out;
}

ArcSet ArcSet::operator&(const ArcSet& other) const {
  check_same_ring(other);
  ArcSet out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
  return out;
}

bool ArcSet::is_proper_path() const {
  if (empty() || full()) return false;
  // A single run has exactly one arc whose predecessor is missing.
  int starts = 0;
  for (int arc = 1; arc <= ring_size_; ++arc) {
    int prev = arc == 1 ? ring_size_ : arc - 1;
    if (contains(arc) && !contains(prev)) ++starts;
  }
  return starts == 1;
}

std::vector<int> ArcSet::arcs() const {
  std::vector<int> out;
  for (int arc = 1; arc <= ring_size_; ++arc) {
    if (contains(arc)) out.push_back(arc);
  }
  return out;
}

}  // namespace mcrpc
