#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <iterator>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

inline constexpr int kMaxEnumerationN = 13;

/// Permutation of {1..n} in one-line notation (one-based values).
class Perm {
 public:
  static Perm identity(int n);
  /// Validates that `image` is a bijection on {1..n}.
  static Perm from_image(std::vector<int> image);
  /// "2413" (one digit per entry, n <= 9) or "2,4,1,3".
  static Perm parse(std::string_view text);

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  [[nodiscard]] std::span<const int> image() const { return image_; }
  /// pi(i) for one-based i.
  [[nodiscard]] int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// Statistics of one permutation. Descent positions are 1..n-1 and are
/// stored as a bitmask (bit i <=> i is a descent).
struct PermStats {
  int des = 0;
  int exc = 0;
  int fix = 0;
  int maj = 0;
  std::uint32_t des_mask = 0;

  [[nodiscard]] std::vector<int> des_set() const;
  friend bool operator==(const PermStats&, const PermStats&) = default;
};

/// Single left-to-right pass over a one-line image.
inline PermStats compute_stats(std::span<const int> image) {
  PermStats st;
  const int n = static_cast<int>(image.size());
  for (int i = 1; i <= n; ++i) {
    const int v = image[static_cast<std::size_t>(i - 1)];
    if (v > i) {
      ++st.exc;
    } else if (v == i) {
      ++st.fix;
    }
    if (i < n && v > image[static_cast<std::size_t>(i)]) {
      ++st.des;
      st.maj += i;
      st.des_mask |= 1u << i;
    }
  }
  return st;
}

inline PermStats stats(const Perm& p) { return compute_stats(p.image()); }

Perm inverse(const Perm& p);
/// Writes the inverse of `image` into `out` (same length).
inline void invert_into(std::span<const int> image, std::span<int> out) {
  for (std::size_t i = 0; i < image.size(); ++i) {
    out[static_cast<std::size_t>(image[i] - 1)] = static_cast<int>(i) + 1;
  }
}

inline bool is_derangement(const Perm& p) { return stats(p).fix == 0; }

/// All S in {lo..hi} with no two consecutive integers, including the empty
/// set; ordered by size, then lexicographically. lo > hi is the empty interval.
std::vector<std::vector<int>> stable_subsets(int lo, int hi);
/// Membership test for a descent bitmask against the same family.
bool is_stable_subset(std::uint32_t mask, int lo, int hi);

/// Lexicographic stream over S_n, 1 <= n <= 13.
///
///   for (const Perm& p : Permutations(4)) ...
class Permutations {
 public:
  explicit Permutations(int n);

  class iterator {
   public:
    using value_type = Perm;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;
    using reference = const Perm&;
    using pointer = const Perm*;
    iterator() = default;
    const Perm& operator*() const { return current_; }
    const Perm* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class Permutations;
    explicit iterator(int n);
    Perm current_ = Perm::identity(0);
    std::vector<int> buffer_;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(n_); }
  [[nodiscard]] iterator end() const { return iterator(); }

 private:
  int n_;
};

void check_enumeration_range(int n);

/// Worker count: EULERLAB_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

/// Folds `visit(acc, image, stats)` over S_n. The work is split by the first
/// image entry into n partitions, each enumerated lexicographically into its
/// own copy of `init`; partition results are merged in order of the first
/// entry, so the result does not depend on the thread count.
///
/// Throws identity_violation if some permutation has maj < exc.
template <class Acc, class Visit, class Merge>
Acc fold_permutations(int n, const Acc& init, Visit visit, Merge merge) {
  check_enumeration_range(n);
  std::vector<Acc> parts(static_cast<std::size_t>(n), init);
  std::atomic<int> next_part{0};
  std::atomic<bool> maj_violation{false};
  auto work = [&] {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int part = next_part++; part < n; part = next_part++) {
      const int first = part + 1;
      image[0] = first;
      for (int i = 1, v = 1; i < n; ++v) {
        if (v != first) image[static_cast<std::size_t>(i++)] = v;
      }
      Acc& acc = parts[static_cast<std::size_t>(part)];
      do {
        const PermStats st = compute_stats(image);
        if (st.maj < st.exc) maj_violation = true;
        visit(acc, std::span<const int>(image), st);
      } while (std::next_permutation(image.begin() + 1, image.end()));
    }
  };
  const unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (maj_violation) {
    throw identity_violation("enumeration of S_" + std::to_string(n) + " found maj < exc");
  }
  Acc result = std::move(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) merge(result, std::move(parts[i]));
  return result;
}

}  // namespace eulerlab
