#include "eulerlab/perm.hpp"

#include <cstdlib>
#include <numeric>

namespace eulerlab {

Perm Perm::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Perm(std::move(image));
}

Perm Perm::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw usage_error("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Perm(std::move(image));
}

Perm Perm::parse(std::string_view text) {
  std::vector<int> image;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw usage_error("bad permutation '" + std::string(text) + "'");
      image.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string item(text.substr(start, end - start));
      try {
        image.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw usage_error("bad permutation '" + std::string(text) + "'");
      }
      start = end + 1;
    }
  }
  return from_image(std::move(image));
}

std::string Perm::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

std::vector<int> PermStats::des_set() const {
  std::vector<int> out;
  for (int i = 1; i < 32; ++i) {
    if (des_mask & (1u << i)) out.push_back(i);
  }
  return out;
}

Perm inverse(const Perm& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  invert_into(p.image(), out);
  return Perm::from_image(std::move(out));
}

std::vector<std::vector<int>> stable_subsets(int lo, int hi) {
  std::vector<std::vector<int>> out{{}};
  if (lo > hi) return out;
  const int width = hi - lo + 1;
  if (width > 30) throw usage_error("stable_subsets: interval too large");
  for (std::uint32_t mask = 1; mask < (1u << width); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<int> set;
    for (int i = 0; i < width; ++i) {
      if (mask & (1u << i)) set.push_back(lo + i);
    }
    out.push_back(std::move(set));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_stable_subset(std::uint32_t mask, int lo, int hi) {
  if (mask & (mask >> 1)) return false;
  if (lo > hi) return mask == 0;
  std::uint32_t allowed = 0;
  for (int i = lo; i <= hi; ++i) allowed |= 1u << i;
  return (mask & ~allowed) == 0;
}

void check_enumeration_range(int n) {
  if (n < 1 || n > kMaxEnumerationN) {
    throw usage_error("enumeration of S_n needs 1 <= n <= " + std::to_string(kMaxEnumerationN) +
                      ", got " + std::to_string(n));
  }
}

Permutations::Permutations(int n) : n_(n) { check_enumeration_range(n); }

Permutations::iterator::iterator(int n) : current_(Perm::identity(n)), done_(false) {}

Permutations::iterator& Permutations::iterator::operator++() {
  buffer_.assign(current_.image().begin(), current_.image().end());
  if (std::next_permutation(buffer_.begin(), buffer_.end())) {
    current_ = Perm::from_image(buffer_);
  } else {
    done_ = true;
  }
  return *this;
}

unsigned worker_count() {
  if (const char* env = std::getenv("EULERLAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace eulerlab
