#pragma once

// Permutations of {1, ..., n} in one-line notation, with cycle-notation
// parsing and printing.
//
// Composition convention: (p * q)(i) = p(q(i)), the right factor acts first.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bismash/error.hpp"

namespace bismash {

class Permutation {
 public:
  using point_type = std::uint16_t;

  Permutation() : images_{1} {}

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    if (degree == 0) throw InvalidInput("permutation degree must be positive");
    std::iota(images_.begin(), images_.end(), point_type{1});
  }

  /// From one-line notation: images[i] is the image of point i + 1.
  static Permutation from_images(std::span<const int> images) {
    const std::size_t n = images.size();
    if (n == 0) throw InvalidInput("permutation degree must be positive");
    std::vector<bool> seen(n + 1, false);
    Permutation p;
    p.images_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
        throw InvalidInput("one-line array is not a bijection on 1.." + std::to_string(n));
      }
      seen[v] = true;
      p.images_[i] = static_cast<point_type>(v);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    std::vector<int> v(images);
    return from_images(std::span<const int>(v));
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of a 1-based point.
  point_type operator()(std::size_t point) const { return images_[point - 1]; }

  std::span<const point_type> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i + 1) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i] - 1] = static_cast<point_type>(i + 1);
    return r;
  }

  /// Smallest k >= 1 with p^k = 1.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (auto len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
  }

  /// Cycle lengths (including fixed points) in weakly decreasing order.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j] - 1u) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  /// Disjoint cycles, each starting at its smallest point, ordered by that
  /// point; fixed points omitted. Identity prints as "()".
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i + 1) continue;
      out += '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j] - 1u) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Lexicographic on one-line arrays; degree breaks ties first.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(), b.images_.begin(),
                                                  b.images_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycles(); }

 private:
  std::vector<point_type> images_;
};

/// (p * q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
  }
  std::vector<int> img(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
  return Permutation::from_images(std::span<const int>(img));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? p.inverse() : p;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

/// Parses disjoint-cycle notation such as "(1 4)(2 5)(3 6)". Whitespace and
/// commas separate points; adjacent single digits inside a cycle with no
/// separator ("(12345)") are read one digit per point when the degree is
/// below 10. Unlisted points are fixed.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InvalidInput("permutation degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(degree + 1, false);

  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("malformed cycle text \"" + std::string(text) + "\": " + why);
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(std::string("unexpected character '") + text[i] + "'");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view token = text.substr(i, j - i);
      i = j;
      std::vector<int> points;
      if (token.size() > 1 && degree < 10) {
        for (char c : token) points.push_back(c - '0');
      } else {
        std::uint64_t v = 0;
        for (char c : token) {
          v = v * 10 + static_cast<std::uint64_t>(c - '0');
          if (v > degree) break;
        }
        points.push_back(static_cast<int>(std::min<std::uint64_t>(v, degree + 1)));
      }
      for (int pt : points) {
        if (pt < 1 || static_cast<std::size_t>(pt) > degree) {
          fail("point " + std::string(token) + " outside 1.." + std::to_string(degree));
        }
        if (used[pt]) fail("repeated point " + std::to_string(pt));
        used[pt] = true;
        cycle.push_back(pt);
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_images(std::span<const int>(img));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace bismash

template <>
struct std::hash<bismash::Permutation> : bismash::PermutationHash {};
