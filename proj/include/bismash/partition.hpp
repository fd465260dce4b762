#pragma once

// Integer partitions, the hook length formula, and the Murnaghan–Nakayama
// rule for irreducible characters of symmetric groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bismash/error.hpp"
#include "bismash/group.hpp"

namespace bismash {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t length() const noexcept { return parts_.size(); }

  /// Conjugate (transposed) partition.
  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
      c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
    }
    return Partition(std::move(c));
  }

  /// "(3,1,1)"; the empty partition prints as "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of m, in reverse lexicographic order: (m), (m-1,1), ...
inline std::vector<Partition> partitions(int m) {
  if (m < 0) throw InvalidInput("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

/// Dimension of the S_{|λ|}-irrep labelled λ: |λ|! / Π hook lengths.
inline std::uint64_t hook_length_dimension(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  BigInt denom = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int arm = lambda.parts()[i] - j - 1;
      const int leg = conj.parts()[j] - static_cast<int>(i) - 1;
      denom *= arm + leg + 1;
    }
  }
  const BigInt dim = factorial(lambda.weight()) / denom;
  return static_cast<std::uint64_t>(dim);
}

namespace detail {

// β-set (first-column hook lengths) of λ with `len` beads: β_i = λ_i + len - 1 - i.
inline std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + len - 1 - i;
  return beta;
}

inline std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

inline std::int64_t mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos,
                                 std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<std::ptrdiff_t>(pos), mu.end());
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // removing an r-rim hook moves one bead from b to b - r; the leg length is
  // the number of beads strictly between
  const int r = mu[pos];
  const auto beta = beta_set(lambda);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    auto moved = beta;
    moved[i] = target;
    const std::int64_t sub = mn_recursive(from_beta(moved), mu, pos + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// χ^λ evaluated on the class of cycle type μ (Murnaghan–Nakayama).
/// Memoised process-wide; the cache is mutex-guarded.
inline std::int64_t mn_character(const Partition& lambda, std::vector<int> cycle_type) {
  const int w = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (w != lambda.weight()) {
    throw InvalidInput("weight mismatch: |λ| = " + std::to_string(lambda.weight()) + ", |μ| = " + std::to_string(w));
  }
  for (int c : cycle_type)
    if (c <= 0) throw InvalidInput("cycle type entries must be positive");
  std::sort(cycle_type.rbegin(), cycle_type.rend());

  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
  std::lock_guard lock(mu);
  return detail::mn_recursive(lambda.parts(), cycle_type, 0, memo);
}

}  // namespace bismash
