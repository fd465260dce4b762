#pragma once

// Explicitly enumerated permutation groups. Elements are kept sorted in the
// canonical (lexicographic one-line) order, so an element's index doubles as
// its canonical rank.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bismash/error.hpp"
#include "bismash/permutation.hpp"

namespace bismash {

using BigInt = boost::multiprecision::cpp_int;

/// Default hard cap on enumerated group order (10!).
inline constexpr std::size_t kDefaultOrderBound = 3628800;

class PermutationGroup {
 public:
  using index_type = std::uint32_t;

  PermutationGroup() : PermutationGroup(1) {}

  /// Trivial group of the given degree.
  explicit PermutationGroup(std::size_t degree) : degree_(degree), elements_{Permutation(degree)} { build_index(); }

  /// Breadth-first closure of the generators. Throws InvalidInput when the
  /// generators disagree on degree or the order exceeds `bound`.
  static PermutationGroup generate(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t bound = kDefaultOrderBound) {
    for (const auto& g : generators) {
      if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    }
    std::unordered_set<Permutation> seen;
    std::deque<Permutation> frontier;
    Permutation id(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
      Permutation cur = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : generators) {
        Permutation next = cur * g;
        if (seen.insert(next).second) {
          if (seen.size() > bound) {
            throw InvalidInput("group order exceeds enumeration bound " + std::to_string(bound));
          }
          frontier.push_back(std::move(next));
        }
      }
    }
    PermutationGroup grp;
    grp.degree_ = degree;
    grp.generators_ = std::move(generators);
    grp.elements_.assign(seen.begin(), seen.end());
    std::sort(grp.elements_.begin(), grp.elements_.end());
    grp.build_index();
    return grp;
  }

  /// Wraps a list of elements already known to form a group (e.g. a
  /// stabilizer). Closure is verified; a small generating set is chosen
  /// greedily in canonical order.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements) {
    PermutationGroup grp;
    grp.degree_ = degree;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    grp.elements_ = std::move(elements);
    if (grp.elements_.empty() || !grp.elements_.front().is_identity()) {
      throw InvalidInput("element list does not contain the identity");
    }
    grp.build_index();
    for (const auto& a : grp.elements_) {
      if (a.degree() != degree) throw InvalidInput("element degree mismatch");
      if (!grp.contains(a.inverse())) throw InvalidInput("element list not closed under inverse");
      for (const auto& b : grp.elements_) {
        if (!grp.contains(a * b)) throw InvalidInput("element list not closed under composition");
      }
    }
    // greedy generators: add an element whenever it is outside the span so far
    std::unordered_set<Permutation> span{Permutation(degree)};
    for (const auto& a : grp.elements_) {
      if (span.count(a)) continue;
      grp.generators_.push_back(a);
      span = generate(degree, grp.generators_).as_set();
    }
    return grp;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& operator[](index_type i) const { return elements_[i]; }
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  std::optional<index_type> find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  index_type index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidInput("element " + p.to_cycles() + " is not a group member");
    return it->second;
  }

  bool is_subgroup_of(const PermutationGroup& other) const {
    if (degree_ != other.degree_) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const auto& e) { return other.contains(e); });
  }

  std::unordered_set<Permutation> as_set() const { return {elements_.begin(), elements_.end()}; }

  /// Points moved by at least one element, ascending.
  std::vector<int> support() const {
    std::vector<int> pts;
    for (std::size_t pt = 1; pt <= degree_; ++pt) {
      for (const auto& e : elements_) {
        if (e(pt) != pt) {
          pts.push_back(static_cast<int>(pt));
          break;
        }
      }
    }
    return pts;
  }

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  void build_index() {
    index_.clear();
    index_.reserve(elements_.size());
    for (index_type i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, index_type> index_;
};

inline PermutationGroup enumerate_group(std::size_t degree, std::vector<Permutation> generators,
                                        std::size_t bound = kDefaultOrderBound) {
  return PermutationGroup::generate(degree, std::move(generators), bound);
}

/// The n-cycle (1, 2, ..., n) acting on degree points (points above n fixed).
inline Permutation long_cycle(std::size_t n, std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n + 1);
  return Permutation::from_images(std::span<const int>(img));
}

/// Sym({1..m}) embedded in degree `degree` (points above m fixed).
inline PermutationGroup symmetric_group(std::size_t m, std::size_t degree, std::size_t bound = kDefaultOrderBound) {
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(parse_cycles("(1 2)", degree));
    if (m >= 3) gens.push_back(long_cycle(m, degree));
  }
  return enumerate_group(degree, std::move(gens), bound);
}

inline PermutationGroup symmetric_group(std::size_t n) { return symmetric_group(n, n); }

/// C_n = <(1, 2, ..., n)> of degree n.
inline PermutationGroup cyclic_group(std::size_t n) {
  return enumerate_group(n, n >= 2 ? std::vector{long_cycle(n, n)} : std::vector<Permutation>{});
}

/// i_L: number of elements squaring to the identity, identity included.
inline std::uint64_t count_involutions(const PermutationGroup& g) {
  return static_cast<std::uint64_t>(
      std::count_if(g.elements().begin(), g.elements().end(), [](const auto& w) { return (w * w).is_identity(); }));
}

/// i_n = i_{n-1} + (n-1) i_{n-2}, i_1 = 1, i_2 = 2.
inline BigInt involution_recursion(int n) {
  if (n < 1) throw InvalidInput("involution_recursion requires n >= 1");
  BigInt prev = 1, cur = 1;  // i_0, i_1
  for (int k = 2; k <= n; ++k) {
    BigInt next = cur + BigInt(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace bismash
