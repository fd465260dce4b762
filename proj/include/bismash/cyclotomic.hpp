#pragma once

// Exact elements of Q(ζ_N).
//
// A value of conductor N is stored as rational coefficients c_0..c_{φ(N)-1}
// in the power basis 1, ζ_N, ..., ζ_N^{φ(N)-1}, i.e. reduced modulo the N-th
// cyclotomic polynomial. Operands of different conductors are embedded into
// the lcm conductor before combining.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bismash/error.hpp"

namespace bismash {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

/// Integer coefficients of Φ_N, lowest degree first. Cached process-wide.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Φ_n = (x^n - 1) / prod_{d | n, d < n} Φ_d
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);  // monic
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      const std::int64_t c = num[i];
      q[i - dd] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(q);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

inline std::uint32_t euler_phi(std::uint32_t n) { return static_cast<std::uint32_t>(cyclotomic_polynomial(n).size() - 1); }

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(std::int64_t v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT: implicit by design of a scalar
  Cyclotomic(Rational v) : conductor_(1), coeffs_{std::move(v)} {}      // NOLINT

  /// ζ_N^k.
  static Cyclotomic zeta(std::uint32_t conductor, std::int64_t k) {
    if (conductor == 0) throw InvalidInput("cyclotomic conductor must be positive");
    std::vector<Rational> powers(conductor, Rational(0));
    const auto m = static_cast<std::int64_t>(conductor);
    powers[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
    return from_powers(conductor, std::move(powers));
  }

  /// Σ powers[k] ζ_N^k for k = 0..N-1, reduced.
  static Cyclotomic from_powers(std::uint32_t conductor, std::vector<Rational> powers) {
    Cyclotomic c;
    c.conductor_ = conductor;
    c.coeffs_ = reduce(conductor, std::move(powers));
    return c;
  }

  std::uint32_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  bool is_rational_integer() const { return is_rational() && boost::multiprecision::denominator(coeffs_[0]) == 1; }

  Rational to_rational() const {
    if (!is_rational()) throw ConsistencyError("cyclotomic value " + to_string() + " is not rational");
    return coeffs_[0];
  }

  std::int64_t to_integer() const {
    if (!is_rational_integer()) throw ConsistencyError("cyclotomic value " + to_string() + " is not an integer");
    return static_cast<std::int64_t>(boost::multiprecision::numerator(coeffs_[0]));
  }

  /// Same value expressed with conductor `m` (a multiple of the current one).
  Cyclotomic embed(std::uint32_t m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw InvalidInput("embedding conductor must be a multiple");
    const std::uint32_t step = m / conductor_;
    std::vector<Rational> powers(m, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[k * step] = coeffs_[k];
    return from_powers(m, std::move(powers));
  }

  /// Complex conjugate: ζ ↦ ζ^{-1}.
  Cyclotomic conj() const {
    std::vector<Rational> powers(conductor_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[(conductor_ - k) % conductor_] += coeffs_[k];
    return from_powers(conductor_, std::move(powers));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      const auto m = std::lcm(a.conductor_, b.conductor_);
      return a.embed(m) + b.embed(m);
    }
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      if (a.conductor_ == 1) return b.scaled(a.coeffs_[0]);
      if (b.conductor_ == 1) return a.scaled(b.coeffs_[0]);
      const auto m = std::lcm(a.conductor_, b.conductor_);
      return a.embed(m) * b.embed(m);
    }
    if (a.conductor_ == 1) return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
    const std::uint32_t n = a.conductor_;
    std::vector<Rational> powers(n, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        powers[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return from_powers(n, std::move(powers));
  }

  Cyclotomic scaled(const Rational& s) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Rational& s) {
    if (s == 0) throw InvalidInput("division by zero");
    return a.scaled(1 / s);
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      const auto m = std::lcm(a.conductor_, b.conductor_);
      return a.embed(m).coeffs_ == b.embed(m).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_rational()) return coeffs_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeffs_[k].str() << ")";
      if (k > 0) os << "*z" << conductor_ << "^" << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

 private:
  // reduce a length-N power vector modulo Φ_N
  static std::vector<Rational> reduce(std::uint32_t n, std::vector<Rational> powers) {
    const auto& phi = detail::cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = powers.size(); i-- > deg;) {
      if (powers[i] == 0) continue;
      const Rational c = powers[i];
      for (std::size_t j = 0; j <= deg; ++j) {
        if (phi[j] != 0) powers[i - deg + j] -= c * phi[j];
      }
    }
    powers.resize(deg);
    if (powers.empty()) powers.emplace_back(0);
    return powers;
  }

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace bismash
