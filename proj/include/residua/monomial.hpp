#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>

#include "residua/errors.hpp"

namespace residua {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a power product, stored inline.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(check_size(nvars)) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const int> exps) : nvars_(check_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e) {
    if (i >= nvars_) throw InvalidArgument("monomial index out of range");
    if (e < 0 || e > std::numeric_limits<Exponent>::max()) {
      throw InvalidArgument("exponent out of range: " + std::to_string(e));
    }
    degree_ = degree_ - exp_[i] + static_cast<std::uint32_t>(e);
    exp_[i] = static_cast<Exponent>(e);
  }

  /// Sum of exponents over the index range [lo, hi).
  std::uint32_t partial_degree(std::size_t lo, std::size_t hi) const {
    std::uint32_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += exp_[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
      if (e > std::numeric_limits<Exponent>::max()) {
        throw InvalidArgument("exponent overflow");
      }
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      if (b.exp_[i] > a.exp_[i]) throw InvalidArgument("monomial does not divide");
      r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      r.degree_ += r.exp_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) {
      throw InvalidArgument("monomial length mismatch");
    }
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVariables) {
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
    }
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Monomial orders. `block` is the elimination order for the first
/// `block_size` variables: block degree, then grevlex inside the first
/// block, then grevlex on the remaining variables.
struct MonomialOrder {
  enum class Kind { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  std::size_t block_size = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder block_elimination(std::size_t k) { return {Kind::block, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::lex:
        return "lex";
      case Kind::grevlex:
        return "grevlex";
      case Kind::block:
        return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                          std::size_t lo, std::size_t hi) {
  auto da = a.partial_degree(lo, hi);
  auto db = b.partial_degree(lo, hi);
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Total, multiplicative comparison of two monomials under `order`.
inline std::strong_ordering monomial_cmp(const MonomialOrder& order,
                                         const Monomial& a, const Monomial& b) {
  Monomial::check_same(a, b);
  const std::size_t n = a.size();
  switch (order.kind) {
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::block: {
      std::size_t k = std::min(order.block_size, n);
      auto c = detail::grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return detail::grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace residua
