#pragma once

// Coefficient fields. Every field type exposes the same small interface
// (zero/one/add/sub/neg/mul/inv/div, parsing and printing) so the
// polynomial layer can be instantiated over either of them.

#include <cctype>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "residua/errors.hpp"

namespace residua {

using Rng = std::mt19937_64;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Runtime description of a coefficient field, as read from instance files.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::prime;
  std::uint32_t characteristic = 32003;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) {
      throw InvalidArgument("field characteristic " + std::to_string(p) +
                            " is not prime");
    }
    return {Kind::prime, p};
  }

  /// Accepts `GF(p)`, `QQ`, and the CLI short forms `q` and `pP`.
  static FieldSpec parse(std::string_view text) {
    std::string t;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t == "QQ" || t == "q" || t == "Q") return rationals();
    std::string digits;
    if (t.size() > 4 && t.rfind("GF(", 0) == 0 && t.back() == ')') {
      digits = t.substr(3, t.size() - 4);
    } else if (t.size() > 1 && (t[0] == 'p' || t[0] == 'P')) {
      digits = t.substr(1);
    } else {
      throw InvalidArgument("unrecognized field '" + std::string(text) + "'");
    }
    if (digits.empty() || digits.size() > 10) {
      throw InvalidArgument("bad field characteristic '" + digits + "'");
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("bad field characteristic '" + digits + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (p >= (1ULL << 31)) {
      throw InvalidArgument("field characteristic must be below 2^31");
    }
    return prime(static_cast<std::uint32_t>(p));
  }

  std::string to_string() const {
    return kind == Kind::rationals ? "QQ"
                                   : "GF(" + std::to_string(characteristic) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The prime field F_p with p < 2^31; elements are kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (!is_prime(p) || p >= (1U << 31)) {
      throw InvalidArgument("prime field requires a prime below 2^31, got " +
                            std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw InvalidArgument("division by zero in " + spec().to_string());
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  /// Reduces a decimal digit string modulo p.
  Element from_digits(std::string_view digits) const {
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
    return static_cast<Element>(r);
  }

  /// Symmetric representative in (-p/2, p/2], which keeps printed
  /// polynomials like `x^2 - y^2` readable.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  Element random_nonzero(Rng& rng) const {
    return static_cast<Element>(1 + rng() % (p_ - 1));
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP; values are kept in lowest terms with a
/// positive denominator.
class RationalField {
 public:
  using Element = mpq_class;

  RationalField() = default;
  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return Element(a + b); }
  Element sub(const Element& a, const Element& b) const { return Element(a - b); }
  Element neg(const Element& a) const { return Element(-a); }
  Element mul(const Element& a, const Element& b) const { return Element(a * b); }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw InvalidArgument("division by zero in QQ");
    return Element(1 / a);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_digits(std::string_view digits) const {
    Element r(mpz_class(std::string(digits), 10));
    r.canonicalize();
    return r;
  }

  std::string to_string(const Element& a) const { return a.get_str(10); }

  Element random_nonzero(Rng& rng) const {
    long v = static_cast<long>(1 + rng() % 19);
    return Element(rng() % 2 == 0 ? v : -v);
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace residua
