#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/field.hpp"
#include "residua/monomial.hpp"

namespace residua {

/// k[x_1..x_n] with a fixed monomial order. Rings are immutable and shared
/// through `RingPtr`.
template <class F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
    if (vars_.size() > kMaxVariables) {
      throw InvalidArgument("too many variables");
    }
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty() || !seen.insert(v).second) {
        throw InvalidArgument("variable names must be unique and non-empty");
      }
    }
    if (order_.kind == MonomialOrder::Kind::block && order_.block_size > vars_.size()) {
      throw InvalidArgument("elimination block larger than the variable count");
    }
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(order_, a, b);
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  F field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(variables),
                                             order);
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Canonical sparse polynomial: terms strictly descending in the ring order,
/// no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Coeff = typename F::Element;
  struct Term {
    Coeff coeff;
    Monomial mono;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr<F>& ring, const Coeff& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({c, Monomial(ring->nvars())});
    return p;
  }
  static Polynomial integer(const RingPtr<F>& ring, std::int64_t c) {
    return constant(ring, ring->field().from_int(c));
  }
  static Polynomial one(const RingPtr<F>& ring) { return constant(ring, ring->field().one()); }
  static Polynomial variable(const RingPtr<F>& ring, std::size_t i) {
    return term(ring, ring->field().one(), Monomial::variable(ring->nvars(), i));
  }
  static Polynomial term(const RingPtr<F>& ring, const Coeff& c, const Monomial& m) {
    if (m.size() != ring->nvars()) throw InvalidArgument("monomial length mismatch");
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({c, m});
    return p;
  }
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static Polynomial from_terms(const RingPtr<F>& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    return combine(p, q, false);
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return combine(p, q, true);
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_ring(p, q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
    const auto& field = p.ring_->field();
    std::vector<Term> out;
    out.reserve(p.size() * q.size());
    for (const auto& a : p.terms_) {
      for (const auto& b : q.terms_) out.push_back({field.mul(a.coeff, b.coeff), a.mono * b.mono});
    }
    return from_terms(p.ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scaled(const Coeff& c) const {
    const auto& field = ring_->field();
    if (field.is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, c);
    return r;
  }

  /// c * m * this; order is preserved because monomial orders are multiplicative.
  Polynomial mul_term(const Coeff& c, const Monomial& m) const {
    const auto& field = ring_->field();
    if (field.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono * m});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!same_ring(p.ring_, q.ring_) || p.terms_.size() != q.terms_.size()) return false;
    const auto& field = p.ring_->field();
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
      if (!(p.terms_[i].mono == q.terms_[i].mono) ||
          !field.equal(p.terms_[i].coeff, q.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

 private:
  static void check_ring(const Polynomial& p, const Polynomial& q) {
    if (!same_ring(p.ring_, q.ring_)) throw RingMismatch();
  }

  static Polynomial combine(const Polynomial& p, const Polynomial& q, bool subtract) {
    check_ring(p, q);
    const auto& ring = *p.ring_;
    const auto& field = ring.field();
    Polynomial r(p.ring_);
    r.terms_.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
      if (j == q.size() ||
          (i < p.size() && ring.compare(p.terms_[i].mono, q.terms_[j].mono) > 0)) {
        r.terms_.push_back(p.terms_[i++]);
      } else if (i == p.size() || ring.compare(p.terms_[i].mono, q.terms_[j].mono) < 0) {
        const auto& t = q.terms_[j++];
        r.terms_.push_back({subtract ? field.neg(t.coeff) : t.coeff, t.mono});
      } else {
        auto c = subtract ? field.sub(p.terms_[i].coeff, q.terms_[j].coeff)
                          : field.add(p.terms_[i].coeff, q.terms_[j].coeff);
        if (!field.is_zero(c)) r.terms_.push_back({c, p.terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    const auto& ring = *ring_;
    const auto& field = ring.field();
    for (const auto& t : terms_) {
      if (t.mono.size() != ring.nvars()) throw InvalidArgument("monomial length mismatch");
    }
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return ring.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <class F>
using PolyList = std::vector<Polynomial<F>>;

/// Copies `p` into `target`, whose variables are those of p's ring shifted
/// right by `offset` (used to adjoin auxiliary variables in front).
template <class F>
Polynomial<F> embed(const Polynomial<F>& p, const RingPtr<F>& target, std::size_t offset) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) m.set(i + offset, t.mono[i]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

/// Inverse of `embed`: drops the first `offset` variables, which must not occur.
template <class F>
Polynomial<F> restrict_to(const Polynomial<F>& p, const RingPtr<F>& target, std::size_t offset) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i < offset) {
        if (t.mono[i] != 0) throw InvalidArgument("polynomial involves eliminated variables");
      } else {
        m.set(i - offset, t.mono[i]);
      }
    }
    terms.push_back({t.coeff, m});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

/// Same variables, possibly different order: re-sorts the terms.
template <class F>
Polynomial<F> change_ring(const Polynomial<F>& p, const RingPtr<F>& target) {
  if (target->nvars() != p.ring()->nvars()) throw RingMismatch();
  return Polynomial<F>::from_terms(target, p.terms());
}

/// All monomials of total degree `d` in `n` variables, in an unspecified order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      exps[i] = left;
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// A form of degree `d` with random nonzero coefficients on every monomial.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, int d, Rng& rng) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
    terms.push_back({ring->field().random_nonzero(rng), m});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace residua
