#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/groebner.hpp"
#include "residua/polynomial.hpp"

namespace residua {

/// An ideal given by generators. The reduced Gröbner basis is computed on
/// first use and shared between copies.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, PolyList<F> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(const RingPtr<F>& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr<F>& ring) { return Ideal(ring, {Polynomial<F>::one(ring)}); }

  const RingPtr<F>& ring() const { return ring_; }
  const PolyList<F>& generators() const { return gens_; }

  const GroebnerBasis<F>& groebner() const {
    std::call_once(cache_->once, [&] { cache_->gb.emplace(buchberger(ring_, gens_)); });
    return *cache_->gb;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_homogeneous(); });
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f, groebner()).is_zero(); }
  bool contains(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_)) throw RingMismatch();
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const auto& g) { return contains(g); });
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<F>> gb;
  };

  RingPtr<F> ring_;
  PolyList<F> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
void check_same_ring(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a, b);
  PolyList<F> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal<F>(a.ring(), std::move(gens));
}

/// Equality of ideals by comparison of reduced Gröbner bases.
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a, b);
  return a.groebner().elements() == b.groebner().elements();
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k) {
  auto gens = eliminate_generators(ideal.ring(), ideal.generators(), k);
  auto sub = drop_leading_variables(ideal.ring(), k);
  return Ideal<F>(sub, std::move(gens));
}

/// I ∩ J by eliminating t from t·I + (1−t)·J.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a, b);
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>::zero(ring);
  std::vector<std::string> names{"__t"};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  auto ext = make_ring(ring->field(), std::move(names), MonomialOrder::block_elimination(1));
  auto t = Polynomial<F>::variable(ext, 0);
  auto one_minus_t = Polynomial<F>::one(ext) - t;
  PolyList<F> gens;
  for (const auto& f : a.generators()) gens.push_back(t * embed(f, ext, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext, 1));
  auto elim = eliminate_generators(ext, gens, 1);
  PolyList<F> out;
  for (const auto& e : elim) out.push_back(change_ring(e, ring));
  return Ideal<F>(ring, std::move(out));
}

/// Exact quotient p / f; throws DivisionInexact when f does not divide p.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& p, const Polynomial<F>& f) {
  if (f.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& field = p.ring()->field();
  Polynomial<F> rest = p;
  std::vector<typename Polynomial<F>::Term> quotient;
  const auto& lt = f.leading_term();
  while (!rest.is_zero()) {
    const auto& r = rest.leading_term();
    if (!lt.mono.divides(r.mono)) throw DivisionInexact("colon: generator of a ∩ (f) not divisible by f");
    auto c = field.div(r.coeff, lt.coeff);
    auto m = r.mono / lt.mono;
    quotient.push_back({c, m});
    rest -= f.mul_term(c, m);
  }
  return Polynomial<F>::from_terms(p.ring(), std::move(quotient));
}

/// a : (f)
template <class F>
Ideal<F> colon(const Ideal<F>& a, const Polynomial<F>& f) {
  if (!same_ring(a.ring(), f.ring())) throw RingMismatch();
  if (f.is_zero()) return Ideal<F>::unit(a.ring());
  auto meet = intersect(a, Ideal<F>(a.ring(), {f}));
  PolyList<F> out;
  for (const auto& g : meet.generators()) out.push_back(divide_exact(g, f));
  return Ideal<F>(a.ring(), std::move(out));
}

/// a : I = ∩_i a : (f_i) over the generators f_i of I.
template <class F>
Ideal<F> colon(const Ideal<F>& a, const Ideal<F>& i) {
  check_same_ring(a, i);
  if (i.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal<F>> acc;
  for (const auto& f : i.generators()) {
    auto part = colon(a, f);
    if (part.is_unit()) continue;
    acc = acc ? intersect(*acc, part) : part;
  }
  return acc ? *acc : Ideal<F>::unit(a.ring());
}

/// Krull dimension of R/I as the size of a largest set of variables
/// independent modulo the leading-term ideal; -1 for the unit ideal.
template <class F>
int dimension(const Ideal<F>& ideal) {
  const auto& gb = ideal.groebner();
  if (gb.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  auto leads = gb.leading_monomials();
  std::vector<std::uint32_t> supports;
  for (const auto& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) s |= 1U << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1U << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

/// Codimension; the unit ideal reports the variable count (see is_unit).
template <class F>
int height(const Ideal<F>& ideal) {
  const int n = static_cast<int>(ideal.ring()->nvars());
  int d = dimension(ideal);
  return d < 0 ? n : n - d;
}

template <class F>
void require_homogeneous(const Ideal<F>& ideal, const char* what) {
  if (!ideal.is_homogeneous()) throw NonHomogeneous(std::string(what) + " requires a homogeneous ideal");
}

/// Minimal homogeneous generators: ascending degree, keeping a generator
/// only when it is not in the ideal of those kept before it.
template <class F>
PolyList<F> min_gens(const Ideal<F>& ideal) {
  require_homogeneous(ideal, "min_gens");
  auto gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    return a.total_degree() < b.total_degree();
  });
  PolyList<F> kept;
  for (const auto& g : gens) {
    if (!kept.empty()) {
      Ideal<F> sofar(ideal.ring(), kept);
      if (sofar.contains(g)) continue;
    }
    kept.push_back(g);
  }
  return kept;
}

template <class F>
std::size_t mu(const Ideal<F>& ideal) {
  return min_gens(ideal).size();
}

}  // namespace residua
