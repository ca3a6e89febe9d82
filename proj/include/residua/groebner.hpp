#pragma once

// Buchberger's algorithm for ideals and for submodules of free modules R^r.
//
// Module elements are sparse vectors of (coefficient, monomial, component)
// terms ordered position-over-term: a smaller component index is larger,
// ties broken by the ring's monomial order. Ideals are the rank-1 case.
// Syzygies and lifts use the augmented-module technique: generator g_i is
// extended by the unit vector e_{r+i}, and because POT eliminates the
// leading r components, basis elements whose head part vanishes generate
// the syzygy module.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/polynomial.hpp"

namespace residua {

/// Per-thread budget of S-pairs a single Buchberger run may process.
inline std::size_t& groebner_step_limit() {
  thread_local std::size_t limit = 0;  // 0 = unlimited
  return limit;
}

/// Installs a step budget for the current thread until destroyed.
class ScopedStepLimit {
 public:
  explicit ScopedStepLimit(std::size_t steps) : saved_(groebner_step_limit()) {
    groebner_step_limit() = steps;
  }
  ~ScopedStepLimit() { groebner_step_limit() = saved_; }
  ScopedStepLimit(const ScopedStepLimit&) = delete;
  ScopedStepLimit& operator=(const ScopedStepLimit&) = delete;

 private:
  std::size_t saved_;
};

/// Element of R^rank.
template <class F>
class FreeModuleElement {
 public:
  FreeModuleElement(RingPtr<F> ring, std::size_t rank)
      : ring_(ring), components_(rank, Polynomial<F>(ring)) {
    if (rank == 0) throw InvalidArgument("free module rank must be positive");
  }
  explicit FreeModuleElement(PolyList<F> components)
      : ring_(components.empty() ? nullptr : components.front().ring()),
        components_(std::move(components)) {
    if (components_.empty()) throw InvalidArgument("free module rank must be positive");
    for (const auto& c : components_) {
      if (!same_ring(c.ring(), ring_)) throw RingMismatch();
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return components_.size(); }
  const PolyList<F>& components() const { return components_; }
  const Polynomial<F>& operator[](std::size_t i) const { return components_[i]; }
  Polynomial<F>& operator[](std::size_t i) { return components_[i]; }

  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const auto& c) { return c.is_zero(); });
  }

  friend FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b) {
    check(a, b);
    FreeModuleElement r(a);
    for (std::size_t i = 0; i < a.rank(); ++i) r.components_[i] += b.components_[i];
    return r;
  }
  friend FreeModuleElement operator-(const FreeModuleElement& a, const FreeModuleElement& b) {
    check(a, b);
    FreeModuleElement r(a);
    for (std::size_t i = 0; i < a.rank(); ++i) r.components_[i] -= b.components_[i];
    return r;
  }
  friend FreeModuleElement operator*(const Polynomial<F>& f, const FreeModuleElement& v) {
    FreeModuleElement r(v);
    for (auto& c : r.components_) c = f * c;
    return r;
  }
  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.components_ == b.components_;
  }

 private:
  static void check(const FreeModuleElement& a, const FreeModuleElement& b) {
    if (a.rank() != b.rank()) throw InvalidArgument("free module rank mismatch");
  }

  RingPtr<F> ring_;
  PolyList<F> components_;
};

namespace detail {

template <class F>
struct VTerm {
  typename F::Element coeff;
  Monomial mono;
  std::uint32_t comp;
};

template <class F>
using Vec = std::vector<VTerm<F>>;

/// POT comparison: smaller component first, then the ring order.
template <class F>
int pot_cmp(const PolyRing<F>& ring, const Monomial& a, std::uint32_t ca,
            const Monomial& b, std::uint32_t cb) {
  if (ca != cb) return ca < cb ? 1 : -1;
  auto c = ring.compare(a, b);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

template <class F>
Vec<F> to_vec(const Polynomial<F>& p, std::uint32_t comp = 0) {
  Vec<F> v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.coeff, t.mono, comp});
  return v;
}

template <class F>
Vec<F> to_vec(const FreeModuleElement<F>& e, std::uint32_t offset = 0) {
  Vec<F> v;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    for (const auto& t : e[i].terms()) {
      v.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(i + offset)});
    }
  }
  return v;  // components ascending, monomials descending: already POT sorted
}

template <class F>
Polynomial<F> component_of(const Vec<F>& v, const RingPtr<F>& ring, std::uint32_t comp) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back({t.coeff, t.mono});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
FreeModuleElement<F> to_element(const Vec<F>& v, const RingPtr<F>& ring, std::size_t rank,
                                std::uint32_t offset = 0) {
  FreeModuleElement<F> e(ring, rank);
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp - offset >= rank) {
      throw InvalidArgument("vector component out of range");
    }
    parts[t.comp - offset].push_back({t.coeff, t.mono});
  }
  for (std::size_t i = 0; i < rank; ++i) {
    e[i] = Polynomial<F>::from_terms(ring, std::move(parts[i]));
  }
  return e;
}

/// v - c * m * g, merged in one pass.
template <class F>
Vec<F> sub_mul(const PolyRing<F>& ring, const Vec<F>& v, const typename F::Element& c,
               const Monomial& m, const Vec<F>& g) {
  const auto& field = ring.field();
  Vec<F> out;
  out.reserve(v.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(v[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == v.size() ? -1 : pot_cmp(ring, v[i].mono, v[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(v[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(field.mul(c, g[j].coeff)), gm, g[j].comp});
      ++j;
    } else {
      auto nc = field.sub(v[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(nc)) out.push_back({nc, gm, g[j].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
void make_monic(const PolyRing<F>& ring, Vec<F>& v) {
  if (v.empty()) return;
  const auto& field = ring.field();
  if (field.is_one(v.front().coeff)) return;
  auto inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
}

template <class F>
std::optional<std::size_t> find_reducer(const std::vector<Vec<F>>& basis,
                                        const std::vector<bool>* active,
                                        const Monomial& m, std::uint32_t comp) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active && !(*active)[k]) continue;
    const auto& lead = basis[k].front();
    if (lead.comp == comp && lead.mono.divides(m)) return k;
  }
  return std::nullopt;
}

/// Full reduction: no term of the result is divisible by a leading term.
template <class F>
Vec<F> normal_form(const PolyRing<F>& ring, Vec<F> h, const std::vector<Vec<F>>& basis) {
  const auto& field = ring.field();
  Vec<F> rem;
  while (!h.empty()) {
    const auto lead = h.front();
    auto k = find_reducer(basis, static_cast<const std::vector<bool>*>(nullptr), lead.mono, lead.comp);
    if (k) {
      const auto& g = basis[*k];
      auto c = field.div(lead.coeff, g.front().coeff);
      h = sub_mul(ring, h, c, lead.mono / g.front().mono, g);
    } else {
      rem.push_back(lead);
      h.erase(h.begin());
    }
  }
  return rem;
}

/// Reduces only while the leading term is reducible.
template <class F>
Vec<F> top_reduce(const PolyRing<F>& ring, Vec<F> h, const std::vector<Vec<F>>& basis) {
  const auto& field = ring.field();
  while (!h.empty()) {
    const auto& lead = h.front();
    auto k = find_reducer(basis, static_cast<const std::vector<bool>*>(nullptr), lead.mono, lead.comp);
    if (!k) break;
    const auto& g = basis[*k];
    auto c = field.div(lead.coeff, g.front().coeff);
    h = sub_mul(ring, h, c, lead.mono / g.front().mono, g);
  }
  return h;
}

template <class F>
class Buchberger {
 public:
  Buchberger(const PolyRing<F>& ring, bool rank_one) : ring_(ring), rank_one_(rank_one) {}

  std::vector<Vec<F>> run(std::vector<Vec<F>> input) {
    for (auto& v : input) {
      if (v.empty()) continue;
      v = top_reduce(ring_, std::move(v), basis_);
      if (v.empty()) continue;
      make_monic(ring_, v);
      insert(std::move(v));
    }
    std::size_t steps = 0;
    const std::size_t limit = groebner_step_limit();
    while (!pairs_.empty()) {
      if (limit != 0 && ++steps > limit) throw ResourceLimit(limit);
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      Pair p = *it;
      pairs_.erase(it);
      auto h = top_reduce(ring_, spoly(p), basis_);
      if (h.empty()) continue;
      make_monic(ring_, h);
      insert(std::move(h));
    }
    return minimal_reduced();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t comp;
  };

  Vec<F> spoly(const Pair& p) const {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    Vec<F> a;
    a.reserve(f.size());
    auto mf = p.lcm / f.front().mono;
    for (const auto& t : f) a.push_back({t.coeff, t.mono * mf, t.comp});
    return sub_mul(ring_, a, ring_.field().one(), p.lcm / g.front().mono, g);
  }

  bool disjoint(std::size_t i, std::size_t j) const {
    return rank_one_ && basis_[i].front().mono.coprime(basis_[j].front().mono);
  }

  Monomial lead_lcm(std::size_t i, std::size_t j) const {
    return lcm(basis_[i].front().mono, basis_[j].front().mono);
  }

  // Gebauer-Moeller update.
  void insert(Vec<F> h) {
    const std::size_t t = basis_.size();
    const auto hm = h.front().mono;
    const auto hc = h.front().comp;
    basis_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < t; ++i) {
      if (active_[i] && basis_[i].front().comp == hc) {
        candidates.push_back({i, t, lead_lcm(i, t), hc});
      }
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool keep = disjoint(p.i, t);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (!disjoint(p.i, t)) fresh.push_back(p);
    }

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = p.comp == hc && hm.divides(p.lcm) && !(lead_lcm(p.i, t) == p.lcm) &&
                  !(lead_lcm(p.j, t) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t i = 0; i < t; ++i) {
      if (active_[i] && basis_[i].front().comp == hc && hm.divides(basis_[i].front().mono)) {
        active_[i] = false;
      }
    }
  }

  std::vector<Vec<F>> minimal_reduced() const {
    std::vector<Vec<F>> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& lj = basis_[j].front();
        if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
        // equal leading monomials: keep the earliest
        redundant = !(lj.mono == li.mono) || j < i;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    return interreduce(ring_, std::move(minimal));
  }

 public:
  static std::vector<Vec<F>> interreduce(const PolyRing<F>& ring, std::vector<Vec<F>> minimal) {
    std::vector<Vec<F>> out(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Vec<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Vec<F> tail(minimal[i].begin() + 1, minimal[i].end());
      Vec<F> r{minimal[i].front()};
      auto reduced_tail = normal_form(ring, std::move(tail), others);
      r.insert(r.end(), reduced_tail.begin(), reduced_tail.end());
      make_monic(ring, r);
      out[i] = std::move(r);
    }
    std::sort(out.begin(), out.end(), [&](const Vec<F>& a, const Vec<F>& b) {
      return pot_cmp(ring, a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
    });
    return out;
  }

 private:
  const PolyRing<F>& ring_;
  bool rank_one_;
  std::vector<Vec<F>> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Gröbner basis of an ideal.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, PolyList<F> elements, bool reduced)
      : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced) {
    for (const auto& e : elements_) vecs_.push_back(detail::to_vec(e));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const PolyList<F>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elements_) out.push_back(e.leading_monomial());
    return out;
  }

  const std::vector<detail::Vec<F>>& vecs() const { return vecs_; }

 private:
  RingPtr<F> ring_;
  PolyList<F> elements_;
  bool reduced_;
  std::vector<detail::Vec<F>> vecs_;
};

/// Buchberger with the normal selection strategy and Gebauer-Moeller
/// criteria. The result is always the reduced basis; zero generators are
/// dropped, and an empty input yields the basis of the zero ideal.
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const PolyList<F>& gens) {
  std::vector<detail::Vec<F>> input;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_zero()) input.push_back(detail::to_vec(g));
  }
  auto vecs = detail::Buchberger<F>(*ring, true).run(std::move(input));
  PolyList<F> elements;
  for (const auto& v : vecs) elements.push_back(detail::component_of(v, ring, 0));
  return GroebnerBasis<F>(ring, std::move(elements), true);
}

template <class F>
GroebnerBasis<F> buchberger(const PolyList<F>& gens) {
  if (gens.empty()) throw InvalidArgument("buchberger needs a ring; pass it explicitly");
  return buchberger(gens.front().ring(), gens);
}

/// Minimalizes and interreduces a Gröbner basis; idempotent.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& g) {
  if (g.reduced()) return g;
  std::vector<detail::Vec<F>> minimal;
  const auto& vs = g.vecs();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < vs.size() && !redundant; ++j) {
      if (i == j) continue;
      if (vs[j].front().mono.divides(vs[i].front().mono)) {
        redundant = !(vs[j].front().mono == vs[i].front().mono) || j < i;
      }
    }
    if (!redundant) minimal.push_back(vs[i]);
  }
  auto reduced = detail::Buchberger<F>::interreduce(*g.ring(), std::move(minimal));
  PolyList<F> elements;
  for (const auto& v : reduced) elements.push_back(detail::component_of(v, g.ring(), 0));
  return GroebnerBasis<F>(g.ring(), std::move(elements), true);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  auto r = detail::normal_form(*g.ring(), detail::to_vec(f), g.vecs());
  return detail::component_of(r, g.ring(), 0);
}

/// Gröbner basis of a submodule of R^rank (position-over-term).
template <class F>
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(RingPtr<F> ring, std::size_t rank, std::vector<detail::Vec<F>> vecs)
      : ring_(std::move(ring)), rank_(rank), vecs_(std::move(vecs)) {}

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<detail::Vec<F>>& vecs() const { return vecs_; }

  std::vector<FreeModuleElement<F>> elements() const {
    std::vector<FreeModuleElement<F>> out;
    for (const auto& v : vecs_) out.push_back(detail::to_element(v, ring_, rank_));
    return out;
  }

  FreeModuleElement<F> normal_form(const FreeModuleElement<F>& v) const {
    if (v.rank() != rank_) throw InvalidArgument("free module rank mismatch");
    return detail::to_element(detail::normal_form(*ring_, detail::to_vec(v), vecs_), ring_, rank_);
  }

  bool contains(const FreeModuleElement<F>& v) const { return normal_form(v).is_zero(); }

 private:
  RingPtr<F> ring_;
  std::size_t rank_;
  std::vector<detail::Vec<F>> vecs_;
};

template <class F>
ModuleGroebnerBasis<F> module_groebner(const RingPtr<F>& ring, std::size_t rank,
                                       const std::vector<FreeModuleElement<F>>& gens) {
  std::vector<detail::Vec<F>> input;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw InvalidArgument("free module rank mismatch");
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    input.push_back(detail::to_vec(g));
  }
  return ModuleGroebnerBasis<F>(ring, rank, detail::Buchberger<F>(*ring, rank == 1).run(std::move(input)));
}

/// Generators of the kernel of R^m -> R^rank, e_i -> gens[i].
template <class F>
std::vector<FreeModuleElement<F>> syzygies(const std::vector<FreeModuleElement<F>>& gens) {
  if (gens.empty()) throw InvalidArgument("syzygies of an empty generator list");
  const auto& ring = gens.front().ring();
  const std::size_t r = gens.front().rank();
  const std::size_t m = gens.size();
  std::vector<detail::Vec<F>> input;
  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i].rank() != r) throw InvalidArgument("free module rank mismatch");
    if (!same_ring(gens[i].ring(), ring)) throw RingMismatch();
    auto v = detail::to_vec(gens[i]);
    v.push_back({ring->field().one(), Monomial(ring->nvars()), static_cast<std::uint32_t>(r + i)});
    input.push_back(std::move(v));
  }
  auto basis = detail::Buchberger<F>(*ring, false).run(std::move(input));
  std::vector<FreeModuleElement<F>> out;
  for (const auto& v : basis) {
    if (v.front().comp >= r) out.push_back(detail::to_element(v, ring, m, static_cast<std::uint32_t>(r)));
  }
  return out;
}

template <class F>
std::vector<FreeModuleElement<F>> syzygies(const PolyList<F>& gens) {
  std::vector<FreeModuleElement<F>> vs;
  for (const auto& g : gens) vs.push_back(FreeModuleElement<F>(PolyList<F>{g}));
  return syzygies(vs);
}

/// Expresses elements of (gens) as R-linear combinations of gens. The
/// augmented basis is computed once and reused across calls.
template <class F>
class Lifter {
 public:
  Lifter(RingPtr<F> ring, PolyList<F> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    std::vector<detail::Vec<F>> input;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!same_ring(gens_[i].ring(), ring_)) throw RingMismatch();
      auto v = detail::to_vec(gens_[i]);
      v.push_back({ring_->field().one(), Monomial(ring_->nvars()), static_cast<std::uint32_t>(1 + i)});
      input.push_back(std::move(v));
    }
    basis_ = detail::Buchberger<F>(*ring_, false).run(std::move(input));
  }

  /// Coefficients c with f = sum c_i gens_i; throws NotAMember otherwise.
  PolyList<F> express(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
    PolyList<F> coeffs(gens_.size(), Polynomial<F>(ring_));
    if (gens_.empty()) {
      if (!f.is_zero()) throw NotAMember("element is not in the ideal of the given generators");
      return coeffs;
    }
    auto r = detail::normal_form(*ring_, detail::to_vec(f), basis_);
    for (const auto& t : r) {
      if (t.comp == 0) throw NotAMember("element is not in the ideal of the given generators");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      coeffs[i] = -detail::component_of(r, ring_, static_cast<std::uint32_t>(1 + i));
    }
    return coeffs;
  }

 private:
  RingPtr<F> ring_;
  PolyList<F> gens_;
  std::vector<detail::Vec<F>> basis_;
};

template <class F>
PolyList<F> express_in_terms(const Polynomial<F>& f, const PolyList<F>& gens) {
  return Lifter<F>(f.ring(), gens).express(f);
}

/// Ring with the same variables and field but another order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  return make_ring(ring->field(), ring->variables(), order);
}

/// Ring without the first k variables, keeping the base order (block orders
/// fall back to grevlex).
template <class F>
RingPtr<F> drop_leading_variables(const RingPtr<F>& ring, std::size_t k) {
  std::vector<std::string> rest(ring->variables().begin() + static_cast<std::ptrdiff_t>(k),
                                ring->variables().end());
  auto order = ring->order();
  if (order.kind == MonomialOrder::Kind::block) order = MonomialOrder::grevlex();
  return make_ring(ring->field(), std::move(rest), order);
}

/// Generators of (gens) ∩ k[x_{k+1}..x_n], returned in the subring.
template <class F>
PolyList<F> eliminate_generators(const RingPtr<F>& ring, const PolyList<F>& gens, std::size_t k) {
  if (k >= ring->nvars() && ring->nvars() > 0) {
    throw InvalidArgument("cannot eliminate every variable");
  }
  auto sub = drop_leading_variables(ring, k);
  if (k == 0) {
    PolyList<F> out;
    for (const auto& g : gens) out.push_back(change_ring(g, sub));
    return out;
  }
  auto elim_ring = with_order(ring, MonomialOrder::block_elimination(k));
  PolyList<F> moved;
  for (const auto& g : gens) moved.push_back(change_ring(g, elim_ring));
  auto gb = buchberger(elim_ring, moved);
  PolyList<F> out;
  for (const auto& g : gb.elements()) {
    if (g.leading_monomial().partial_degree(0, k) == 0) out.push_back(restrict_to(g, sub, k));
  }
  return out;
}

}  // namespace residua
