#pragma once

// Koszul complex K(x_1..x_n; R) as the exterior algebra on e_1..e_n, its
// cycles, boundaries and homology lifts, and the "Kitt" ideal whose
// top-degree component is <Γ·Z>_n, where Γ is the subalgebra generated by
// ζ_j = Σ_i c_ij e_i for a_j = Σ_i c_ij x_i.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/fitting.hpp"
#include "residua/groebner.hpp"
#include "residua/ideal.hpp"

namespace residua {

/// Basis index set of the exterior algebra: bit i stands for e_{i+1}.
using Subset = std::uint32_t;

inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }

/// Sign of e_S ∧ e_T relative to e_{S∪T}; 0 when S and T meet.
inline int wedge_sign(Subset s, Subset t) {
  if (s & t) return 0;
  int inversions = 0;
  for (Subset rest = t; rest; rest &= rest - 1) {
    int j = __builtin_ctz(rest);
    inversions += __builtin_popcount(s >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Size-k subsets of {0..n-1} in lexicographic order of their sorted tuples.
inline std::vector<Subset> subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k <= n) detail::subsets_of_size(n, k, out);
  return out;
}

/// Homogeneous element of exterior degree `degree` in rank n.
template <class F>
class ExteriorElement {
 public:
  ExteriorElement(RingPtr<F> ring, std::size_t n, std::size_t degree)
      : ring_(std::move(ring)), n_(n), degree_(degree) {
    if (n > 31) throw InvalidArgument("exterior algebra rank too large");
    if (degree > n) throw InvalidArgument("exterior degree exceeds rank");
  }

  static ExteriorElement basis(const RingPtr<F>& ring, std::size_t n, Subset s) {
    ExteriorElement e(ring, n, subset_size(s));
    e.add(s, Polynomial<F>::one(ring));
    return e;
  }
  static ExteriorElement scalar(const Polynomial<F>& c, std::size_t n) {
    ExteriorElement e(c.ring(), n, 0);
    e.add(0, c);
    return e;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return n_; }
  std::size_t degree() const { return degree_; }
  const std::map<Subset, Polynomial<F>>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial<F> coefficient(Subset s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Polynomial<F>(ring_) : it->second;
  }
  Polynomial<F> top_coefficient() const { return coefficient((n_ == 32 ? 0 : (1U << n_)) - 1); }

  void add(Subset s, const Polynomial<F>& c) {
    if (subset_size(s) != degree_ || (n_ < 32 && (s >> n_) != 0)) {
      throw InvalidArgument("basis subset does not match exterior degree");
    }
    if (c.is_zero()) return;
    auto it = coeffs_.find(s);
    if (it == coeffs_.end()) {
      coeffs_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  /// Degree with e_j weighted by weights[j]; -1 for zero.
  int weighted_degree(const std::vector<int>& weights) const {
    int d = -1;
    for (const auto& [s, c] : coeffs_) {
      int w = c.total_degree();
      for (Subset r = s; r; r &= r - 1) w += weights[static_cast<std::size_t>(__builtin_ctz(r))];
      d = std::max(d, w);
    }
    return d;
  }

  friend ExteriorElement operator+(const ExteriorElement& u, const ExteriorElement& v) {
    check(u, v);
    if (u.degree_ != v.degree_) throw InvalidArgument("adding exterior elements of different degree");
    ExteriorElement r(u);
    for (const auto& [s, c] : v.coeffs_) r.add(s, c);
    return r;
  }
  friend ExteriorElement operator*(const Polynomial<F>& f, const ExteriorElement& v) {
    ExteriorElement r(v.ring_, v.n_, v.degree_);
    for (const auto& [s, c] : v.coeffs_) r.add(s, f * c);
    return r;
  }

  friend ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
    check(u, v);
    if (u.degree_ + v.degree_ > u.n_) return ExteriorElement(u.ring_, u.n_, u.n_);
    ExteriorElement r(u.ring_, u.n_, u.degree_ + v.degree_);
    for (const auto& [s, a] : u.coeffs_) {
      for (const auto& [t, b] : v.coeffs_) {
        int sign = wedge_sign(s, t);
        if (sign == 0) continue;
        auto prod = a * b;
        r.add(s | t, sign > 0 ? prod : -prod);
      }
    }
    return r;
  }

  friend bool operator==(const ExteriorElement& u, const ExteriorElement& v) {
    return u.n_ == v.n_ && u.degree_ == v.degree_ && u.coeffs_ == v.coeffs_;
  }

 private:
  static void check(const ExteriorElement& u, const ExteriorElement& v) {
    if (u.n_ != v.n_) throw InvalidArgument("exterior algebra rank mismatch");
    if (!same_ring(u.ring_, v.ring_)) throw RingMismatch();
  }

  RingPtr<F> ring_;
  std::size_t n_;
  std::size_t degree_;
  std::map<Subset, Polynomial<F>> coeffs_;
};

/// The Koszul complex on x_1..x_n with
/// d(e_S) = Σ_{j∈S} (-1)^{pos(j,S)+1} x_j e_{S∖j}, pos counted from 1.
template <class F>
class KoszulComplex {
 public:
  KoszulComplex(RingPtr<F> ring, PolyList<F> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    if (gens_.size() > 16) throw InvalidArgument("Koszul complex on too many generators");
    for (std::size_t i = 0; i <= gens_.size(); ++i) basis_.push_back(subsets(gens_.size(), i));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const PolyList<F>& gens() const { return gens_; }
  std::size_t n() const { return gens_.size(); }
  const std::vector<Subset>& basis(std::size_t i) const { return basis_.at(i); }

  std::vector<int> weights() const {
    std::vector<int> w;
    for (const auto& g : gens_) w.push_back(std::max(0, g.total_degree()));
    return w;
  }

  ExteriorElement<F> apply(const ExteriorElement<F>& v) const {
    if (v.rank() != n()) throw InvalidArgument("exterior algebra rank mismatch");
    if (v.degree() == 0) return ExteriorElement<F>(ring_, n(), 0);
    ExteriorElement<F> r(ring_, n(), v.degree() - 1);
    for (const auto& [s, c] : v.coefficients()) {
      int pos = 0;
      for (Subset rest = s; rest; rest &= rest - 1, ++pos) {
        auto j = static_cast<std::size_t>(__builtin_ctz(rest));
        auto term = c * gens_[j];
        r.add(s & ~(1U << j), pos % 2 == 0 ? term : -term);
      }
    }
    return r;
  }

  /// Matrix of d_i : K_i -> K_{i-1} in the lexicographic subset bases.
  PolyMatrix<F> differential(std::size_t i) const {
    if (i < 1 || i > n()) throw InvalidArgument("Koszul differential degree out of range");
    const auto& src = basis_[i];
    const auto& dst = basis_[i - 1];
    PolyMatrix<F> m(ring_, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto image = apply(ExteriorElement<F>::basis(ring_, n(), src[c]));
      for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, c) = image.coefficient(dst[r]);
    }
    return m;
  }

  FreeModuleElement<F> to_vector(const ExteriorElement<F>& v) const {
    const auto& b = basis_.at(v.degree());
    FreeModuleElement<F> out(ring_, b.size());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = v.coefficient(b[k]);
    return out;
  }

  ExteriorElement<F> from_vector(const FreeModuleElement<F>& v, std::size_t degree) const {
    const auto& b = basis_.at(degree);
    if (v.rank() != b.size()) throw InvalidArgument("vector does not match Koszul degree");
    ExteriorElement<F> out(ring_, n(), degree);
    for (std::size_t k = 0; k < b.size(); ++k) out.add(b[k], v[k]);
    return out;
  }

 private:
  RingPtr<F> ring_;
  PolyList<F> gens_;
  std::vector<std::vector<Subset>> basis_;
};

/// Per degree i: generators of the cycles Z_i, of the boundaries B_i, and
/// the cycle lifts H̃_i of generators of H_i = Z_i / B_i.
template <class F>
struct HomologyData {
  std::vector<std::vector<ExteriorElement<F>>> cycles;
  std::vector<std::vector<ExteriorElement<F>>> boundaries;
  std::vector<std::vector<ExteriorElement<F>>> lifts;
};

namespace detail {

/// Graded trimming: ascending weighted degree (stable), keeping an element
/// only if it is outside the submodule spanned by `base` and the kept ones.
template <class F>
std::vector<ExteriorElement<F>> trim(const KoszulComplex<F>& k, std::size_t degree,
                                     std::vector<ExteriorElement<F>> candidates,
                                     const std::vector<ExteriorElement<F>>& base) {
  auto w = k.weights();
  std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    return a.weighted_degree(w) < b.weighted_degree(w);
  });
  const std::size_t rank = k.basis(degree).size();
  std::vector<FreeModuleElement<F>> span;
  for (const auto& b : base) {
    if (!b.is_zero()) span.push_back(k.to_vector(b));
  }
  std::vector<ExteriorElement<F>> kept;
  for (auto& z : candidates) {
    if (z.is_zero()) continue;
    auto v = k.to_vector(z);
    if (!span.empty() && module_groebner(k.ring(), rank, span).contains(v)) continue;
    span.push_back(std::move(v));
    kept.push_back(std::move(z));
  }
  return kept;
}

}  // namespace detail

template <class F>
HomologyData<F> homology_lifts(const KoszulComplex<F>& k) {
  const std::size_t n = k.n();
  HomologyData<F> h;
  h.cycles.resize(n + 1);
  h.boundaries.resize(n + 1);
  h.lifts.resize(n + 1);
  const auto& ring = k.ring();
  h.cycles[0].push_back(ExteriorElement<F>::scalar(Polynomial<F>::one(ring), n));
  for (std::size_t i = 1; i <= n; ++i) {
    auto d = k.differential(i);
    std::vector<FreeModuleElement<F>> cols;
    for (std::size_t c = 0; c < d.cols(); ++c) cols.push_back(d.column(c));
    std::vector<ExteriorElement<F>> z;
    for (const auto& s : syzygies(cols)) z.push_back(k.from_vector(s, i));
    h.cycles[i] = detail::trim(k, i, std::move(z), {});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (Subset s : k.basis(i + 1)) {
      auto b = k.apply(ExteriorElement<F>::basis(ring, n, s));
      if (!b.is_zero()) h.boundaries[i].push_back(std::move(b));
    }
  }
  if (!Ideal<F>(ring, k.gens()).is_unit()) h.lifts[0] = h.cycles[0];
  for (std::size_t i = 1; i <= n; ++i) h.lifts[i] = detail::trim(k, i, h.cycles[i], h.boundaries[i]);
  return h;
}

/// Everything the Kitt constructions share for one pair (a, I): generators
/// x of I, the matrix B with [a] = [x]·B, the elements ζ_j and the Koszul
/// homology of x.
template <class F>
class KittData {
 public:
  KittData(RingPtr<F> ring, PolyList<F> x, PolyList<F> a_gens, std::vector<PolyList<F>> b_columns)
      : ring_(ring), a_gens_(std::move(a_gens)), complex_(ring, std::move(x)) {
    const std::size_t n = complex_.n();
    if (b_columns.size() != a_gens_.size()) throw InvalidArgument("B needs one column per generator of a");
    for (std::size_t j = 0; j < b_columns.size(); ++j) {
      if (b_columns[j].size() != n) throw InvalidArgument("B column length must equal μ(I)");
      Polynomial<F> check(ring_);
      ExteriorElement<F> zeta(ring_, n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        check += b_columns[j][i] * complex_.gens()[i];
        zeta.add(Subset{1} << i, b_columns[j][i]);
      }
      if (!(check == a_gens_[j])) throw InvalidArgument("B does not express a in terms of x");
      zetas_.push_back(std::move(zeta));
    }
    homology_ = homology_lifts(complex_);
    if (n > 0) height_ = height(Ideal<F>(ring_, complex_.gens()));
  }

  /// x = min_gens(I), B from express_in_terms.
  static KittData from_ideals(const Ideal<F>& a, const Ideal<F>& i) {
    check_same_ring(a, i);
    require_homogeneous(i, "kitt");
    if (!i.contains(a)) throw NotASubideal();
    auto x = min_gens(i);
    std::vector<PolyList<F>> b;
    if (!a.generators().empty()) {
      Lifter<F> lifter(i.ring(), x);
      for (const auto& g : a.generators()) b.push_back(lifter.express(g));
    }
    return KittData(i.ring(), std::move(x), a.generators(), std::move(b));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const KoszulComplex<F>& complex() const { return complex_; }
  const HomologyData<F>& homology() const { return homology_; }
  const std::vector<ExteriorElement<F>>& zetas() const { return zetas_; }
  const PolyList<F>& a_generators() const { return a_gens_; }
  std::size_t n() const { return complex_.n(); }
  std::size_t s() const { return a_gens_.size(); }
  int g() const { return height_; }

  /// ζ_{j_1} ∧ … ∧ ζ_{j_p} for every strictly increasing index tuple.
  std::vector<ExteriorElement<F>> gamma(std::size_t p) const {
    std::vector<ExteriorElement<F>> out;
    for (Subset t : subsets(s(), p)) {
      auto acc = ExteriorElement<F>::scalar(Polynomial<F>::one(ring_), n());
      for (Subset r = t; r; r &= r - 1) acc = wedge(acc, zetas_[static_cast<std::size_t>(__builtin_ctz(r))]);
      if (!acc.is_zero()) out.push_back(std::move(acc));
    }
    return out;
  }

 private:
  RingPtr<F> ring_;
  PolyList<F> a_gens_;
  KoszulComplex<F> complex_;
  std::vector<ExteriorElement<F>> zetas_;
  HomologyData<F> homology_;
  int height_ = 0;
};

/// Kitt(a, I) from the graded-pieces formula
/// a·e_top + Σ_{i=max(0,n-s)}^{n-g} Γ_{n-i}·H̃_i.
template <class F>
Ideal<F> kitt(const KittData<F>& data) {
  const int n = static_cast<int>(data.n());
  const int s = static_cast<int>(data.s());
  PolyList<F> gens = data.a_generators();
  for (int i = std::max(0, n - s); i <= n - data.g(); ++i) {
    const auto& lifts = data.homology().lifts[static_cast<std::size_t>(i)];
    if (lifts.empty()) continue;
    for (const auto& gamma : data.gamma(static_cast<std::size_t>(n - i))) {
      for (const auto& h : lifts) {
        auto top = wedge(gamma, h).top_coefficient();
        if (!top.is_zero()) gens.push_back(std::move(top));
      }
    }
  }
  return Ideal<F>(data.ring(), std::move(gens));
}

template <class F>
Ideal<F> kitt(const Ideal<F>& a, const Ideal<F>& i) {
  return kitt(KittData<F>::from_ideals(a, i));
}

namespace detail {

/// Products z_1 ∧ … ∧ z_k of generators with total exterior degree
/// `target`, indices non-decreasing; odd-degree factors never repeat
/// because their squares vanish.
template <class F>
void cycle_products(const std::vector<ExteriorElement<F>>& gens, std::size_t start,
                    const ExteriorElement<F>& acc, std::size_t target,
                    std::vector<ExteriorElement<F>>& out) {
  if (acc.degree() == target) {
    if (!acc.is_zero()) out.push_back(acc);
    return;
  }
  for (std::size_t k = start; k < gens.size(); ++k) {
    if (acc.degree() + gens[k].degree() > target) continue;
    auto next = wedge(acc, gens[k]);
    if (next.is_zero()) continue;
    cycle_products(gens, gens[k].degree() % 2 == 0 ? k : k + 1, next, target, out);
  }
}

template <class F>
Ideal<F> top_degree_products(const KittData<F>& data, const std::vector<ExteriorElement<F>>& cycle_gens) {
  const std::size_t n = data.n();
  PolyList<F> gens;
  auto one = ExteriorElement<F>::scalar(Polynomial<F>::one(data.ring()), n);
  for (std::size_t p = 0; p <= std::min(n, data.s()); ++p) {
    auto gammas = data.gamma(p);
    if (gammas.empty()) continue;
    std::vector<ExteriorElement<F>> products;
    cycle_products(cycle_gens, 0, one, n - p, products);
    for (const auto& gm : gammas) {
      for (const auto& z : products) {
        auto top = wedge(gm, z).top_coefficient();
        if (!top.is_zero()) gens.push_back(std::move(top));
      }
    }
  }
  return Ideal<F>(data.ring(), std::move(gens));
}

}  // namespace detail

/// Kitt(a, I) from its definition: e_top coefficients of <Γ·Z>_n, with Z
/// generated as an algebra by the cycle generators of every degree.
template <class F>
Ideal<F> kitt_via_cycles(const KittData<F>& data) {
  std::vector<ExteriorElement<F>> gens;
  for (std::size_t i = 1; i <= data.n(); ++i) {
    for (const auto& z : data.homology().cycles[i]) gens.push_back(z);
  }
  return detail::top_degree_products(data, gens);
}

template <class F>
Ideal<F> kitt_via_cycles(const Ideal<F>& a, const Ideal<F>& i) {
  return kitt_via_cycles(KittData<F>::from_ideals(a, i));
}

/// e_top coefficients of <Γ·<Z_1>>_n; equals Fitt_0(I/a).
template <class F>
Ideal<F> fitt0_via_z1(const KittData<F>& data) {
  if (data.n() == 0) return Ideal<F>::unit(data.ring());
  return detail::top_degree_products(data, data.homology().cycles[1]);
}

template <class F>
Ideal<F> fitt0_via_z1(const Ideal<F>& a, const Ideal<F>& i) {
  return fitt0_via_z1(KittData<F>::from_ideals(a, i));
}

}  // namespace residua
