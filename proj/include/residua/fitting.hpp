#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/groebner.hpp"
#include "residua/ideal.hpp"

namespace residua {

/// Dense matrix of polynomials, row-major.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<F>(ring)) {}

  static PolyMatrix from_rows(const RingPtr<F>& ring, const std::vector<PolyList<F>>& rows) {
    PolyMatrix m(ring, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static PolyMatrix from_columns(const RingPtr<F>& ring, std::size_t rows,
                                 const std::vector<FreeModuleElement<F>>& cols) {
    PolyMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].rank() != rows) throw InvalidArgument("column rank mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial<F>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  FreeModuleElement<F> column(std::size_t j) const {
    PolyList<F> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return FreeModuleElement<F>(std::move(c));
  }

 private:
  RingPtr<F> ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial<F>> entries_;
};

namespace detail {

/// Determinants of square submatrices by cofactor expansion along the first
/// selected row, memoized on (row set, column set).
template <class F>
class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix<F>& m) : m_(m) {
    if (m.rows() > 32 || m.cols() > 32) throw InvalidArgument("matrix too large for minors");
  }

  Polynomial<F> det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return Polynomial<F>::one(m_.ring());
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t r = static_cast<std::size_t>(__builtin_ctz(rows));
    const std::uint32_t rest = rows & (rows - 1);
    Polynomial<F> acc(m_.ring());
    int sign = 1;
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (!(cols & (1U << c))) continue;
      const auto& e = m_.at(r, c);
      if (!e.is_zero()) {
        auto sub = det(rest, cols & ~(1U << c));
        if (!sub.is_zero()) {
          acc = sign > 0 ? acc + e * sub : acc - e * sub;
        }
      }
      sign = -sign;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const PolyMatrix<F>& m_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial<F>> memo_;
};

inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::uint32_t>& out,
                            std::uint32_t cur = 0, std::size_t start = 0) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets_of_size(n, k - 1, out, cur | (1U << i), i + 1);
}

}  // namespace detail

/// Ideal of r×r minors. r <= 0 gives the unit ideal, r > min(rows, cols)
/// the zero ideal.
template <class F>
Ideal<F> minors(const PolyMatrix<F>& m, int r) {
  if (r <= 0) return Ideal<F>::unit(m.ring());
  const auto k = static_cast<std::size_t>(r);
  if (k > m.rows() || k > m.cols()) return Ideal<F>::zero(m.ring());
  std::vector<std::uint32_t> row_sets, col_sets;
  detail::subsets_of_size(m.rows(), k, row_sets);
  detail::subsets_of_size(m.cols(), k, col_sets);
  detail::MinorTable<F> table(m);
  PolyList<F> gens;
  for (auto rs : row_sets) {
    for (auto cs : col_sets) {
      auto d = table.det(rs, cs);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal<F>(m.ring(), std::move(gens));
}

/// R^k --[A|B]--> R^n --> I/a --> 0 with n = μ(I): the first `a_columns`
/// columns are syzygies of `target_gens`, the rest express the generators
/// of a in terms of them.
template <class F>
struct PresentationMatrix {
  PolyMatrix<F> matrix;
  PolyList<F> target_gens;
  std::size_t a_columns = 0;

  std::size_t n() const { return target_gens.size(); }
  std::size_t b_columns() const { return matrix.cols() - a_columns; }
};

/// Syzygy columns of a generator list (the A block).
template <class F>
std::vector<FreeModuleElement<F>> syzygy_columns(const PolyList<F>& gens) {
  if (gens.empty()) return {};
  return syzygies(gens);
}

template <class F>
PresentationMatrix<F> presentation_from_generators(const RingPtr<F>& ring, PolyList<F> x,
                                                   const PolyList<F>& a_gens) {
  auto cols = syzygy_columns(x);
  const std::size_t a_cols = cols.size();
  if (!a_gens.empty()) {
    Lifter<F> lifter(ring, x);
    for (const auto& a : a_gens) {
      PolyList<F> c;
      try {
        c = lifter.express(a);
      } catch (const NotAMember&) {
        throw NotASubideal();
      }
      cols.emplace_back(std::move(c));
    }
  }
  const std::size_t n = x.size();
  PresentationMatrix<F> p{PolyMatrix<F>(ring, n, 0), std::move(x), a_cols};
  if (n > 0) p.matrix = PolyMatrix<F>::from_columns(ring, n, cols);
  return p;
}

template <class F>
PresentationMatrix<F> presentation_of_quotient(const Ideal<F>& i, const Ideal<F>& a) {
  check_same_ring(i, a);
  require_homogeneous(i, "presentation_of_quotient");
  if (!i.contains(a)) throw NotASubideal();
  return presentation_from_generators(i.ring(), min_gens(i), a.generators());
}

template <class F>
PresentationMatrix<F> presentation_of_ideal(const Ideal<F>& i) {
  require_homogeneous(i, "presentation_of_ideal");
  return presentation_from_generators(i.ring(), min_gens(i), PolyList<F>{});
}

/// Fitt_j of the presented module: (n-j)-minors.
template <class F>
Ideal<F> fitting_ideal(const PresentationMatrix<F>& p, int j) {
  const int r = static_cast<int>(p.n()) - j;
  if (r <= 0) return Ideal<F>::unit(p.matrix.ring());
  return minors(p.matrix, r);
}

/// Fitt_0(I/a); the zero module (a = I) gives the unit ideal.
template <class F>
Ideal<F> fitt0_quotient(const Ideal<F>& i, const Ideal<F>& a) {
  return fitting_ideal(presentation_of_quotient(i, a), 0);
}

/// G_s via Fitting ideals: height(Fitt_j(I) + I) >= j + 1 for 0 <= j < s.
/// V(Fitt_j(I)) is the locus where I needs more than j generators, so this
/// is equivalent to μ(I_p) <= dim R_p for p ⊇ I with dim R_p <= s - 1.
template <class F>
bool check_gs(const Ideal<F>& i, int s) {
  require_homogeneous(i, "check_Gs");
  if (i.is_unit()) throw InvalidArgument("check_Gs requires a proper ideal");
  auto p = presentation_of_ideal(i);
  for (int j = 0; j < s; ++j) {
    auto locus = ideal_sum(fitting_ideal(p, j), i);
    if (locus.is_unit()) continue;
    if (height(locus) < j + 1) return false;
  }
  return true;
}

}  // namespace residua
