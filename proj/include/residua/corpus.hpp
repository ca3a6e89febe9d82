#pragma once

// Seeded generators of residual-intersection instances for the test and
// verification corpus.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "residua/errors.hpp"
#include "residua/fitting.hpp"
#include "residua/residual.hpp"

namespace residua {

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kFamilies[] = {"ci", "hb2", "aci", "power"};

inline bool is_family(std::string_view name) {
  return std::find(std::begin(kFamilies), std::end(kFamilies), name) != std::end(kFamilies);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of item `index` under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

struct CorpusOptions {
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
  int attempts = 20;
};

inline std::vector<std::string> default_variables(std::size_t n) {
  static const char* const names[] = {"x", "y", "z", "w", "u", "v"};
  if (n > 6) throw InvalidArgument("corpus rings have at most 6 variables");
  return {names, names + n};
}

/// A family ideal with the residual length s requested for it.
template <class F>
struct FamilyIdeal {
  Ideal<F> I;
  int s;
};

namespace detail {

template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, Rng& rng) {
  return random_form(ring, 1, rng);
}

/// Complete intersection of g random forms of degree 1 or 2.
template <class F>
std::optional<FamilyIdeal<F>> make_ci(const F& field, const CorpusOptions& opt, Rng& rng) {
  const std::size_t nv = opt.min_vars + rng() % (opt.max_vars - opt.min_vars + 1);
  auto ring = make_ring(field, default_variables(nv), MonomialOrder::grevlex());
  const int g = 1 + static_cast<int>(rng() % nv);
  PolyList<F> gens;
  for (int k = 0; k < g; ++k) gens.push_back(random_form(ring, 1 + static_cast<int>(rng() % 2), rng));
  Ideal<F> i(ring, gens);
  if (i.is_unit() || height(i) != g || mu(i) != static_cast<std::size_t>(g)) return std::nullopt;
  const int s = g + static_cast<int>(rng() % (nv - static_cast<std::size_t>(g) + 1));
  return FamilyIdeal<F>{i, s};
}

/// 2x2 minors of a random 3x2 matrix of linear forms in three variables.
template <class F>
std::optional<FamilyIdeal<F>> make_hb2(const F& field, Rng& rng) {
  auto ring = make_ring(field, default_variables(3), MonomialOrder::grevlex());
  std::vector<PolyList<F>> rows;
  for (int r = 0; r < 3; ++r) rows.push_back({linear_form(ring, rng), linear_form(ring, rng)});
  auto i = minors(PolyMatrix<F>::from_rows(ring, rows), 2);
  if (i.is_unit() || mu(i) != 3 || height(i) != 2) return std::nullopt;
  const int s = 2 + static_cast<int>(rng() % 2);
  return FamilyIdeal<F>{i, s};
}

/// Ideal of three random points of P^{n-1}, n in {3, 4}: an almost
/// complete intersection of height n - 1.
template <class F>
std::optional<FamilyIdeal<F>> make_aci(const F& field, Rng& rng) {
  const std::size_t nv = 3 + rng() % 2;
  auto ring = make_ring(field, default_variables(nv), MonomialOrder::grevlex());
  std::optional<Ideal<F>> acc;
  for (int pt = 0; pt < 3; ++pt) {
    std::vector<typename F::Element> p;
    for (std::size_t k = 0; k < nv; ++k) p.push_back(field.random_nonzero(rng));
    PolyList<F> lin;
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        lin.push_back(Polynomial<F>::variable(ring, u).scaled(p[v]) -
                      Polynomial<F>::variable(ring, v).scaled(p[u]));
      }
    }
    Ideal<F> point(ring, lin);
    acc = acc ? intersect(*acc, point) : point;
  }
  Ideal<F> i(ring, min_gens(*acc));
  const int g = static_cast<int>(nv) - 1;
  if (height(i) != g || mu(i) != static_cast<std::size_t>(g + 1)) return std::nullopt;
  const int s = g + static_cast<int>(rng() % 2);
  return FamilyIdeal<F>{i, s};
}

/// (x, y)^2 in k[x, y] with s = 2.
template <class F>
std::optional<FamilyIdeal<F>> make_power(const F& field, Rng&) {
  auto ring = make_ring(field, default_variables(2), MonomialOrder::grevlex());
  auto x = Polynomial<F>::variable(ring, 0);
  auto y = Polynomial<F>::variable(ring, 1);
  Ideal<F> i(ring, {x * x, x * y, y * y});
  return FamilyIdeal<F>{i, 2};
}

}  // namespace detail

inline void check_family(std::string_view family, const CorpusOptions& opt) {
  if (!is_family(family)) throw InvalidArgument("unknown corpus family '" + std::string(family) + "'");
  if (opt.min_vars < 2 || opt.max_vars > 6 || opt.min_vars > opt.max_vars) {
    throw InvalidArgument("corpus variable range must lie within 2..6");
  }
}

/// The ideal of one family member, retrying with derived seeds until its
/// shape checks (height, μ) hold.
template <class F>
FamilyIdeal<F> generate_family_ideal(const F& field, std::string_view family, std::uint64_t seed,
                                     const CorpusOptions& opt = {}) {
  check_family(family, opt);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::optional<FamilyIdeal<F>> made;
    if (family == "ci") made = detail::make_ci(field, opt, rng);
    if (family == "hb2") made = detail::make_hb2(field, rng);
    if (family == "aci") made = detail::make_aci(field, rng);
    if (family == "power") made = detail::make_power(field, rng);
    if (made) return std::move(*made);
  }
  throw GenerationFailure("generation-failure: family " + std::string(family) +
                          " produced no ideal of the required shape in " + std::to_string(opt.attempts) +
                          " attempts");
}

/// One instance of `family`: a family ideal plus general generators,
/// retrying with derived seeds; every result is a verified residual
/// intersection whose generators pass the height ladder.
template <class F>
ResidualInstance<F> generate_instance(const F& field, std::string_view family, std::uint64_t seed,
                                      const CorpusOptions& opt = {}) {
  check_family(family, opt);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    const std::uint64_t attempt_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    auto made = generate_family_ideal(field, family, attempt_seed, opt);
    ResidualInstance<F> inst{made.I, {}, attempt_seed, std::string(family)};
    try {
      inst.a_gens = generic_generators(made.I, made.s, attempt_seed);
    } catch (const GenericityFailure&) {
      continue;
    }
    if (!is_residual(inst.a(), inst.I, inst.s())) continue;
    return inst;
  }
  throw GenerationFailure("generation-failure: family " + std::string(family) +
                          " produced no valid instance in " + std::to_string(opt.attempts) + " attempts");
}

template <class F>
std::vector<ResidualInstance<F>> generate_corpus(const F& field, std::string_view family, std::size_t count,
                                                 std::uint64_t seed, const CorpusOptions& opt = {}) {
  std::vector<ResidualInstance<F>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(generate_instance(field, family, derive_seed(seed, k), opt));
  return out;
}

}  // namespace residua
