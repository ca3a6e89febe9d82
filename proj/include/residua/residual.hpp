#pragma once

// Residual intersections J = a : I with a = (a_1..a_s) ⊊ I and
// height J >= s: general generator selection, the residual predicates,
// the sum-of-colons formulas and the verification harness.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/fitting.hpp"
#include "residua/ideal.hpp"
#include "residua/koszul.hpp"

namespace residua {

/// Height with the unit ideal treated as infinitely high.
template <class F>
bool height_at_least(const Ideal<F>& j, int h) {
  return j.is_unit() || height(j) >= h;
}

template <class F>
struct ResidualInstance {
  Ideal<F> I;
  PolyList<F> a_gens;
  std::uint64_t seed = 0;
  std::string family;

  const RingPtr<F>& ring() const { return I.ring(); }
  int s() const { return static_cast<int>(a_gens.size()); }
  Ideal<F> a() const { return Ideal<F>(I.ring(), a_gens); }
};

/// Index subsets of {0..count-1} of the given size.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t count, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  for (Subset s : subsets(count, size)) {
    std::vector<std::size_t> idx;
    for (Subset r = s; r; r &= r - 1) idx.push_back(static_cast<std::size_t>(__builtin_ctz(r)));
    out.push_back(std::move(idx));
  }
  return out;
}

template <class F>
Ideal<F> sub_ideal(const RingPtr<F>& ring, const PolyList<F>& gens, const std::vector<std::size_t>& idx) {
  PolyList<F> chosen;
  for (auto i : idx) chosen.push_back(gens.at(i));
  return Ideal<F>(ring, std::move(chosen));
}

struct LadderResult {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::size_t> failing;  // first subset found with height((a_ν):I) < |ν|
};

/// Checks height((a_ν):I) >= |ν| over nonempty index subsets: all of them
/// for s <= 5, otherwise 2s random subsets of each size.
template <class F>
LadderResult height_ladder(const Ideal<F>& i, const PolyList<F>& a_gens, std::uint64_t seed) {
  LadderResult result;
  const std::size_t s = a_gens.size();
  Rng rng(seed);
  for (std::size_t size = 1; size <= s; ++size) {
    std::vector<std::vector<std::size_t>> chosen;
    if (s <= 5) {
      chosen = index_subsets(s, size);
    } else {
      for (std::size_t k = 0; k < 2 * s; ++k) {
        std::vector<std::size_t> pool(s);
        for (std::size_t t = 0; t < s; ++t) pool[t] = t;
        for (std::size_t t = 0; t < size; ++t) std::swap(pool[t], pool[t + rng() % (s - t)]);
        pool.resize(size);
        std::sort(pool.begin(), pool.end());
        chosen.push_back(std::move(pool));
      }
    }
    for (const auto& idx : chosen) {
      ++result.checked;
      auto j = colon(sub_ideal(i.ring(), a_gens, idx), i);
      if (!height_at_least(j, static_cast<int>(size))) {
        result.ok = false;
        result.failing = idx;
        return result;
      }
    }
  }
  return result;
}

constexpr int kGenericAttempts = 8;

/// Degree of the general combinations: max generator degree, one more when
/// s >= μ(I) so that a stays a proper subideal.
template <class F>
int generic_degree(const PolyList<F>& min_generators, int s) {
  int d = 0;
  for (const auto& f : min_generators) d = std::max(d, f.total_degree());
  return s >= static_cast<int>(min_generators.size()) ? d + 1 : d;
}

/// s general elements a_i = Σ_j h_ij f_j of I over its minimal generators,
/// each h_ij a random form making a_i homogeneous of a common degree.
/// Retries until a ≠ I and the height ladder holds.
template <class F>
PolyList<F> generic_generators(const Ideal<F>& i, int s, std::uint64_t seed) {
  if (s < 0) throw InvalidArgument("s must be non-negative");
  require_homogeneous(i, "generic_generators");
  if (s == 0) return {};
  if (i.is_unit()) throw InvalidArgument("generic_generators requires a proper ideal");
  auto f = min_gens(i);
  if (f.empty()) throw GenericityFailure("genericity-failure: the zero ideal has no proper residual");
  const int target = generic_degree(f, s);
  const auto& ring = i.ring();
  Rng rng(seed);
  for (int attempt = 0; attempt < kGenericAttempts; ++attempt) {
    PolyList<F> a;
    for (int k = 0; k < s; ++k) {
      Polynomial<F> acc(ring);
      for (const auto& g : f) acc += random_form(ring, target - g.total_degree(), rng) * g;
      a.push_back(std::move(acc));
    }
    if (std::any_of(a.begin(), a.end(), [](const auto& p) { return p.is_zero(); })) continue;
    if (Ideal<F>(ring, a).contains(i)) continue;
    if (height_ladder(i, a, rng()).ok) return a;
  }
  throw GenericityFailure("genericity-failure: no general sequence of length " + std::to_string(s) +
                          " passed the height ladder in " + std::to_string(kGenericAttempts) +
                          " attempts");
}

template <class F>
bool is_residual(const Ideal<F>& a, const Ideal<F>& i, int s) {
  check_same_ring(a, i);
  if (!i.contains(a)) throw NotASubideal();
  if (a.contains(i)) return false;
  return height_at_least(colon(a, i), s);
}

template <class F>
bool is_geometric(const Ideal<F>& a, const Ideal<F>& i, int s) {
  if (!is_residual(a, i, s)) return false;
  return height_at_least(ideal_sum(i, colon(a, i)), s + 1);
}

template <class F>
struct ColonTerm {
  std::vector<std::size_t> indices;
  Ideal<F> colon;
};

template <class F>
struct RhsBreakdown {
  std::optional<Ideal<F>> fitt0;
  std::vector<ColonTerm<F>> terms;
  Ideal<F> total;
  /// For sizes below height(I) every term should equal (a_ν) itself.
  std::optional<bool> small_terms_trivial;
};

/// Fitt_0(I/a) + Σ_{|ν| = subset_size} (a_ν):I. Size 0 means Fitt_0(I/a) + a.
template <class F>
RhsBreakdown<F> rhs_breakdown(const Ideal<F>& i, const PolyList<F>& a_gens, int subset_size,
                              bool include_fitt = true) {
  if (subset_size < 0) throw InvalidArgument("subset size must be non-negative");
  if (subset_size > static_cast<int>(a_gens.size())) {
    throw InvalidArgument("subset size " + std::to_string(subset_size) + " exceeds s = " +
                          std::to_string(a_gens.size()));
  }
  const auto& ring = i.ring();
  Ideal<F> a(ring, a_gens);
  RhsBreakdown<F> out{std::nullopt, {}, Ideal<F>::zero(ring), std::nullopt};
  PolyList<F> gens;
  if (include_fitt) {
    out.fitt0 = fitt0_quotient(i, a);
    gens = out.fitt0->generators();
  }
  if (subset_size == 0) {
    gens.insert(gens.end(), a_gens.begin(), a_gens.end());
  } else {
    const bool small = !i.is_unit() && subset_size < height(i);
    bool trivial = true;
    for (auto& idx : index_subsets(a_gens.size(), static_cast<std::size_t>(subset_size))) {
      auto sub = sub_ideal(ring, a_gens, idx);
      auto c = colon(sub, i);
      if (small) trivial = trivial && ideal_equal(c, sub);
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
      out.terms.push_back({std::move(idx), std::move(c)});
    }
    if (small) out.small_terms_trivial = trivial;
  }
  out.total = Ideal<F>(ring, std::move(gens));
  return out;
}

template <class F>
Ideal<F> rhs_formula(const Ideal<F>& i, const PolyList<F>& a_gens, int subset_size) {
  return rhs_breakdown(i, a_gens, subset_size).total;
}

enum class LinkStatus { link, unconfirmed, not_regular, degenerate };

inline std::string_view link_status_name(LinkStatus s) {
  switch (s) {
    case LinkStatus::link: return "link";
    case LinkStatus::unconfirmed: return "link-candidate-unconfirmed";
    case LinkStatus::not_regular: return "not-a-regular-sequence";
    case LinkStatus::degenerate: return "degenerate";
  }
  return "";
}

template <class F>
struct LinkTerm {
  std::vector<std::size_t> indices;
  LinkStatus status;
  Ideal<F> colon;
};

/// For each g-subset ν: whether (a_ν) has height g, the colon (a_ν):I, and
/// whether (a_ν):((a_ν):I) gives back I.
template <class F>
std::vector<LinkTerm<F>> links_in_formula(const Ideal<F>& i, const PolyList<F>& a_gens, int g) {
  if (g < 0 || g > static_cast<int>(a_gens.size())) throw InvalidArgument("link size out of range");
  std::vector<LinkTerm<F>> out;
  for (auto& idx : index_subsets(a_gens.size(), static_cast<std::size_t>(g))) {
    auto sub = sub_ideal(i.ring(), a_gens, idx);
    auto c = colon(sub, i);
    LinkStatus status;
    if (sub.is_unit() || height(sub) != g) {
      status = LinkStatus::not_regular;
    } else if (c.is_unit()) {
      status = LinkStatus::degenerate;
    } else {
      status = ideal_equal(colon(sub, c), i) ? LinkStatus::link : LinkStatus::unconfirmed;
    }
    out.push_back({std::move(idx), status, std::move(c)});
  }
  return out;
}

enum class Theorem { thm25, cor31, cor32, cor33, thm34, cor35, thm47, kitt_eq };

inline constexpr Theorem kAllTheorems[] = {Theorem::thm25, Theorem::cor31, Theorem::cor32,
                                           Theorem::cor33, Theorem::thm34, Theorem::cor35,
                                           Theorem::thm47, Theorem::kitt_eq};

inline std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm25: return "thm25";
    case Theorem::cor31: return "cor31";
    case Theorem::cor32: return "cor32";
    case Theorem::cor33: return "cor33";
    case Theorem::thm34: return "thm34";
    case Theorem::cor35: return "cor35";
    case Theorem::thm47: return "thm47";
    case Theorem::kitt_eq: return "kitt-eq";
  }
  return "";
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (auto t : kAllTheorems) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

enum class Verdict { equal, lhs_strictly_larger, incomparable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::lhs_strictly_larger: return "lhs-strictly-larger";
    case Verdict::incomparable: return "incomparable";
  }
  return "";
}

/// Properties that are not decided by computation. A corpus family tag
/// vouches for some of them.
enum class Assumption {
  residually_s2,
  cohen_macaulay,
  gorenstein_quotient,
  generic_ci,
  almost_cohen_macaulay,
  sd1,
  ext1_vanishes,
};

inline std::string_view assumption_name(Assumption a) {
  switch (a) {
    case Assumption::residually_s2: return "weakly residually S2";
    case Assumption::cohen_macaulay: return "R/I Cohen-Macaulay";
    case Assumption::gorenstein_quotient: return "R/I Gorenstein";
    case Assumption::generic_ci: return "generically a complete intersection";
    case Assumption::almost_cohen_macaulay: return "depth R/I >= dim R/I - 1";
    case Assumption::sd1: return "SD1";
    case Assumption::ext1_vanishes: return "Ext1(I/I^2, R/I) = 0";
  }
  return "";
}

/// Families: complete intersections have every property; height-2 perfect
/// ideals (hb2, power) are licci, hence residually S2, strongly
/// Cohen-Macaulay and unobstructed; aci instances are reduced points.
inline bool family_vouches(std::string_view family, Assumption a) {
  using A = Assumption;
  if (family == "ci") return true;
  if (family == "hb2") return a != A::gorenstein_quotient;
  if (family == "aci") return a != A::gorenstein_quotient && a != A::ext1_vanishes;
  if (family == "power") return a != A::gorenstein_quotient && a != A::generic_ci;
  return false;
}

enum class CheckStatus { pass, fail, asserted, unchecked };

inline std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::asserted: return "asserted";
    case CheckStatus::unchecked: return "unchecked";
  }
  return "";
}

struct HypothesisCheck {
  std::string name;
  CheckStatus status;
  bool operator==(const HypothesisCheck&) const = default;
};

template <class F>
struct VerificationReport {
  Theorem theorem;
  Ideal<F> lhs;
  Ideal<F> rhs;
  Verdict verdict;
  bool rhs_subset_lhs;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<LinkTerm<F>> links;
  std::uint64_t seed;
  double seconds = 0;

  bool hypotheses_hold() const {
    return std::none_of(hypotheses.begin(), hypotheses.end(),
                        [](const auto& h) { return h.status == CheckStatus::fail; });
  }
};

template <class F>
Verdict compare_ideals(const Ideal<F>& lhs, const Ideal<F>& rhs) {
  const bool rhs_in_lhs = lhs.contains(rhs);
  const bool lhs_in_rhs = rhs.contains(lhs);
  if (rhs_in_lhs && lhs_in_rhs) return Verdict::equal;
  if (rhs_in_lhs) return Verdict::lhs_strictly_larger;
  return Verdict::incomparable;
}

namespace detail {

class CheckList {
 public:
  explicit CheckList(std::string family) : family_(std::move(family)) {}

  void computed(std::string name, bool ok) {
    checks_.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail});
  }
  void assumed(Assumption a) {
    checks_.push_back({std::string(assumption_name(a)),
                       family_vouches(family_, a) ? CheckStatus::asserted : CheckStatus::unchecked});
  }
  std::vector<HypothesisCheck> take() { return std::move(checks_); }

 private:
  std::string family_;
  std::vector<HypothesisCheck> checks_;
};

}  // namespace detail

/// Runs the named identity on an instance. Failing computed hypotheses
/// raise HypothesisViolation unless `strict` is false, in which case they
/// are reported with status fail.
template <class F>
VerificationReport<F> verify(Theorem theorem, const ResidualInstance<F>& inst, bool strict = true) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ring = inst.ring();
  const Ideal<F>& i = inst.I;
  const Ideal<F> a = inst.a();
  const int s = inst.s();
  require_homogeneous(i, "verify");
  if (!i.contains(a)) throw NotASubideal();
  if (i.is_unit()) throw InvalidArgument("verify requires a proper ideal I");

  const int n = static_cast<int>(mu(i));
  const int g = height(i);
  detail::CheckList checks(inst.family);

  const bool proper = !a.contains(i);
  checks.computed("a != I", proper);
  auto lhs = colon(a, i);
  checks.computed("height(a:I) >= s", proper && height_at_least(lhs, s));

  auto ladder = [&] { checks.computed("height ladder", height_ladder(i, inst.a_gens, inst.seed).ok); };
  auto gs = [&](int level) { checks.computed("G_" + std::to_string(level), check_gs(i, level)); };
  auto arith = [&](std::string name, bool ok) { checks.computed(std::move(name), ok); };

  std::optional<Ideal<F>> rhs;
  std::vector<LinkTerm<F>> links;
  switch (theorem) {
    case Theorem::thm25: {
      arith("s >= mu(I) - 2", s >= n - 2);
      ladder();
      gs(s);
      checks.assumed(Assumption::residually_s2);
      if (s >= n - 2) rhs = rhs_formula(i, inst.a_gens, std::max(0, n - 2));
      break;
    }
    case Theorem::cor31: {
      arith("mu(I) = height(I)", n == g);
      ladder();
      rhs = rhs_formula(i, inst.a_gens, 0);
      break;
    }
    case Theorem::cor32: {
      arith("mu(I) <= height(I) + 1", n <= g + 1);
      ladder();
      checks.assumed(Assumption::generic_ci);
      checks.assumed(Assumption::almost_cohen_macaulay);
      rhs = rhs_formula(i, inst.a_gens, 0);
      break;
    }
    case Theorem::cor33: {
      arith("mu(I) = height(I) + 2", n == g + 2);
      arith("s >= height(I)", s >= g);
      ladder();
      gs(s);
      checks.assumed(Assumption::cohen_macaulay);
      if (s >= g) {
        rhs = rhs_formula(i, inst.a_gens, g);
        links = links_in_formula(i, inst.a_gens, g);
      }
      break;
    }
    case Theorem::thm34: {
      arith("height(I) > 0", g > 0);
      arith("s = height(I) + 1", s == g + 1);
      if (s >= g && g >= 0) links = links_in_formula(i, inst.a_gens, g);
      arith("every g-subsequence is regular",
            s >= g && std::none_of(links.begin(), links.end(),
                                   [](const auto& l) { return l.status == LinkStatus::not_regular; }));
      checks.assumed(Assumption::generic_ci);
      checks.assumed(Assumption::gorenstein_quotient);
      checks.assumed(Assumption::ext1_vanishes);
      if (s >= g) rhs = rhs_breakdown(i, inst.a_gens, g, false).total;
      break;
    }
    case Theorem::cor35: {
      arith("height(I) > 0", g > 0);
      arith("mu(I) = height(I) + 3", n == g + 3);
      arith("s >= height(I) + 1", s >= g + 1);
      ladder();
      gs(s);
      checks.assumed(Assumption::gorenstein_quotient);
      checks.assumed(Assumption::ext1_vanishes);
      checks.assumed(Assumption::residually_s2);
      if (s >= g) {
        rhs = rhs_formula(i, inst.a_gens, g);
        links = links_in_formula(i, inst.a_gens, g);
      }
      break;
    }
    case Theorem::thm47: {
      arith("height(I) >= 2", g >= 2);
      arith("s >= mu(I) - 2", s >= n - 2);
      checks.assumed(Assumption::sd1);
      if (s >= n - 2) rhs = rhs_formula(i, inst.a_gens, std::max(0, n - 2));
      break;
    }
    case Theorem::kitt_eq: {
      gs(s);
      checks.assumed(Assumption::residually_s2);
      rhs = kitt(a, i);
      break;
    }
  }

  auto hypotheses = checks.take();
  const bool hold = std::none_of(hypotheses.begin(), hypotheses.end(),
                                 [](const auto& h) { return h.status == CheckStatus::fail; });
  if (strict && !hold) {
    std::string failed;
    for (const auto& h : hypotheses) {
      if (h.status != CheckStatus::fail) continue;
      failed += failed.empty() ? h.name : ", " + h.name;
    }
    throw HypothesisViolation("hypothesis-violation: " + std::string(theorem_name(theorem)) +
                              " requires " + failed);
  }
  if (!rhs) rhs = Ideal<F>::zero(ring);

  VerificationReport<F> report{theorem, lhs, *rhs, compare_ideals(lhs, *rhs), lhs.contains(*rhs),
                               std::move(hypotheses), std::move(links), inst.seed};
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace residua
