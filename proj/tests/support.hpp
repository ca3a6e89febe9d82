#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "residua/residua.hpp"

namespace support {

using GF = residua::PrimeField;
using QQ = residua::RationalField;
using Poly = residua::Polynomial<GF>;
using Ring = residua::RingPtr<GF>;
using Ideal = residua::Ideal<GF>;

inline Ring ring(std::vector<std::string> vars, residua::MonomialOrder order = residua::MonomialOrder::grevlex(),
                 std::uint32_t p = 32003) {
  return residua::make_ring(GF(p), std::move(vars), order);
}

template <class F>
residua::Polynomial<F> poly(const residua::RingPtr<F>& r, std::string_view text) {
  return residua::parse_polynomial(r, text);
}

template <class F>
residua::PolyList<F> polys(const residua::RingPtr<F>& r, std::string_view text) {
  return residua::parse_polynomial_list(r, text);
}

template <class F>
residua::Ideal<F> ideal(const residua::RingPtr<F>& r, std::string_view text) {
  return residua::Ideal<F>(r, residua::parse_polynomial_list(r, text));
}

template <class F>
std::vector<std::string> basis(const residua::Ideal<F>& i) {
  return residua::to_strings(i.groebner().elements());
}

}  // namespace support
