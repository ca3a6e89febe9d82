#pragma once

#include "residua/errors.hpp"
#include "residua/field.hpp"
#include "residua/monomial.hpp"
#include "residua/polynomial.hpp"
#include "residua/poly_io.hpp"
#include "residua/groebner.hpp"
#include "residua/ideal.hpp"
#include "residua/fitting.hpp"
#include "residua/koszul.hpp"
#include "residua/residual.hpp"
#include "residua/corpus.hpp"
#include "residua/instance.hpp"
