#pragma once

// Umbrella header for the nsatz exact polynomial algebra library.

#include "nsatz/errors.hpp"
#include "nsatz/extension.hpp"
#include "nsatz/groebner.hpp"
#include "nsatz/ideal.hpp"
#include "nsatz/ideal_io.hpp"
#include "nsatz/monomial.hpp"
#include "nsatz/nullstellensatz.hpp"
#include "nsatz/order.hpp"
#include "nsatz/parse.hpp"
#include "nsatz/point.hpp"
#include "nsatz/polynomial.hpp"
#include "nsatz/ratfun.hpp"
#include "nsatz/rational.hpp"
#include "nsatz/unipoly.hpp"
#include "nsatz/variable.hpp"
