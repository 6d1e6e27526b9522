#ifndef ORDFAN_ORDFAN_HPP
#define ORDFAN_ORDFAN_HPP

#include "ordfan/algebra.hpp"
#include "ordfan/fan.hpp"
#include "ordfan/groebner.hpp"
#include "ordfan/monomial.hpp"
#include "ordfan/monomial_ideal.hpp"
#include "ordfan/ordering.hpp"
#include "ordfan/polynomial.hpp"
#include "ordfan/rational.hpp"
#include "ordfan/session.hpp"

#endif
