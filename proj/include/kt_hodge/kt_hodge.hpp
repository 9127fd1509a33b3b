#pragma once

#include "kt_hodge/errors.hpp"
#include "kt_hodge/exactmath/number_theory.hpp"
#include "kt_hodge/exactmath/pi_element.hpp"
#include "kt_hodge/exactmath/rational.hpp"
#include "kt_hodge/hodge.hpp"
#include "kt_hodge/lattice.hpp"
#include "kt_hodge/matrix2.hpp"
#include "kt_hodge/sectors.hpp"
#include "kt_hodge/stokes.hpp"
