#pragma once

#include "fadespec/error.hpp"

#include "fadespec/numerics/quadrature.hpp"
#include "fadespec/numerics/random.hpp"
#include "fadespec/numerics/special_functions.hpp"
#include "fadespec/numerics/summation.hpp"

#include "fadespec/dist/nakagami.hpp"
#include "fadespec/dist/wigner.hpp"

#include "fadespec/rmt/eigenvalues.hpp"
#include "fadespec/rmt/matrix_sampling.hpp"
#include "fadespec/rmt/spacings.hpp"

#include "fadespec/gof/histogram.hpp"
#include "fadespec/gof/kolmogorov_smirnov.hpp"
#include "fadespec/gof/nakagami_fit.hpp"

#include "fadespec/scenario/transition.hpp"
