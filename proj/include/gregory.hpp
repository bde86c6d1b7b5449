#pragma once

#include "gregory/rational.hpp"
#include "gregory/scalar.hpp"
#include "gregory/series.hpp"
#include "gregory/series_io.hpp"
#include "gregory/gregory_psi.hpp"
#include "gregory/caratheodory.hpp"
#include "gregory/coefficients.hpp"
#include "gregory/functionals.hpp"
#include "gregory/ymax.hpp"
#include "gregory/verifier.hpp"
#include "gregory/report.hpp"
