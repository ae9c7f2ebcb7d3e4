// Umbrella header.

#ifndef SZT_SZT_HPP
#define SZT_SZT_HPP

#include "szt/convolution.hpp"
#include "szt/energies.hpp"
#include "szt/error.hpp"
#include "szt/families.hpp"
#include "szt/finite_set.hpp"
#include "szt/harness.hpp"
#include "szt/linalg.hpp"
#include "szt/operators.hpp"
#include "szt/rational.hpp"
#include "szt/report.hpp"
#include "szt/suite.hpp"
#include "szt/szt_estimation.hpp"

#endif
