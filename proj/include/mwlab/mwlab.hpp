#pragma once

// Exact MacWilliams-transform toolkit: finite fields and cyclotomic
// integers, linear codes and weight enumerators, the finite Fourier
// transform with Poisson summation over matrix spaces, smoothing-parameter
// and coset-uniformity bounds, and Construction-A lattice series.

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/cyclotomic.hpp"
#include "mwlab/distribution.hpp"
#include "mwlab/enumerators.hpp"
#include "mwlab/errors.hpp"
#include "mwlab/field.hpp"
#include "mwlab/io.hpp"
#include "mwlab/lattice.hpp"
#include "mwlab/polynomial.hpp"
#include "mwlab/random.hpp"
#include "mwlab/transforms.hpp"
