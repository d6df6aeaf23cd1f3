#ifndef HILBERT_HILBERT_HPP
#define HILBERT_HILBERT_HPP

#include "hilbert/certify.hpp"
#include "hilbert/embedding.hpp"
#include "hilbert/error.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/numerics.hpp"
#include "hilbert/polytope.hpp"
#include "hilbert/rng.hpp"

#endif  // HILBERT_HILBERT_HPP
