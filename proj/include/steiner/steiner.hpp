#pragma once

// Umbrella header: exact boundary-format tensors, the bundles they present,
// and everything computed about them.

#include "steiner/bundle.hpp"
#include "steiner/error.hpp"
#include "steiner/groebner.hpp"
#include "steiner/iso.hpp"
#include "steiner/json_io.hpp"
#include "steiner/matrix.hpp"
#include "steiner/moduli.hpp"
#include "steiner/paths.hpp"
#include "steiner/poly.hpp"
#include "steiner/random_gen.hpp"
#include "steiner/rng.hpp"
#include "steiner/scalar.hpp"
#include "steiner/stabilizer.hpp"
#include "steiner/tensor.hpp"
#include "steiner/transform.hpp"
#include "steiner/univariate.hpp"
#include "steiner/unstable.hpp"
#include "steiner/weights.hpp"
#include "steiner/zerodim.hpp"
