#pragma once

// Everything at once.

#include "sinfty/rational.hpp"
#include "sinfty/mpoly.hpp"
#include "sinfty/mpoly_gcd.hpp"
#include "sinfty/upoly.hpp"
#include "sinfty/laurent.hpp"
#include "sinfty/algebraic.hpp"
#include "sinfty/regular_map.hpp"
#include "sinfty/projective.hpp"
#include "sinfty/text.hpp"
#include "sinfty/real_zeros.hpp"
#include "sinfty/classifier.hpp"
#include "sinfty/bridge.hpp"
#include "sinfty/clustering.hpp"
#include "sinfty/sampler.hpp"
#include "sinfty/random_maps.hpp"
#include "sinfty/json_io.hpp"
