#ifndef LRSCATTER_LRSCATTER_H_
#define LRSCATTER_LRSCATTER_H_

#include "lrscatter/cones.h"
#include "lrscatter/oracles.h"
#include "lrscatter/params.h"
#include "lrscatter/permutations.h"
#include "lrscatter/render.h"
#include "lrscatter/scattering.h"
#include "lrscatter/transitions.h"
#include "lrscatter/web.h"
#include "lrscatter/weights.h"

#endif  // LRSCATTER_LRSCATTER_H_
