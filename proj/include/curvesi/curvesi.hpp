#pragma once

#include "curvesi/error.hpp"
#include "curvesi/words.hpp"
#include "curvesi/intersect.hpp"
#include "curvesi/polynomial.hpp"
#include "curvesi/fricke.hpp"
#include "curvesi/reps.hpp"
#include "curvesi/search.hpp"
#include "curvesi/pipeline.hpp"
