#pragma once

#include "aft/numeric.hpp"
#include "aft/group.hpp"
#include "aft/matrix.hpp"
#include "aft/complex.hpp"
#include "aft/homology.hpp"
#include "aft/action.hpp"
#include "aft/linear.hpp"
#include "aft/bounds.hpp"
#include "aft/corpus.hpp"
#include "aft/random.hpp"
#include "aft/pipeline.hpp"
#include "aft/io.hpp"
#include "aft/verify.hpp"
