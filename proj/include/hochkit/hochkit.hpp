#pragma once

#include "common.hpp"
#include "numeric.hpp"
#include "objects.hpp"
#include "poset.hpp"
#include "lattices.hpp"
#include "geometry.hpp"
#include "series.hpp"
#include "enumeration.hpp"
#include "cubic.hpp"
#include "io.hpp"
#include "suites.hpp"
