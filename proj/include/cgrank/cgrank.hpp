#pragma once

#include "cgrank/closure.hpp"
#include "cgrank/cube.hpp"
#include "cgrank/errors.hpp"
#include "cgrank/generators.hpp"
#include "cgrank/io.hpp"
#include "cgrank/linalg.hpp"
#include "cgrank/number.hpp"
#include "cgrank/parallel.hpp"
#include "cgrank/parameters.hpp"
#include "cgrank/polytope.hpp"
#include "cgrank/suites.hpp"
#include "cgrank/symmetry.hpp"
