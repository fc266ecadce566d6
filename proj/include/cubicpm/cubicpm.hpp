#pragma once

#include "cubicpm/errors.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/io.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/colouring.hpp"
#include "cubicpm/arrays.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/covers.hpp"
#include "cubicpm/structure.hpp"
