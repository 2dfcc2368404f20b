#pragma once

#include "tropjac/error.hpp"
#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/matrix.hpp"
#include "tropjac/rational.hpp"
#include "tropjac/tautological.hpp"
#include "tropjac/theta.hpp"
