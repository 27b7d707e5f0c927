#pragma once

#include "karmarkar/errors.hpp"
#include "karmarkar/geometry.hpp"
#include "karmarkar/io.hpp"
#include "karmarkar/linalg.hpp"
#include "karmarkar/oracle.hpp"
#include "karmarkar/potential.hpp"
#include "karmarkar/problem.hpp"
#include "karmarkar/projection.hpp"
#include "karmarkar/solver.hpp"
#include "karmarkar/transform.hpp"
