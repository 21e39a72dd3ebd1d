#pragma once

#include "symres/error.hpp"
#include "symres/index_set.hpp"
#include "symres/exact_arith.hpp"
#include "symres/matrix.hpp"
#include "symres/polynomial.hpp"
#include "symres/arrangement.hpp"
#include "symres/lattice.hpp"
#include "symres/matroid.hpp"
#include "symres/root_systems.hpp"
#include "symres/group.hpp"
#include "symres/counting.hpp"
#include "symres/catalog.hpp"
#include "symres/properties.hpp"
#include "symres/io.hpp"
#include "symres/report.hpp"
#include "symres/selftest.hpp"
