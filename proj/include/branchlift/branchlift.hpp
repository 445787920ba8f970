#pragma once

// Umbrella header: decision procedures for lifting sphere homeomorphisms
// to cyclic branched covers, plus the superelliptic-curve front end and
// the admissible-tuple census.

#include "branchlift/abelian_group.hpp"
#include "branchlift/cover.hpp"
#include "branchlift/enumerate.hpp"
#include "branchlift/errors.hpp"
#include "branchlift/homology.hpp"
#include "branchlift/lifting.hpp"
#include "branchlift/permutation.hpp"
#include "branchlift/superelliptic.hpp"
