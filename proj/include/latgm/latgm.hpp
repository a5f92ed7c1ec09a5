#pragma once

// Exact-arithmetic toolkit for binary graphical models with
// distributive-lattice support: order ideals and Birkhoff posets, pairwise
// and global Markov binomials, the standard and per-clique monomial
// parametrizations with feasibility and facial tests, the constructive
// lattice-supported factorization, and Hibi ideals.

#include "latgm/ci.hpp"
#include "latgm/errors.hpp"
#include "latgm/factorize.hpp"
#include "latgm/graph.hpp"
#include "latgm/hibi.hpp"
#include "latgm/io.hpp"
#include "latgm/lattice.hpp"
#include "latgm/linalg.hpp"
#include "latgm/oracle.hpp"
#include "latgm/param.hpp"
#include "latgm/poset.hpp"
#include "latgm/rational.hpp"
#include "latgm/report.hpp"
#include "latgm/rng.hpp"
#include "latgm/subset.hpp"
