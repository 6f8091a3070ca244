#ifndef FLAGTUTTE_FLAGTUTTE_HPP
#define FLAGTUTTE_FLAGTUTTE_HPP

#include "error.hpp"
#include "rational.hpp"
#include "subset.hpp"
#include "lattice.hpp"
#include "aux_polynomial.hpp"
#include "matroid.hpp"
#include "flag_matroid.hpp"
#include "cone.hpp"
#include "parallel.hpp"
#include "genfun.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "corpus.hpp"
#include "verify.hpp"

#endif  // FLAGTUTTE_FLAGTUTTE_HPP
