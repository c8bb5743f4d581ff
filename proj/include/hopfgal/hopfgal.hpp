#pragma once

#include "hopfgal/errors.hpp"
#include "hopfgal/exactla/enumerate.hpp"
#include "hopfgal/exactla/field.hpp"
#include "hopfgal/exactla/linmap.hpp"
#include "hopfgal/exactla/subspace.hpp"
#include "hopfgal/algebroid/balanced_tensor.hpp"
#include "hopfgal/algebroid/based_algebra.hpp"
#include "hopfgal/algebroid/bialgebroid.hpp"
#include "hopfgal/algebroid/validate.hpp"
#include "hopfgal/hopf/hopf.hpp"
#include "hopfgal/galois/galois.hpp"
#include "hopfgal/rewrite/case_studies.hpp"
#include "hopfgal/rewrite/polynomial.hpp"
#include "hopfgal/rewrite/reduction.hpp"
#include "hopfgal/fixtures.hpp"
#include "hopfgal/io/serialize.hpp"
