#pragma once

#include "thetalab/canonical.hpp"
#include "thetalab/census.hpp"
#include "thetalab/classify.hpp"
#include "thetalab/corpus.hpp"
#include "thetalab/diophantine.hpp"
#include "thetalab/error.hpp"
#include "thetalab/geometry.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/matrix_io.hpp"
#include "thetalab/orbit.hpp"
#include "thetalab/permutation.hpp"
#include "thetalab/standard_form.hpp"
