#pragma once

#include "lol/errors.hpp"
#include "lol/numerics.hpp"
#include "lol/random.hpp"
#include "lol/observables.hpp"
#include "lol/models.hpp"
#include "lol/structure.hpp"
#include "lol/axioms.hpp"
#include "lol/poset.hpp"
#include "lol/model_structures.hpp"
#include "lol/matrix_model.hpp"
#include "lol/io.hpp"
#include "lol/verify.hpp"
