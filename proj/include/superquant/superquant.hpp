#pragma once

#include "superquant/contact.hpp"
#include "superquant/equivariant.hpp"
#include "superquant/errors.hpp"
#include "superquant/json_io.hpp"
#include "superquant/multi_index.hpp"
#include "superquant/nary_operator.hpp"
#include "superquant/polynomial.hpp"
#include "superquant/rational.hpp"
#include "superquant/sampling.hpp"
#include "superquant/supermath.hpp"
#include "superquant/superfunction.hpp"
#include "superquant/symbol_space.hpp"
#include "superquant/verification.hpp"
