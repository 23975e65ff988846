#pragma once

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"
#include "goursat/mormul_codes.hpp"
#include "goursat/mz_recursion.hpp"
#include "goursat/plane_curves.hpp"
#include "goursat/records.hpp"
#include "goursat/text_format.hpp"
#include "goursat/theorem_formula.hpp"
#include "goursat/tower_census.hpp"
