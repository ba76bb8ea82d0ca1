#pragma once

// Exact-arithmetic toolkit for uniserial representations of the solvable
// Lie algebras <x> |x V with abelian V and x acting by a prescribed Jordan
// form over Q.

#include "uniserial/classify.hpp"
#include "uniserial/constructions.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/json.hpp"
#include "uniserial/lie.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/matrix.hpp"
#include "uniserial/rational.hpp"
#include "uniserial/sl2.hpp"
