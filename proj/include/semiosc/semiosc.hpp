#pragma once

#include "model.hpp"
#include "specfun.hpp"
#include "jets.hpp"
#include "tridiagonal.hpp"
#include "quadrature.hpp"
#include "states.hpp"
#include "operators.hpp"
#include "matrices.hpp"
#include "report.hpp"
#include "checks.hpp"
#include "moments.hpp"
#include "limits.hpp"
#include "oracle.hpp"
