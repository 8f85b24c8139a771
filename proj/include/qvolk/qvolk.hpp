#pragma once

#include "bigrational.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "generating_functions.hpp"
#include "json_io.hpp"
#include "measure.hpp"
#include "padic.hpp"
#include "polynomial.hpp"
#include "qfield.hpp"
#include "rational_function.hpp"
#include "series.hpp"
#include "special_numbers.hpp"
#include "verify.hpp"
#include "zpoly.hpp"
