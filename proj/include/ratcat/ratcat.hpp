#pragma once

#include "errors.hpp"
#include "poly.hpp"
#include "paths.hpp"
#include "ptn.hpp"
#include "pf.hpp"
#include "symf.hpp"
#include "parallel.hpp"
#include "frob.hpp"
#include "golden.hpp"
#include "verify.hpp"
