#pragma once

#include "qqsh/error.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"
#include "qqsh/perm.hpp"
#include "qqsh/report.hpp"
#include "qqsh/matrix.hpp"
#include "qqsh/braided.hpp"
#include "qqsh/products.hpp"
#include "qqsh/dualco.hpp"
#include "qqsh/rotabaxter.hpp"
#include "qqsh/tridend.hpp"
#include "qqsh/builtins.hpp"
#include "qqsh/json_io.hpp"
#include "qqsh/suites.hpp"
