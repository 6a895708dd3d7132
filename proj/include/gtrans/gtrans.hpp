#pragma once

#include "counting.hpp"
#include "epsilon.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "fs_qd.hpp"
#include "g_transform.hpp"
#include "opbench.hpp"
#include "oracle.hpp"
#include "qd.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "rs.hpp"
#include "scalar.hpp"
#include "shanks.hpp"
#include "table.hpp"
