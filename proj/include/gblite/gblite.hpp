// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gblite/algorithms.hpp"
#include "gblite/containers.hpp"
#include "gblite/core.hpp"
#include "gblite/error.hpp"
#include "gblite/graph.hpp"
#include "gblite/io.hpp"
#include "gblite/ops.hpp"
#include "gblite/util.hpp"
#include "gblite/value.hpp"
