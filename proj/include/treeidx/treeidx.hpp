// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "treeidx/canonical.hpp"
#include "treeidx/claim.hpp"
#include "treeidx/domain.hpp"
#include "treeidx/edge_list.hpp"
#include "treeidx/enumerate.hpp"
#include "treeidx/error.hpp"
#include "treeidx/expression.hpp"
#include "treeidx/families.hpp"
#include "treeidx/indices.hpp"
#include "treeidx/numeric.hpp"
#include "treeidx/prufer.hpp"
#include "treeidx/registry.hpp"
#include "treeidx/report_json.hpp"
#include "treeidx/sexpr.hpp"
#include "treeidx/structure.hpp"
#include "treeidx/tree.hpp"
#include "treeidx/verify.hpp"
