#pragma once

#include "decycle/bounds.hpp"
#include "decycle/certify.hpp"
#include "decycle/enumerate.hpp"
#include "decycle/extremal.hpp"
#include "decycle/forest_dp.hpp"
#include "decycle/generators.hpp"
#include "decycle/graph.hpp"
#include "decycle/hamiltonian.hpp"
#include "decycle/line_graph.hpp"
#include "decycle/oracle.hpp"
#include "decycle/report.hpp"
#include "decycle/tree.hpp"
#include "decycle/union_find.hpp"
#include "decycle/verify.hpp"
