#pragma once

#include "bench.hpp"
#include "deadline.hpp"
#include "dfs_solver.hpp"
#include "graph.hpp"
#include "instgen.hpp"
#include "lp_model.hpp"
#include "modelgen.hpp"
#include "naive_decomp.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "presolve.hpp"
#include "rng.hpp"
#include "solution.hpp"
#include "vertex_set.hpp"
#include "witness_decomp.hpp"
