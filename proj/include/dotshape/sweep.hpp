#pragma once

#include <string>
#include <vector>

#include "dotshape/grouping.hpp"
#include "dotshape/shape_db.hpp"

namespace dotshape {

struct SweepOptions {
  std::vector<Method> methods = {Method::mst, Method::surface};
  int kmin = 10;
  int kmax = 200;
  int kstep = 10;
  int retrieval_cap = 500;
  // Real runtimes make reruns differ byte for byte, so timing is opt-in and
  // the runtime_ms column is 0.000 by default.
  bool timing = false;
};

// Runs every (shape, method, K) cell and returns the full CSV, columns
// shape,method,K,xi,hamiltonian,runtime_ms, rows sorted by shape name,
// method name, then K.  Per-cell failures are recorded in-row as
// "error:<Kind>" markers and the sweep continues.  A summary block of
// '#'-prefixed lines follows the rows: per shape and method the m-metric
// ("-" when never stabilizing), and per shape the retrieval sample size
// ("NO-TERMINATION" when the budget runs out; only when surface is among
// the methods).
std::string run_sweep(const ShapeDb& db, const SweepOptions& opts);

}  // namespace dotshape
