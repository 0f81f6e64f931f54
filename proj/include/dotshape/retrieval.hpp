#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dotshape/grouping.hpp"
#include "dotshape/shape_db.hpp"

namespace dotshape {

// One attempted sample size during retrieval.
struct RetrievalStep {
  int n = 0;
  bool skipped = false;  // boundary too short for a descriptor
  std::vector<std::pair<std::string, double>> distances;  // db order
  std::string best;      // shape with the smallest distance ("" if skipped)
  bool identity_ok = false;  // target is the unique minimum
  bool margin_ok = false;    // runner-up is more than 3x farther
};

struct RetrievalResult {
  bool success = false;
  int n = 0;  // succeeding sample size; last attempted one on failure
  std::vector<RetrievalStep> steps;
};

// Finds the smallest sample size n (30, 40, ... up to min(cap, outline size))
// at which the boundary recovered from n dots of shape `id` is closest to
// `id`'s own descriptor by a 3x margin over every other shape.  A run that
// exhausts the budget returns success = false (no-termination), not an error.
// Errors: unknown_shape, bad_parameter (db smaller than 2 shapes or cap < 30).
RetrievalResult retrieve(const ShapeDb& db, const std::string& id,
                         int cap = 500);

// Grouping quality of `method` on shape samples of increasing density.
struct ScorePoint {
  int k = 0;
  double xi = 0.0;
};

// Smallest grid size m such that xi >= threshold at every grid point >= m;
// empty when even the densest grid point fails.
std::optional<int> m_from_scores(std::span<const ScorePoint> scores,
                                 double threshold = 0.8);

// Evaluates xi on the K = 10, 20, ..., 200 grid and applies m_from_scores.
// The outline must support K = 200.  Propagates sampling/grouping errors.
std::optional<int> m_metric(const DenseOutline& outline, Method method,
                            double threshold = 0.8);

}  // namespace dotshape
