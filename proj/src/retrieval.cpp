#include "dotshape/retrieval.hpp"

#include <algorithm>

#include "dotshape/errors.hpp"

namespace dotshape {

RetrievalResult retrieve(const ShapeDb& db, const std::string& id, int cap) {
  const ShapeRecord* target = find_shape(db, id);
  if (target == nullptr) fail(errc::unknown_shape, "no shape named '" + id + "'");
  if (db.shapes.size() < 2)
    fail(errc::bad_parameter, "retrieval needs at least 2 shapes");
  if (cap < 30) fail(errc::bad_parameter, "cap must be at least 30");

  const int outline_size = static_cast<int>(target->outline.points.size());
  const int limit = std::min(cap, outline_size);

  RetrievalResult result;
  for (int n = 30; n <= limit; n += 10) {
    RetrievalStep step;
    step.n = n;
    result.n = n;

    const SampledShape sample = sample_uniform(target->outline, n);
    const GroupingResult grouping = group_surface(sample.points);
    if (grouping.boundary.size() < 21) {
      step.skipped = true;
      result.steps.push_back(std::move(step));
      continue;
    }

    std::vector<Point2> boundary_pts;
    boundary_pts.reserve(grouping.boundary.size());
    for (const int v : grouping.boundary)
      boundary_pts.push_back(sample.points[static_cast<size_t>(v)]);
    const Descriptor desc = descriptor(boundary_pts);

    double self = 0.0;
    double best_other = 0.0;
    bool first_other = true;
    double best_dist = 0.0;
    for (const auto& shape : db.shapes) {
      const double d = distance(desc, shape.descriptor);
      step.distances.emplace_back(shape.outline.name, d);
      if (step.best.empty() || d < best_dist) {
        step.best = shape.outline.name;
        best_dist = d;
      }
      if (shape.outline.name == id) {
        self = d;
      } else if (first_other || d < best_other) {
        best_other = d;
        first_other = false;
      }
    }

    // Unique minimum: strictly closer than every other shape.
    step.identity_ok = self < best_other;
    // 3x margin; a zero self-distance with a positive runner-up passes.
    step.margin_ok = best_other > 3.0 * self;
    const bool done = step.identity_ok && step.margin_ok;
    result.steps.push_back(std::move(step));
    if (done) {
      result.success = true;
      return result;
    }
  }
  result.success = false;
  return result;
}

std::optional<int> m_from_scores(std::span<const ScorePoint> scores,
                                 double threshold) {
  std::optional<int> best;
  for (size_t i = scores.size(); i-- > 0;) {
    if (scores[i].xi >= threshold)
      best = scores[i].k;
    else
      break;
  }
  return best;
}

std::optional<int> m_metric(const DenseOutline& outline, Method method,
                            double threshold) {
  std::vector<ScorePoint> scores;
  scores.reserve(20);
  for (int k = 10; k <= 200; k += 10) {
    const SampledShape sample = sample_uniform(outline, k);
    const GroupingResult result = method == Method::surface
                                      ? group_surface(sample.points)
                                      : group_mst(sample.points);
    scores.push_back({k, grouping_score(result, sample.truth_edges)});
  }
  return m_from_scores(scores, threshold);
}

}  // namespace dotshape
