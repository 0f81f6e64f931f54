#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dotshape/grouping.hpp"
#include "dotshape/shapes.hpp"

namespace dotshape {

// On-disk point set: the dots of one stimulus plus optional ground truth.
// JSON object {"source": string|null, "k": int, "points": [[x, y], ...],
// "truth_edges": [[i, j], ...]|null}.
struct PointSetFile {
  std::optional<std::string> source;
  int k = 0;
  std::vector<Point2> points;
  std::optional<std::vector<Edge>> truth_edges;
};

PointSetFile pointset_from_sample(const SampledShape& sample);

// Errors: io_failure, malformed_file (bad JSON, k mismatch, edge index out
// of range).
PointSetFile read_pointset(const std::filesystem::path& file);
void write_pointset(const PointSetFile& ps, const std::filesystem::path& file);

// Textual grouping record (JSON) for one grouping run; the xi field is
// present only when truth edges were available.
std::string grouping_record(const GroupingResult& result,
                            std::optional<double> xi);

}  // namespace dotshape
