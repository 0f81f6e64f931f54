#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "dotshape/descriptor.hpp"
#include "dotshape/shapes.hpp"

namespace dotshape {

struct ShapeRecord {
  DenseOutline outline;
  Descriptor descriptor;
};

// In-memory shape collection; order is load order (lexicographic file names)
// and names are unique.
struct ShapeDb {
  std::vector<ShapeRecord> shapes;
};

const ShapeRecord* find_shape(const ShapeDb& db, std::string_view name);

// Loads every *.json file in dir (lexicographic order).  Each file holds one
// shape: {"name", "points", optional "descriptor"}; a missing descriptor is
// recomputed from the outline.  Errors: io_failure (unreadable dir/file),
// malformed_file (bad JSON, invalid outline, wrong descriptor arity),
// duplicate_name.
ShapeDb load_db(const std::filesystem::path& dir);

// Writes one <name>.json per shape, creating dir if needed.  Descriptors are
// stored with full round-trip precision.  Errors: io_failure, bad_parameter
// (name not filesystem-safe).
void save_db(const ShapeDb& db, const std::filesystem::path& dir);

// Convenience: a database of builtin outlines with computed descriptors.
ShapeDb db_from_builtins(std::span<const Builtin> kinds, int n = 720);

// Loads a single shape file (same schema as db entries).
ShapeRecord load_shape_file(const std::filesystem::path& file);

}  // namespace dotshape
