#include "dotshape/errors.hpp"

namespace dotshape {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::too_few_points: return "TooFewPoints";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::duplicate_points: return "DuplicatePoints";
    case errc::not_boundary_edge: return "NotBoundaryEdge";
    case errc::not_removable: return "NotRemovable";
    case errc::sequence_too_short: return "SequenceTooShort";
    case errc::zero_dc: return "ZeroDC";
    case errc::empty_selection: return "EmptySelection";
    case errc::k_too_small: return "KTooSmall";
    case errc::k_exceeds_outline: return "KExceedsOutline";
    case errc::bad_parameter: return "BadParameter";
    case errc::unknown_shape: return "UnknownShape";
    case errc::io_failure: return "IoFailure";
    case errc::malformed_file: return "MalformedFile";
    case errc::duplicate_name: return "DuplicateName";
  }
  return "Unknown";
}

}  // namespace dotshape
