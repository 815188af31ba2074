#pragma once

#include <optional>
#include <string>

#include "vfc/cigeom/model.hpp"

namespace vfc {

enum class FreenessStatus { VeryFree, Free, NotFree, NotLogSmooth };

std::string_view to_string(FreenessStatus s);

struct VerdictChecks {
  bool lies_on = false;
  bool smooth = false;
  bool log_smooth = false;
  bool tame = false;
  bool composite_zero = false;
};

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::NotLogSmooth;
  std::optional<SplittingType> splitting;
  std::vector<ContactRecord> contacts;
  VerdictChecks checks;
  bool a1_qualified = false;
  /// "kernel" or "middle": which presentation produced the splitting.
  std::string presentation;
};

/// Throws Precondition unless phi lies on X.
FreenessVerdict freeness_verdict(const CIModel& x, const RationalCurveMap& phi);

struct PresentationComparison {
  SplittingType middle;
  std::optional<SplittingType> kernel;  // absent when the kernel form is not available
  bool agree() const { return !kernel || *kernel == middle; }
};

/// Splitting types from both presentations. Needs a log smooth curve.
PresentationComparison compare_presentations(const CIModel& x, const RationalCurveMap& phi);

}  // namespace vfc
