#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vfc/cigeom/json_io.hpp"
#include "vfc/error.hpp"
#include "vfc/construct/profile.hpp"

namespace vfc::cli {

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitCheckFailed = 3, kExitInternal = 4 };

int exit_code_for(ErrorCode code);

/// The verify-line record for one (profile, field) cell.
struct LineCheck {
  DegreeProfile profile;
  Field field;
  bool containment = false;
  bool smooth = false;
  bool log_smooth = false;
  bool contact = false;
  bool splitting_ok = false;
  std::optional<SplittingType> splitting;
  std::optional<SplittingType> expected;
  /// h^1 of the log tangent bundle twisted by O(-1) along the line.
  std::optional<long> h1_minus1;
  std::string presentation;
  std::string error;  // non-empty when a check threw

  bool wild() const { return !profile.tame; }
  bool passed() const { return containment && smooth && log_smooth && contact && splitting_ok && error.empty(); }
  /// "pass", "fail" or "wild".
  std::string status() const;
};

LineCheck check_line_instance(const DegreeProfile& profile, Field f);
json to_json(const LineCheck& c);

/// All (n, d, d_b) with nmin <= n <= nmax, l <= lmax, d_i >= 1, d_b >= 1 and
/// e <= n; the d_i run over ordered tuples.
struct ProfileShape {
  int n;
  std::vector<int> d;
  int d_b;
};
std::vector<ProfileShape> profile_shapes(int nmin, int nmax, int lmax);

/// Entry point of the vfc tool. Output goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vfc::cli
