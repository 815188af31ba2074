#include "vfc/cli/report.hpp"

namespace vfc::cli {

json report_header(const std::string& command, const std::vector<std::string>& argv, json inputs) {
  return json{{"schema", kSchema}, {"tool", "vfc"}, {"version", kToolVersion}, {"command", command}, {"argv", argv},
              {"inputs", std::move(inputs)}};
}

}  // namespace vfc::cli
