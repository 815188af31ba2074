#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "vfc/algebra/json_io.hpp"

namespace vfc::cli {

inline constexpr const char* kSchema = "vfc.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Skeleton shared by every report: schema, tool version, command echo and
/// inputs. Results and summary are filled in by the command.
json report_header(const std::string& command, const std::vector<std::string>& argv, json inputs);

/// fn applied to every item on `jobs` threads; results in input order.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, Fn fn, unsigned jobs) -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  std::vector<Out> out(items.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) out[i] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
        next = items.size();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace vfc::cli
