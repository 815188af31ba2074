#include "vfc/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vfc/cli/report.hpp"
#include "vfc/construct/enumerate.hpp"
#include "vfc/error.hpp"
#include "vfc/nodal/transform_instance.hpp"

namespace vfc::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Internal: return kExitInternal;
    case ErrorCode::Schema:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch: return kExitUsage;
    default: return kExitCheckFailed;
  }
}

std::string LineCheck::status() const {
  if (wild()) return "wild";
  return passed() ? "pass" : "fail";
}

LineCheck check_line_instance(const DegreeProfile& pr, Field f) {
  LineCheck c;
  c.profile = pr;
  c.field = f;
  try {
    LineInstance inst = prop_line_instance(pr, f);
    c.expected = inst.expected;
    c.containment = lies_on(inst.line, inst.model);
    if (!c.containment) return c;
    c.smooth = smooth_along(inst.line, inst.model);
    c.log_smooth = c.smooth && log_smooth_along(inst.line, inst.model);

    auto contacts = boundary_contacts(inst.line, inst.model);
    if (pr.d_b == 0) {
      c.contact = contacts.empty();
    } else if (contacts.size() == 1 && !contacts[0].in_boundary && contacts[0].factors.size() == 1) {
      const auto& [g, mult] = contacts[0].factors[0];
      c.contact = g.degree() == 1 && g.evaluate(Point::zero_of_t(f)).is_zero() && mult == pr.d_b &&
                  contacts[0].total == pr.d_b;
    }
    if (!c.log_smooth) return c;

    FreeComplex cx = (pr.tame && inst.model.k() >= 1)
                         ? FreeComplex::kernel_of(restrict_log_tangent_kernel(inst.model, inst.line))
                         : restrict_log_tangent_complex(inst.model, inst.line);
    c.presentation = cx.length() == 2 ? "kernel" : "middle";
    c.splitting = splitting_type(cx);
    c.h1_minus1 = cech_cohomology(cx, -1).h1;
    c.splitting_ok = !c.expected || *c.splitting == *c.expected;
  } catch (const Error& e) {
    c.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return c;
}

json to_json(const LineCheck& c) {
  json j{{"n", c.profile.n}, {"d", c.profile.d}, {"d_b", c.profile.d_b}, {"e", c.profile.e}, {"char", c.field.p()},
         {"tame", c.profile.tame}};
  j["checks"] = json{{"containment", c.containment},
                     {"smooth", c.smooth},
                     {"log_smooth", c.log_smooth},
                     {"contact", c.contact},
                     {"splitting", c.splitting_ok}};
  j["presentation"] = c.presentation.empty() ? json(nullptr) : json(c.presentation);
  j["splitting"] = c.splitting ? json(c.splitting->to_string()) : json(nullptr);
  j["expected"] = c.expected ? json(c.expected->to_string()) : json(nullptr);
  j["h1_twist_minus_1"] = c.h1_minus1 ? json(*c.h1_minus1) : json(nullptr);
  if (!c.error.empty()) j["error"] = c.error;
  j["status"] = c.status();
  return j;
}

std::vector<ProfileShape> profile_shapes(int nmin, int nmax, int lmax) {
  std::vector<ProfileShape> out;
  for (int n = std::max(1, nmin); n <= nmax; ++n)
    for (int l = 0; l <= lmax; ++l) {
      // Ordered tuples (d_1..d_l, d_b) of positive integers with sum <= n.
      std::vector<int> parts(l + 1, 1);
      for (;;) {
        int sum = 0;
        for (int x : parts) sum += x;
        if (sum <= n) out.push_back({n, std::vector<int>(parts.begin(), parts.end() - 1), parts.back()});
        std::size_t i = 0;
        for (; i < parts.size(); ++i) {
          ++parts[i];
          int s2 = 0;
          for (int x : parts) s2 += x;
          if (s2 <= n) break;
          parts[i] = 1;
        }
        if (i == parts.size()) break;
      }
    }
  return out;
}

namespace {

struct Globals {
  std::optional<std::uint32_t> characteristic;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  bool timing = false;
  unsigned jobs = 0;
};

std::vector<std::string> split_csv_ints(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const auto& item : split_csv_ints(s)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad integer '") + item + "' in " + what);
    }
  }
  return out;
}

Field field_of(std::uint32_t p) { return p == 0 ? Field::rationals() : Field::characteristic(p); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Schema, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, path + ": " + e.what());
  }
}

unsigned job_count(const Globals& g) {
  if (g.jobs) return g.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string fmt_profile(const DegreeProfile& p) {
  std::string d;
  for (std::size_t i = 0; i < p.d.size(); ++i) d += (i ? "," : "") + std::to_string(p.d[i]);
  return "n=" + std::to_string(p.n) + " d=(" + d + ") d_b=" + std::to_string(p.d_b);
}

std::string line_text(const LineCheck& c) {
  std::string s = fmt_profile(c.profile) + " char=" + std::to_string(c.field.p()) + ": " + c.status();
  if (c.splitting) s += "  " + c.splitting->to_string();
  if (c.expected && !c.splitting_ok && !c.wild()) s += " (expected " + c.expected->to_string() + ")";
  if (!c.error.empty()) s += "  [" + c.error + "]";
  return s;
}

class Output {
 public:
  Output(const Globals& g, std::ostream& fallback) : json_(g.format == "json") {
    if (!g.out_path.empty()) {
      file_.open(g.out_path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + g.out_path);
      os_ = &file_;
    } else {
      os_ = &fallback;
    }
  }
  bool json_mode() const { return json_; }
  std::ostream& os() { return *os_; }
  void document(const json& j) { *os_ << j.dump(2) << "\n"; }
  void line(const json& j) {
    *os_ << j.dump() << "\n";
    os_->flush();
  }

 private:
  bool json_;
  std::ofstream file_;
  std::ostream* os_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int cmd_verify_line(const Globals& g, const std::vector<std::string>& argv, int n, const std::string& d, int db, bool wild,
                    std::ostream& out) {
  const auto t0 = Clock::now();
  const std::uint32_t p = g.characteristic.value_or(0);
  DegreeProfile pr = validate_profile(n, parse_int_list(d, "--d"), db, p);
  LineCheck c = check_line_instance(pr, field_of(p));
  json rep = report_header("verify-line", argv, json{{"n", n}, {"d", pr.d}, {"d_b", db}, {"char", p}, {"wild", wild}});
  rep["results"] = json::array({to_json(c)});
  rep["summary"] = json{{"status", c.status()}};
  if (g.timing) rep["wall_time_s"] = seconds_since(t0);
  Output o(g, out);
  if (o.json_mode()) {
    o.document(rep);
  } else {
    o.os() << line_text(c) << "\n";
  }
  if (c.wild()) return wild ? kExitOk : kExitCheckFailed;
  return c.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_scan(const Globals& g, const std::vector<std::string>& argv, int nmin, int nmax, int lmax, const std::string& chars,
             std::ostream& out) {
  const auto t0 = Clock::now();
  std::vector<int> primes = parse_int_list(chars, "--chars");
  std::vector<std::pair<ProfileShape, std::uint32_t>> cells;
  for (const auto& s : profile_shapes(nmin, nmax, lmax))
    for (int p : primes) {
      if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative characteristic");
      cells.push_back({s, static_cast<std::uint32_t>(p)});
    }
  for (int p : primes) field_of(static_cast<std::uint32_t>(p));  // validate early

  Output o(g, out);
  json header = report_header("scan", argv, json{{"nmin", nmin}, {"nmax", nmax}, {"lmax", lmax}, {"chars", primes}});
  if (o.json_mode()) o.line(json{{"type", "header"}, {"report", header}});

  long pass = 0, fail = 0, wild = 0;
  const unsigned jobs = job_count(g);
  const std::size_t chunk = std::max<std::size_t>(1, 8 * jobs);
  for (std::size_t lo = 0; lo < cells.size(); lo += chunk) {
    std::vector<std::pair<ProfileShape, std::uint32_t>> part(cells.begin() + lo,
                                                             cells.begin() + std::min(cells.size(), lo + chunk));
    auto results = parallel_map(part, [](const std::pair<ProfileShape, std::uint32_t>& cell) {
      const auto& [s, p] = cell;
      return check_line_instance(validate_profile(s.n, s.d, s.d_b, p), field_of(p));
    }, jobs);
    for (const auto& c : results) {
      const std::string st = c.status();
      (st == "pass" ? pass : st == "wild" ? wild : fail)++;
      if (o.json_mode()) {
        json rec{{"type", "cell"}};
        rec.update(to_json(c));
        o.line(rec);
      } else {
        o.os() << line_text(c) << "\n";
      }
    }
  }
  json summary{{"type", "summary"}, {"cells", static_cast<long>(cells.size())}, {"pass", pass}, {"fail", fail}, {"wild", wild}};
  if (g.timing) summary["wall_time_s"] = seconds_since(t0);
  if (o.json_mode()) {
    o.line(summary);
  } else {
    o.os() << "cells=" << cells.size() << " pass=" << pass << " fail=" << fail << " wild=" << wild << "\n";
  }
  return fail == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_splitting(const Globals& g, const std::vector<std::string>& argv, const std::string& path, std::ostream& out) {
  const auto t0 = Clock::now();
  json doc = read_json_file(path);
  json rep = report_header("splitting", argv, json{{"file", path}});
  json result;
  int code = kExitOk;
  if (doc.contains("complex")) {
    FreeComplex cx = complex_from_json(doc["complex"], "/complex");
    ComplexValidity v = check_validity(cx);
    result["valid"] = v.ok();
    if (!v.ok()) {
      result["status"] = "invalid_complex";
      result["failure"] = v.failure();
      code = kExitCheckFailed;
    } else {
      SplittingType t = splitting_type(cx);
      result["status"] = "ok";
      result["splitting"] = to_json(t);
    }
  } else {
    CIModel x = model_from_json(jsonio::member(doc, "model", ""), "/model");
    RationalCurveMap phi = curve_from_json(jsonio::member(doc, "curve", ""), "/curve");
    if (phi.n() != x.n) schema_error("/curve/n", "curve and model live in different P^n");
    if (phi.field() != x.field) schema_error("/curve/char", "curve and model over different fields");
    if (!lies_on(phi, x)) {
      result["status"] = "containment_failure";
      json bad = json::array();
      for (int i = 0; i < x.l(); ++i)
        if (!x.equations[i].substitute(phi).is_zero()) bad.push_back(i + 1);
      result["nonvanishing_equations"] = bad;
      code = kExitCheckFailed;
    } else {
      FreenessVerdict v = freeness_verdict(x, phi);
      result["status"] = "ok";
      result["verdict"] = to_json(v);
      if (v.status != FreenessStatus::NotLogSmooth) {
        PresentationComparison pc = compare_presentations(x, phi);
        result["presentations"] = json{{"middle", to_json(pc.middle)},
                                       {"kernel", pc.kernel ? to_json(*pc.kernel) : json(nullptr)},
                                       {"agree", pc.agree()}};
        if (!pc.agree()) code = kExitInternal;
      }
    }
  }
  rep["results"] = json::array({result});
  rep["summary"] = json{{"status", result["status"]}};
  if (g.timing) rep["wall_time_s"] = seconds_since(t0);
  Output o(g, out);
  if (o.json_mode()) {
    o.document(rep);
  } else {
    o.os() << "status: " << result["status"].get<std::string>() << "\n";
    if (result.contains("verdict")) {
      const json& v = result["verdict"];
      o.os() << "verdict: " << v["status"].get<std::string>() << "\n";
      if (!v["splitting"].is_null()) o.os() << "splitting: " << v["splitting"]["text"].get<std::string>() << "\n";
    }
    if (result.contains("splitting")) o.os() << "splitting: " << result["splitting"]["text"].get<std::string>() << "\n";
  }
  return code;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 of (seed, i): independent, replayable per-instance seeds.
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ull + i + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int cmd_nodal(const Globals& g, const std::vector<std::string>& argv, int count, int rmax, std::ostream& out) {
  const auto t0 = Clock::now();
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "--count must be non-negative");
  const std::uint32_t p = g.characteristic.value_or(101);
  const Field f = field_of(p);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < count; ++i) seeds.push_back(instance_seed(g.seed, static_cast<std::uint64_t>(i)));
  struct Item {
    TransformInstance inst;
    VanishingReport rep;
  };
  auto items = parallel_map(seeds, [&](std::uint64_t s) {
    TransformInstance inst = random_transform_instance(rmax, f, s);
    return Item{inst, verify_vanishings(inst)};
  }, job_count(g));

  json results = json::array();
  long pass = 0, fail = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [inst, r] = items[i];
    json rec{{"index", static_cast<long>(i)}, {"seed", inst.seed}, {"r", inst.r}, {"k", inst.k}, {"F", inst.F.degrees},
             {"T", inst.T.degrees}, {"h1_right", r.h1_right}, {"h1_left", r.h1_left}, {"h1_total", r.h1_total},
             {"pass", r.all_zero()}};
    if (!r.all_zero()) {
      rec["instance"] = to_json(inst);
      ++fail;
    } else {
      ++pass;
    }
    results.push_back(rec);
  }
  json rep = report_header("nodal", argv, json{{"count", count}, {"rmax", rmax}, {"seed", g.seed}, {"char", p}});
  rep["results"] = results;
  rep["summary"] = json{{"instances", count}, {"pass", pass}, {"fail", fail}};
  if (g.timing) rep["wall_time_s"] = seconds_since(t0);
  Output o(g, out);
  if (o.json_mode()) {
    o.document(rep);
  } else {
    for (const auto& rec : results)
      if (!rec["pass"].get<bool>()) o.os() << "counterexample: " << rec["instance"].dump() << "\n";
    o.os() << "instances=" << count << " pass=" << pass << " fail=" << fail << "\n";
  }
  return fail == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const Globals& g, const std::vector<std::string>& argv, const std::string& path, long max_count,
                  std::ostream& out) {
  const auto t0 = Clock::now();
  if (max_count < 0) throw Error(ErrorCode::InvalidArgument, "--max must be non-negative");
  json doc = read_json_file(path);
  CIModel x = model_from_json(doc.contains("model") ? doc["model"] : doc, doc.contains("model") ? "/model" : "");
  if (x.field.is_rational()) throw Error(ErrorCode::InvalidArgument, "line enumeration needs a finite field");
  auto found = enumerate_lines(x, static_cast<std::size_t>(max_count));
  Output o(g, out);
  if (o.json_mode()) o.line(json{{"type", "header"}, {"report", report_header("enumerate-lines", argv, json{{"file", path}, {"max", max_count}})}});
  for (const auto& fl : found) {
    if (o.json_mode()) {
      o.line(json{{"type", "line"}, {"line", to_json(fl.line)}, {"verdict", to_json(fl.verdict)}});
    } else {
      std::string comps;
      for (const auto& c : fl.line.components()) comps += (comps.empty() ? "" : ", ") + c.to_string();
      o.os() << "(" << comps << "): " << to_string(fl.verdict.status)
             << (fl.verdict.splitting ? "  " + fl.verdict.splitting->to_string() : "") << "\n";
    }
  }
  json summary{{"type", "summary"}, {"lines", static_cast<long>(found.size())}};
  if (g.timing) summary["wall_time_s"] = seconds_since(t0);
  if (o.json_mode()) {
    o.line(summary);
  } else {
    o.os() << "lines=" << found.size() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Splitting types, free lines and nodal vanishings on P^1", "vfc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint32_t ch = 0;
  auto* char_opt = app.add_option("--char", ch, "field characteristic (0 = rationals)");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out_path, "write the report to this file");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", g.timing, "record wall time in the report");
  app.add_option("--jobs", g.jobs, "worker threads (default: all cores)");

  int n = 0, db = 0;
  std::string d;
  bool wild = false;
  auto* vl = app.add_subcommand("verify-line", "check the explicit free line of a profile");
  vl->add_option("--n", n, "ambient dimension")->required();
  vl->add_option("--d", d, "equation degrees, comma separated");
  vl->add_option("--db", db, "boundary degree")->required();
  vl->add_flag("--wild", wild, "accept a wild boundary as a reportable outcome");

  int nmin = 1, nmax = 5, lmax = 2;
  std::string chars = "2,3,5";
  auto* sc = app.add_subcommand("scan", "verify-line over a grid of profiles and characteristics");
  sc->add_option("--nmin", nmin);
  sc->add_option("--nmax", nmax);
  sc->add_option("--lmax", lmax);
  sc->add_option("--chars", chars, "comma separated characteristics");

  std::string file;
  auto* sp = app.add_subcommand("splitting", "splitting type and verdict from a JSON file");
  sp->add_option("file", file, "model + curve (or complex) JSON")->required();

  int count = 200, rmax = 6;
  auto* nd = app.add_subcommand("nodal", "vanishing suite for elementary transforms on nodal curves");
  nd->add_option("--count", count);
  nd->add_option("--rmax", rmax);

  long max_count = 1000;
  std::string efile;
  auto* en = app.add_subcommand("enumerate-lines", "all F_p-lines on a model");
  en->add_option("file", efile, "model JSON")->required();
  en->add_option("--max", max_count);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (char_opt->count() > 0) g.characteristic = ch;

  try {
    if (*vl) return cmd_verify_line(g, args, n, d, db, wild, out);
    if (*sc) return cmd_scan(g, args, nmin, nmax, lmax, chars, out);
    if (*sp) return cmd_splitting(g, args, file, out);
    if (*nd) return cmd_nodal(g, args, count, rmax, out);
    if (*en) return cmd_enumerate(g, args, efile, max_count, out);
  } catch (const Error& e) {
    err << json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace vfc::cli
