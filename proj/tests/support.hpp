#pragma once

// Small helpers shared by the unit and acceptance tests: a reader for
// polynomials written as text, and seeded generators of test data.

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vfc/algebra/multi_form.hpp"
#include "vfc/error.hpp"
#include "vfc/construct/random.hpp"
#include "vfc/p1sheaf/complex.hpp"

namespace vfc::test {

// Parses sums of monomials such as "x0*x2 - 3*x1^2" (variables x0..xn) or
// "s^2*t + t^3" (variables s, t). Integer coefficients only.
struct TermText {
  long coeff = 1;
  std::vector<int> exps;
};

inline std::vector<TermText> parse_terms(const std::string& text, int nvars, bool binary) {
  std::vector<TermText> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> long {
    long v = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = 10 * v + (text[i++] - '0');
      any = true;
    }
    if (!any) throw std::runtime_error("number expected in '" + text + "'");
    return v;
  };
  skip();
  int sign = 1;
  while (i < text.size()) {
    skip();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    TermText t;
    t.coeff = sign;
    t.exps.assign(nvars, 0);
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.coeff *= number();
      } else {
        int var;
        if (binary) {
          var = text[i] == 's' ? 0 : text[i] == 't' ? 1 : -1;
          ++i;
        } else {
          if (text[i] != 'x') throw std::runtime_error("variable expected in '" + text + "'");
          ++i;
          var = static_cast<int>(number());
        }
        if (var < 0 || var >= nvars) throw std::runtime_error("bad variable in '" + text + "'");
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(number());
        }
        t.exps[var] += e;
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    out.push_back(t);
    sign = 1;
    skip();
  }
  return out;
}

inline MultiForm poly(Field f, int n, const std::string& text) {
  auto terms = parse_terms(text, n + 1, false);
  int deg = 0;
  for (int e : terms.front().exps) deg += e;
  MultiForm m = MultiForm::zero(f, n, deg);
  for (const auto& t : terms) {
    std::map<Exponent, Scalar> one{{t.exps, f.from_int(t.coeff)}};
    m += MultiForm::from_terms(f, n, deg, one);
  }
  return m;
}

inline BinaryForm bform(Field f, const std::string& text) {
  if (text == "0") return BinaryForm(f);
  auto terms = parse_terms(text, 2, true);
  BinaryForm b(f);
  for (const auto& t : terms) b += BinaryForm::monomial(f.from_int(t.coeff), t.exps[0], t.exps[1]);
  return b;
}

inline std::vector<Field> small_fields() {
  return {Field::characteristic(2), Field::characteristic(3), Field::characteristic(5), Field::rationals()};
}

inline BinaryForm random_bform(Rng& rng, Field f, int deg) {
  if (deg < 0) return BinaryForm(f);
  std::vector<Scalar> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rng.scalar(f));
  return BinaryForm::from_coeffs(f, c);
}

inline BinaryForm random_nonzero_bform(Rng& rng, Field f, int deg) {
  for (;;) {
    BinaryForm b = random_bform(rng, f, deg);
    if (!b.is_zero()) return b;
  }
}

/// Random map with entries of the required degrees (zero where negative).
inline SheafMap random_map(Rng& rng, Field f, const FreeSum& src, const FreeSum& tgt) {
  std::vector<std::vector<BinaryForm>> rows;
  for (int j = 0; j < tgt.rank(); ++j) {
    std::vector<BinaryForm> row;
    for (int i = 0; i < src.rank(); ++i) row.push_back(random_bform(rng, f, tgt.twists[j] - src.twists[i]));
    rows.push_back(std::move(row));
  }
  return SheafMap::make(f, src, tgt, std::move(rows));
}

inline FreeSum random_sum(Rng& rng, int rank, int lo, int hi) {
  FreeSum s;
  for (int i = 0; i < rank; ++i) s.twists.push_back(static_cast<int>(rng.range(lo, hi)));
  return s;
}

/// A random fiberwise surjective map, i.e. a valid two-term kernel complex.
inline FreeComplex random_kernel_complex(Rng& rng, Field f) {
  for (;;) {
    const int rt = static_cast<int>(rng.range(1, 2));
    const int rs = rt + static_cast<int>(rng.range(1, 3));
    FreeSum src = random_sum(rng, rs, -1, 2);
    FreeSum tgt = random_sum(rng, rt, 1, 4);
    SheafMap b = random_map(rng, f, src, tgt);
    if (fiber_surjective(b)) return FreeComplex::kernel_of(std::move(b));
  }
}

/// The code of the vfc::Error thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// A map given by its entries as text, rows indexed by target summands.
inline SheafMap smap(Field f, const FreeSum& src, const FreeSum& tgt, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<BinaryForm>> e;
  for (const auto& r : rows) {
    std::vector<BinaryForm> row;
    for (const auto& x : r) row.push_back(bform(f, x));
    e.push_back(std::move(row));
  }
  return SheafMap::make(f, src, tgt, std::move(e));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden(const std::string& name) { return std::string(VFC_GOLDEN_DIR) + "/" + name; }

}  // namespace vfc::test
