#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vfc/algebra/matrix.hpp"
#include "vfc/kernels/modp.hpp"

using namespace vfc;
using namespace vfc::kernels;

namespace {

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 13, 101, 65521, 1000003, 2147483629u, 2147483647u};

std::vector<Backend> backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon})
    if (available(b)) out.push_back(b);
  return out;
}

std::vector<std::uint32_t> random_row(std::mt19937_64& g, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(g() % p);
  return v;
}

}  // namespace

TEST_CASE("scalar backend is always present") {
  CHECK(available(Backend::Scalar));
  CHECK(name(Backend::Scalar) == "scalar");
  MESSAGE("active backend: " << name(active_backend()));
}

TEST_CASE("shoup companion") {
  CHECK(shoup_precompute(1, 2) == 2147483648u);
  CHECK(shoup_precompute(0, 7) == 0);
}

TEST_CASE("every backend matches 64-bit arithmetic") {
  std::mt19937_64 g(42);
  for (Backend b : backends()) {
    const ModpKernels& k = kernels_for(b);
    for (std::uint32_t p : kPrimes) {
      for (std::size_t n = 0; n < 70; ++n) {
        auto dst = random_row(g, n, p);
        auto src = random_row(g, n, p);
        const auto c = static_cast<std::uint32_t>(g() % p);
        auto want = dst;
        for (std::size_t i = 0; i < n; ++i)
          want[i] = static_cast<std::uint32_t>((want[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
        k.axpy(dst.data(), src.data(), c, p, n);
        CHECK_MESSAGE(dst == want, name(b), " axpy p=", p, " n=", n);

        auto row = random_row(g, n, p);
        auto scaled = row;
        for (auto& x : scaled) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % p);
        k.scale(row.data(), c, p, n);
        CHECK_MESSAGE(row == scaled, name(b), " scale p=", p, " n=", n);
      }
      // Extreme multipliers.
      for (std::uint32_t c : {0u, 1u, p - 1}) {
        std::vector<std::uint32_t> dst(33, p - 1), src(33, p - 1);
        k.axpy(dst.data(), src.data(), c, p, dst.size());
        const auto want = static_cast<std::uint32_t>((p - 1 + static_cast<std::uint64_t>(c) * (p - 1)) % p);
        for (auto x : dst) CHECK(x == want);
      }
    }
  }
}

TEST_CASE("elimination agrees across backends") {
  const Backend saved = active_backend();
  std::mt19937_64 g(9);
  for (std::uint32_t p : {2u, 3u, 101u, 2147483647u}) {
    Field f = Field::characteristic(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + g() % 20, cols = 1 + g() % 40;
      Matrix m(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (g() % 3) m.set(r, c, f.from_int(static_cast<std::int64_t>(g() % p)));
      force_backend(Backend::Scalar);
      Matrix ref = m;
      auto ref_piv = reduce_row_echelon(ref);
      for (Backend b : backends()) {
        force_backend(b);
        Matrix got = m;
        auto piv = reduce_row_echelon(got);
        CHECK(piv == ref_piv);
        CHECK(got == ref);
        CHECK(rank(m) == ref_piv.size());
      }
    }
  }
  force_backend(saved);
}
