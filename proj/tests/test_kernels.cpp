// Copyright 2026 The adcfef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "adcfef/error.hpp"
#include "adcfef/kernels.hpp"
#include "test_support.hpp"

namespace adcfef::kernels {
namespace {

struct Batch {
  std::array<std::vector<double>, 4> re, im;
  std::vector<std::vector<qmat::Complex>> vectors;

  StateBatch4 view() const {
    StateBatch4 b;
    for (int j = 0; j < 4; ++j) {
      b.re[j] = re[j];
      b.im[j] = im[j];
    }
    return b;
  }
};

Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = testing::random_pure(rng, 4);
    for (int j = 0; j < 4; ++j) {
      b.re[j].push_back(v[j].real());
      b.im[j].push_back(v[j].imag());
    }
    b.vectors.push_back(std::move(v));
  }
  return b;
}

TEST(KernelDispatchTest, ScalarAlwaysAvailable) {
  EXPECT_TRUE(available(Backend::Scalar));
  const auto all = available_backends();
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), Backend::Scalar);
  EXPECT_TRUE(available(active_backend()));
  EXPECT_EQ(to_string(Backend::Avx2), "avx2");
}

TEST(KernelDispatchTest, RejectsMismatchedLengths) {
  std::vector<double> a(5), b(4), out(5);
  EXPECT_THROW(fef_two_damped_phi(Backend::Scalar, a, b, out), DimensionMismatch);
  EXPECT_THROW(fef_one_damped(Backend::Scalar, a, b), DimensionMismatch);
  StateBatch4 ragged;
  std::vector<double> four(4), three(3);
  for (int j = 0; j < 4; ++j) {
    ragged.re[j] = four;
    ragged.im[j] = j == 2 ? std::span<const double>(three) : std::span<const double>(four);
  }
  HermitianForm4 h;
  EXPECT_THROW(max_quadratic_form(Backend::Scalar, h, ragged), DimensionMismatch);
  EXPECT_THROW(HermitianForm4::from(qmat::ComplexMatrix(2)), DimensionMismatch);
}

TEST(ScalarKernelTest, QuadraticFormMatchesDirectExpectation) {
  std::mt19937_64 rng(17);
  const auto h = testing::random_hermitian(rng, 4);
  const auto batch = random_batch(rng, 37);
  std::vector<double> out(37);
  quadratic_forms(Backend::Scalar, HermitianForm4::from(h), batch.view(), out);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_NEAR(out[i], testing::expectation(h, batch.vectors[i]), 1e-14);
  }
}

TEST(ScalarKernelTest, EmptyBatchMaxIsMinusInfinity) {
  StateBatch4 empty;
  EXPECT_EQ(max_quadratic_form(Backend::Scalar, HermitianForm4{}, empty),
            -std::numeric_limits<double>::infinity());
}

// Every backend agrees with the scalar reference, including ragged tails.
class BackendEquivalenceTest : public ::testing::TestWithParam<Backend> {};

TEST_P(BackendEquivalenceTest, QuadraticForms) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 63u, 1024u, 1027u}) {
    const auto h = HermitianForm4::from(testing::random_hermitian(rng, 4));
    const auto batch = random_batch(rng, n);
    std::vector<double> ref(n), got(n);
    quadratic_forms(Backend::Scalar, h, batch.view(), ref);
    quadratic_forms(GetParam(), h, batch.view(), got);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-14) << "n=" << n;
    if (n > 0) {
      EXPECT_NEAR(max_quadratic_form(GetParam(), h, batch.view()),
                  max_quadratic_form(Backend::Scalar, h, batch.view()), 1e-14);
    }
  }
}

TEST_P(BackendEquivalenceTest, ClosedForms) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t n : {1u, 2u, 7u, 8u, 1001u}) {
    std::vector<double> pa(n), pb(n);
    for (std::size_t i = 0; i < n; ++i) {
      pa[i] = unit(rng);
      pb[i] = unit(rng);
    }
    pa[0] = 0.0;
    pb[n - 1] = 1.0;
    std::vector<double> ref(n), got(n);

    fef_one_damped(Backend::Scalar, pb, ref);
    fef_one_damped(GetParam(), pb, got);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-15);

    fef_two_damped_phi(Backend::Scalar, pa, pb, ref);
    fef_two_damped_phi(GetParam(), pa, pb, got);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-15);

    fef_two_damped_psi(Backend::Scalar, pa, pb, ref);
    fef_two_damped_psi(GetParam(), pa, pb, got);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-15);
  }
}

INSTANTIATE_TEST_SUITE_P(AvailableBackends, BackendEquivalenceTest,
                         ::testing::ValuesIn(available_backends()),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(KernelDispatchTest, UnavailableBackendThrows) {
  if (available(Backend::Avx2)) GTEST_SKIP() << "AVX2 present on this CPU";
  std::vector<double> p(4), out(4);
  EXPECT_THROW(fef_one_damped(Backend::Avx2, p, out), InvalidArgument);
}

}  // namespace
}  // namespace adcfef::kernels
