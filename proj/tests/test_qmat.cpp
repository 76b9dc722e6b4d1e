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

#include <cmath>
#include <random>

#include "adcfef/error.hpp"
#include "adcfef/qmat.hpp"
#include "test_support.hpp"

namespace adcfef::qmat {
namespace {

using testing::random_hermitian;

TEST(ComplexMatrixTest, RejectsNonFiniteAndMisshapenInput) {
  EXPECT_THROW(ComplexMatrix(0), InvalidArgument);
  EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), DimensionMismatch);
  EXPECT_THROW(ComplexMatrix({{1.0, NAN}, {0.0, 1.0}}), InvalidArgument);
  ComplexMatrix m(2);
  EXPECT_THROW(m.set(0, 0, Complex{0.0, INFINITY}), InvalidArgument);
  EXPECT_THROW(m.set(2, 0, 1.0), InvalidArgument);
}

TEST(MatmulTest, IdentityTimesIdentity) {
  const auto id = ComplexMatrix::identity(2);
  EXPECT_EQ(matmul(id, id), id);
}

TEST(MatmulTest, UndampedKrausTimesAdjointIsIdentity) {
  const ComplexMatrix k1{{1.0, 0.0}, {0.0, std::sqrt(1.0 - 0.0)}};
  EXPECT_EQ(k1 * adjoint(k1), ComplexMatrix::identity(2));
}

TEST(MatmulTest, FullyDampedW0TimesAdjoint) {
  // W0 at p = 1 is diag(1, 0, 1, 0); direct multiplication gives the same.
  const auto w0 = ComplexMatrix::diagonal({1.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(w0 * adjoint(w0), ComplexMatrix::diagonal({1.0, 0.0, 1.0, 0.0}));
}

TEST(MatmulTest, DimensionMismatchThrows) {
  EXPECT_THROW(matmul(ComplexMatrix(2), ComplexMatrix(4)), DimensionMismatch);
  EXPECT_THROW(add(ComplexMatrix(2), ComplexMatrix(4)), DimensionMismatch);
}

TEST(AdjointTest, Examples) {
  const ComplexMatrix sym{{1.0, 2.0}, {2.0, 3.0}};
  EXPECT_EQ(adjoint(sym), sym);

  const double p = 0.36;
  const ComplexMatrix k2{{0.0, std::sqrt(p)}, {0.0, 0.0}};
  const auto k2d = adjoint(k2);
  EXPECT_EQ(k2d(1, 0), Complex(std::sqrt(p)));
  EXPECT_EQ(k2d(0, 1), Complex(0.0));

  const Complex i{0.0, 1.0};
  EXPECT_EQ(adjoint(i * ComplexMatrix::identity(2)), -i * ComplexMatrix::identity(2));
}

TEST(TensorTest, IdentityKronIdentity) {
  EXPECT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
}

TEST(TensorTest, IdentityKronK1MatchesPrintedW0) {
  const double p = 0.42;
  const double k = std::sqrt(1.0 - p);
  const ComplexMatrix k1{{1.0, 0.0}, {0.0, k}};
  EXPECT_EQ(tensor(ComplexMatrix::identity(2), k1), ComplexMatrix::diagonal({1.0, k, 1.0, k}));
}

TEST(TensorTest, K2KronIdentityPlacesEntriesOnSecondBlock) {
  const double p = 0.42;
  const double d = std::sqrt(p);
  const auto m = tensor(ComplexMatrix{{0.0, d}, {0.0, 0.0}}, ComplexMatrix::identity(2));
  ComplexMatrix expected(4);
  expected.set(0, 2, d);
  expected.set(1, 3, d);
  EXPECT_EQ(m, expected);
}

TEST(TensorTest, TraceIsMultiplicativeAndProductIsAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_hermitian(rng, 2);
    const auto b = random_hermitian(rng, 2);
    const auto c = random_hermitian(rng, 2);
    EXPECT_NEAR(std::abs(trace(tensor(a, b)) - trace(a) * trace(b)), 0.0, 1e-14);
    EXPECT_LE(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-14);
    EXPECT_EQ(adjoint(adjoint(tensor(a, b))), tensor(a, b));
  }
}

TEST(HermitianEigenTest, DiagonalInput) {
  const auto e = hermitian_eigen(ComplexMatrix::diagonal({1.0, 3.0}));
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 3.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 1.0);
}

TEST(HermitianEigenTest, PauliX) {
  const auto e = hermitian_eigen(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], -1.0, 1e-15);
}

TEST(HermitianEigenTest, OneDampedPhiPlusAgreesWithCharacteristicPolynomial) {
  const double p = 0.5;
  const double c = std::sqrt(1.0 - p);
  const auto rho = scale(ComplexMatrix{{1.0, 0.0, 0.0, c},
                                       {0.0, 0.0, 0.0, 0.0},
                                       {0.0, 0.0, p, 0.0},
                                       {c, 0.0, 0.0, 1.0 - p}},
                         0.5);
  // Oracle: the characteristic polynomial must equal (x - .75)(x - .25)x^2,
  // i.e. coefficients {0, 0, 0.1875, -1, 1}.
  const auto coeffs = testing::char_poly(rho);
  const std::array<double, 5> expected_coeffs{0.0, 0.0, 0.1875, -1.0, 1.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(coeffs[i] - expected_coeffs[i]), 0.0, 1e-14);

  const auto e = hermitian_eigen(rho);
  const std::array<double, 4> expected{0.75, 0.25, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e.eigenvalues[i], expected[i], 1e-14);
}

TEST(HermitianEigenTest, RejectsNonHermitianInput) {
  EXPECT_THROW(hermitian_eigen(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), HermiticityViolation);
}

TEST(HermitianEigenTest, DeterministicForIdenticalInput) {
  std::mt19937_64 rng(3);
  const auto a = random_hermitian(rng, 4);
  const auto e1 = hermitian_eigen(a);
  const auto e2 = hermitian_eigen(a);
  EXPECT_EQ(e1.eigenvalues, e2.eigenvalues);
  EXPECT_EQ(e1.eigenvectors, e2.eigenvectors);
}

TEST(HermitianEigenTest, ReconstructsRandomHermitianMatrices) {
  std::mt19937_64 rng(2026);
  double worst_recon = 0.0;
  double worst_ortho = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_hermitian(rng, 4);
    const auto e = hermitian_eigen(a);
    worst_recon = std::max(worst_recon, max_abs_diff(e.reconstruct(), a));
    const auto gram = adjoint(e.eigenvectors) * e.eigenvectors;
    worst_ortho = std::max(worst_ortho, max_abs_diff(gram, ComplexMatrix::identity(4)));
    ASSERT_TRUE(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
  }
  EXPECT_LE(worst_recon, kSpectralTol);
  EXPECT_LE(worst_ortho, kSpectralTol);
}

TEST(HermitianEigenTest, DegenerateAndLargeNormInputs) {
  const auto id = hermitian_eigen(ComplexMatrix::identity(4));
  for (double v : id.eigenvalues) EXPECT_DOUBLE_EQ(v, 1.0);

  std::mt19937_64 rng(11);
  const auto big = scale(random_hermitian(rng, 4), 1e6);
  const auto e = hermitian_eigen(big);
  EXPECT_LE(max_abs_diff(e.reconstruct(), big), 1e-6);
}

TEST(MakeDensityTest, AcceptsHalfIdentity) {
  EXPECT_NO_THROW(make_density(scale(ComplexMatrix::identity(2), 0.5)));
}

TEST(MakeDensityTest, RejectsTraceTwo) {
  try {
    make_density(ComplexMatrix::identity(2));
    FAIL() << "expected TraceViolation";
  } catch (const TraceViolation& e) {
    EXPECT_EQ(e.kind(), DensityViolation::Kind::Trace);
    EXPECT_DOUBLE_EQ(e.magnitude(), 1.0);
  }
}

TEST(MakeDensityTest, RejectsNegativeEigenvalue) {
  try {
    make_density(ComplexMatrix::diagonal({1.5, -0.5}));
    FAIL() << "expected PositivityViolation";
  } catch (const PositivityViolation& e) {
    EXPECT_NEAR(e.magnitude(), 0.5, 1e-15);
    EXPECT_NE(std::string(e.what()).find("eigenvalue"), std::string::npos);
  }
}

TEST(MakeDensityTest, RejectsNonHermitian) {
  EXPECT_THROW(make_density(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), HermiticityViolation);
}

TEST(MakeDensityTest, DoesNotRenormalize) {
  // The unscaled parallel-spin matrix has trace 2 and must be rejected as is.
  const double p = 0.3;
  const double c = std::sqrt(1.0 - p);
  const ComplexMatrix unscaled{{1.0, 0.0, 0.0, c},
                               {0.0, 0.0, 0.0, 0.0},
                               {0.0, 0.0, p, 0.0},
                               {c, 0.0, 0.0, 1.0 - p}};
  EXPECT_THROW(make_density(unscaled), TraceViolation);
  EXPECT_NO_THROW(make_density(scale(unscaled, 0.5)));
}

TEST(PartialTraceTest, BellStateReducesToMaximallyMixed) {
  const double h = std::sqrt(0.5);
  const std::array<Complex, 4> phi{h, 0.0, 0.0, h};
  const auto rho = pure_state(phi).matrix();
  const auto half = scale(ComplexMatrix::identity(2), 0.5);
  EXPECT_LE(max_abs_diff(trace_out_a(rho), half), 1e-15);
  EXPECT_LE(max_abs_diff(trace_out_b(rho), half), 1e-15);
}

TEST(PartialTraceTest, ProductStateRecoversFactors) {
  std::mt19937_64 rng(5);
  const auto a = make_density(outer(testing::random_pure(rng, 2))).matrix();
  const auto b = make_density(outer(testing::random_pure(rng, 2))).matrix();
  EXPECT_LE(max_abs_diff(trace_out_b(tensor(a, b)), a), 1e-15);
  EXPECT_LE(max_abs_diff(trace_out_a(tensor(a, b)), b), 1e-15);
}

TEST(PsdSqrtTest, SquaresBack) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_hermitian(rng, 4);
    const auto psd = h * h;
    const auto root = psd_sqrt(psd);
    EXPECT_LE(max_abs_diff(root * root, psd), 1e-12);
  }
  EXPECT_THROW(psd_sqrt(ComplexMatrix::diagonal({1.0, -1.0})), PositivityViolation);
}

}  // namespace
}  // namespace adcfef::qmat
