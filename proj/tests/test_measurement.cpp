#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qtvsim/errors.hpp"
#include "qtvsim/linalg.hpp"
#include "qtvsim/measurement.hpp"
#include "qtvsim/quantum_state.hpp"
#include "qtvsim/random.hpp"

using namespace qtvsim;
using qtvsim::testing::random_hermitian;
using qtvsim::testing::random_psd;
using qtvsim::testing::random_simplex;

TEST_CASE("qtv of basis states reads the diagonal") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = 1.0;
  ComplexVector e0 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  CHECK(qtv(e0, h).real() == doctest::Approx(2.0));
  CHECK(qtv(e0, h).imag() == doctest::Approx(0.0));
}

TEST_CASE("qtv of the balanced state averages the diagonal") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = 1.0;
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(qtv(plus, h).real() == doctest::Approx(1.5));
}

TEST_CASE("qtv against Hermitian matrices is real") {
  RandomStream stream(41, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = 2 + static_cast<int>(stream.next_uniform() * 8);
    ComplexMatrix h = random_hermitian(dim, stream);
    ComplexVector psi = gaussian_state(dim, stream);
    CHECK(std::abs(qtv(psi, h).imag()) < 1e-10);
  }
}

TEST_CASE("qtv validates its preconditions") {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  ComplexVector wrong_dim = ComplexVector::Ones(3) / std::sqrt(3.0);
  CHECK_THROWS_AS(qtv(wrong_dim, h), InvalidShapeError);
  ComplexVector unnormalized = ComplexVector::Ones(2);
  CHECK_THROWS_AS(qtv(unnormalized, h), ContractViolationError);
}

TEST_CASE("qtv_spectral evaluates the weighted absolute spectrum") {
  RealVector e(3);
  e << -2.0, 1.0, 0.5;
  RealVector w(3);
  w << 0.5, 0.25, 0.25;
  CHECK(qtv_spectral(e, w) == doctest::Approx(1.375));
}

TEST_CASE("qtv_spectral is bounded by the largest energy magnitude") {
  RandomStream stream(42, 0);
  for (int trial = 0; trial < 500; ++trial) {
    int k = 1 + static_cast<int>(stream.next_uniform() * 6);
    RealVector e(k);
    for (int i = 0; i < k; ++i) e(i) = stream.next_gaussian() * 5.0;
    RealVector w = random_simplex(k, stream);
    CHECK(qtv_spectral(e, w) <= e.cwiseAbs().maxCoeff() + 1e-12);
  }
}

TEST_CASE("qtv_spectral validates the simplex") {
  RealVector e(2);
  e << 1.0, 2.0;
  RealVector w(2);
  w << 0.5, 0.6;
  CHECK_THROWS_AS(qtv_spectral(e, w), ContractViolationError);
  w << -0.1, 1.1;
  CHECK_THROWS_AS(qtv_spectral(e, w), ContractViolationError);
}

TEST_CASE("qtv equals qtv_spectral on projected weights for PSD Hamiltonians") {
  RandomStream stream(43, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(stream.next_uniform() * 6);
    ComplexMatrix h = random_psd(dim, stream);
    ComplexVector psi = gaussian_state(dim, stream);
    EigenDecomposition eig = eig_hermitian(h);
    RealVector projected(dim);
    for (int k = 0; k < dim; ++k) {
      projected(k) = std::norm(eig.vectors.col(k).dot(psi));
    }
    projected /= projected.sum();  // unit norm already, this guards roundoff
    CHECK(qtv(psi, h).real() ==
          doctest::Approx(qtv_spectral(eig.values, projected)).epsilon(1e-9));
  }
}

TEST_CASE("rank1_operator endpoints") {
  ComplexMatrix h0 = rank1_operator(0.0);
  CHECK(h0(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(h0(0, 1)) == doctest::Approx(0.0));
  CHECK(std::abs(h0(1, 1)) == doctest::Approx(0.0));
  ComplexMatrix h1 = rank1_operator(kPi / 2.0);
  CHECK(h1(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(h1(0, 0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rank1_operator has eigenvalues one and zero") {
  for (double alpha : {0.1, 0.5, 1.0, 1.5}) {
    EigenDecomposition eig = eig_hermitian(rank1_operator(alpha));
    CHECK(eig.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.values(1) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("rank1_operator rejects angles outside the quarter turn") {
  CHECK_THROWS_AS(rank1_operator(-0.2), ContractViolationError);
  CHECK_THROWS_AS(rank1_operator(2.0), ContractViolationError);
}

TEST_CASE("perfect alignment reaches the maximum score one") {
  AlignmentResult r = best_alignment(kPi / 4.0, 0.5, 0.0, 1.0);
  CHECK(r.qtv_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.t_star == doctest::Approx(2.0 * kPi));
  AlignmentResult aligned_zero = best_alignment(0.0, 0.0, 0.0, 1.0);
  CHECK(aligned_zero.qtv_max == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("known misaligned value") {
  AlignmentResult r = best_alignment(kPi / 4.0, 0.25, 0.0, 1.0);
  CHECK(r.qtv_max == doctest::Approx(0.9330127018922193).epsilon(1e-12));
}

TEST_CASE("equal energies pin t_star to zero") {
  AlignmentResult r = best_alignment(0.3, 0.5, 2.0, 2.0);
  CHECK(r.t_star == 0.0);
}

TEST_CASE("best_alignment validates lambda1") {
  CHECK_THROWS_AS(best_alignment(0.3, -0.1, 0, 1), ContractViolationError);
  CHECK_THROWS_AS(best_alignment(0.3, 1.1, 0, 1), ContractViolationError);
}

TEST_CASE("reported maximum matches brute force over a period") {
  RandomStream stream(44, 0);
  for (int trial = 0; trial < 5; ++trial) {
    double alpha = stream.next_uniform() * kPi / 2.0;
    double lambda1 = stream.next_uniform();
    double e0 = 0.0, e1 = 1.0;
    AlignmentResult r = best_alignment(alpha, lambda1, e0, e1);

    RealVector w(2);
    w << 1.0 - lambda1, lambda1;
    if (w.minCoeff() <= 0.0) continue;
    RealVector e(2);
    e << e0, e1;
    SuperpositionState state(w, e, ComplexMatrix::Identity(2, 2));
    ComplexMatrix h = rank1_operator(alpha);
    double period = 2.0 * kPi / std::abs(e1 - e0);
    double best = -1.0;
    const int grid = 100000;
    for (int i = 0; i < grid; ++i) {
      double t = period * static_cast<double>(i) / grid;
      best = std::max(best, qtv(evaluate_state(state, t), h).real());
    }
    CHECK(r.qtv_max == doctest::Approx(best).epsilon(1e-6));
    // and t_star itself attains it
    CHECK(qtv(evaluate_state(state, r.t_star), h).real() ==
          doctest::Approx(r.qtv_max).epsilon(1e-9));
  }
}

TEST_CASE("classical expectation ignores the off-diagonals") {
  ComplexMatrix h(2, 2);
  h << 0.3, 0.9, 0.9, 0.7;
  CHECK(classical_expectation(h, 0.5) == doctest::Approx(0.5));
  h(0, 1) = h(1, 0) = 0.0;
  CHECK(classical_expectation(h, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("classical expectation of the alignment operator") {
  double alpha = 0.6, lambda1 = 0.3;
  ComplexMatrix h = rank1_operator(alpha);
  double c = std::cos(alpha), s = std::sin(alpha);
  CHECK(classical_expectation(h, lambda1) ==
        doctest::Approx((1 - lambda1) * c * c + lambda1 * s * s).epsilon(1e-12));
}

TEST_CASE("classical expectation validates shape and range") {
  CHECK_THROWS_AS(classical_expectation(ComplexMatrix::Identity(3, 3), 0.5),
                  InvalidShapeError);
  CHECK_THROWS_AS(classical_expectation(ComplexMatrix::Identity(2, 2), 1.5),
                  ContractViolationError);
}

TEST_CASE("quantum beats classical off the poles") {
  // phase alignment adds the interference term the diagonal benchmark
  // cannot see
  for (int ia = 1; ia <= 10; ++ia) {
    for (int il = 1; il <= 10; ++il) {
      double alpha = kPi / 2.0 * ia / 11.0;
      double lambda1 = static_cast<double>(il) / 11.0;
      double quantum = best_alignment(alpha, lambda1, 0.0, 1.0).qtv_max;
      double classical = classical_expectation(rank1_operator(alpha), lambda1);
      CHECK(quantum - classical >= 1e-6);
    }
  }
}
