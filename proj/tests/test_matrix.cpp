#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "objectify/matrix.hpp"
#include "objectify/random.hpp"

using namespace objectify;

namespace {

const ComplexMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kProj0{{1.0, 0.0}, {0.0, 0.0}};

ComplexMatrix plus_state() {
  return ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}};
}

}  // namespace

TEST_CASE("tensor identity and diagonal cases") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(tensor(i2, i2).approx_equal(ComplexMatrix::identity(4), 0.0));

  std::vector<double> d1{1.0, 2.0}, d2{1.0, 0.0};
  ComplexMatrix t = tensor(ComplexMatrix::diagonal(d1),
                           ComplexMatrix::diagonal(d2));
  std::vector<double> expect{1.0, 0.0, 2.0, 0.0};
  CHECK(t.approx_equal(ComplexMatrix::diagonal(expect), 0.0));
}

TEST_CASE("tensor index convention: sigma_x (x) |0><0|") {
  // Direct index expansion puts the only nonzero entries at (0,2) and (2,0).
  ComplexMatrix t = tensor(kSigmaX, kProj0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool hot = (i == 0 && j == 2) || (i == 2 && j == 0);
      CHECK(std::abs(t(i, j) - cplx(hot ? 1.0 : 0.0)) < 1e-15);
    }
}

TEST_CASE("tensor is associative up to reindexing") {
  rnd::Rng rng(11);
  ComplexMatrix a = rnd::ginibre(rng, 2, 3);
  ComplexMatrix b = rnd::ginibre(rng, 3, 2);
  ComplexMatrix c = rnd::ginibre(rng, 2, 2);
  CHECK(tensor(tensor(a, b), c).approx_equal(tensor(a, tensor(b, c)), 1e-12));
}

TEST_CASE("partial trace basics") {
  rnd::Rng rng(5);
  ComplexMatrix rho = rnd::state(rng, 3).matrix;
  ComplexMatrix xi = rnd::state(rng, 2).matrix;
  // product state: tr_2[rho (x) xi] = tr[xi] rho
  ComplexMatrix t = tensor(rho, xi);
  CHECK(partial_trace(t, 3, 2, Keep::First).approx_equal(rho, 1e-12));
  CHECK(partial_trace(t, 3, 2, Keep::Second).approx_equal(xi, 1e-12));

  // Bell projector traces to the maximally mixed marginal.
  ComplexMatrix bell(4, 4);
  for (std::size_t i : {0u, 3u})
    for (std::size_t j : {0u, 3u}) bell(i, j) = 0.5;
  ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
  CHECK(partial_trace(bell, 2, 2, Keep::First).approx_equal(half, 1e-15));
  CHECK(partial_trace(bell, 2, 2, Keep::Second).approx_equal(half, 1e-15));
}

TEST_CASE("partial trace preserves trace on random operators") {
  rnd::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d1 = 2 + rng.integer(3), d2 = 2 + rng.integer(3);
    ComplexMatrix t = rnd::ginibre(rng, d1 * d2, d1 * d2);
    for (Keep keep : {Keep::First, Keep::Second}) {
      cplx traced = partial_trace(t, d1, d2, keep).trace();
      CHECK(std::abs(traced - t.trace()) < 1e-12);
    }
  }
}

TEST_CASE("fractional power: diagonal, pure, and identity exponent") {
  std::vector<double> d{0.75, 0.25};
  ComplexMatrix rho = ComplexMatrix::diagonal(d);
  std::vector<double> expect{std::sqrt(0.75), 0.5};
  CHECK(fractional_power(rho, 0.5)
            .approx_equal(ComplexMatrix::diagonal(expect), 1e-14));
  CHECK(fractional_power(rho, 1.0).approx_equal(rho, 1e-14));

  ComplexMatrix plus = plus_state();
  CHECK(fractional_power(plus, 0.5).approx_equal(plus, 1e-12));
}

TEST_CASE("fractional power rejects invalid inputs") {
  CHECK_THROWS_AS(fractional_power(kSigmaX, 0.5), PreconditionError);
  ComplexMatrix nonherm{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(fractional_power(nonherm, 0.5), PreconditionError);
  CHECK_THROWS_AS(fractional_power(kProj0, 0.0), PreconditionError);
  CHECK_THROWS_AS(fractional_power(kProj0, 1.5), PreconditionError);
}

TEST_CASE("fractional power split multiplies back to the state") {
  rnd::Rng rng(23);
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (int trial = 0; trial < 10; ++trial) {
      ComplexMatrix rho = rnd::state(rng, 2 + rng.integer(3)).matrix;
      ComplexMatrix prod = fractional_power(rho, alpha) *
                           fractional_power(rho, 1.0 - alpha);
      CHECK(prod.approx_equal(rho, 1e-10));
    }
  }
  // Rank-deficient states hit the zero-eigenvalue convention.
  ComplexMatrix pure = rnd::pure_state(rng, 4).matrix;
  CHECK((fractional_power(pure, 0.25) * fractional_power(pure, 0.75))
            .approx_equal(pure, 1e-10));
}

TEST_CASE("unitary from hamiltonian") {
  ComplexMatrix h = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
  CHECK(unitary_from_hamiltonian(h, 0.0)
            .approx_equal(ComplexMatrix::identity(2), 1e-15));
  ComplexMatrix expect{{1.0, 0.0}, {0.0, -1.0}};
  CHECK(unitary_from_hamiltonian(h, M_PI).approx_equal(expect, 1e-12));

  // exp(-i pi/2 sigma_x) = -i sigma_x by 2x2 spectral decomposition
  ComplexMatrix got = unitary_from_hamiltonian(kSigmaX, M_PI / 2);
  CHECK(got.approx_equal(kSigmaX * cplx(0.0, -1.0), 1e-12));

  rnd::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix hr = rnd::hamiltonian(rng, 3).matrix;
    double g = rng.uniform(-3.0, 3.0);
    ComplexMatrix prod =
        unitary_from_hamiltonian(hr, g) * unitary_from_hamiltonian(hr, -g);
    CHECK(prod.approx_equal(ComplexMatrix::identity(3), 1e-10));
  }
}

TEST_CASE("complete isometry") {
  CHECK(complete_isometry(ComplexMatrix::identity(3))
            .approx_equal(ComplexMatrix::identity(3), 0.0));

  ComplexMatrix e0(3, 1);
  e0(0, 0) = 1.0;
  CHECK(complete_isometry(e0).approx_equal(ComplexMatrix::identity(3), 0.0));

  ComplexMatrix e1(3, 1);
  e1(1, 0) = 1.0;
  ComplexMatrix u = complete_isometry(e1);
  CHECK(std::abs(u(1, 0) - cplx(1.0)) < 1e-15);
  CHECK(u.adjoint_mul(u).approx_equal(ComplexMatrix::identity(3), 1e-12));

  rnd::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t rows = 3 + rng.integer(5);
    std::size_t cols = 1 + rng.integer(rows);
    ComplexMatrix full = rnd::unitary(rng, rows);
    ComplexMatrix v(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) v(i, j) = full(i, j);
    ComplexMatrix completed = complete_isometry(v);
    CHECK(completed.adjoint_mul(completed)
              .approx_equal(ComplexMatrix::identity(rows), 1e-10));
    CHECK(completed.mul_adjoint(completed)
              .approx_equal(ComplexMatrix::identity(rows), 1e-10));
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        CHECK(completed(i, j) == v(i, j));  // inputs reproduced exactly
  }

  ComplexMatrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(complete_isometry(bad), PreconditionError);
}

TEST_CASE("predicate helpers") {
  CHECK(kSigmaX.is_hermitian());
  CHECK(kSigmaX.is_unitary());
  CHECK_FALSE(kSigmaX.is_psd());
  CHECK(kProj0.is_projection());
  CHECK(plus_state().is_psd());
  CHECK_FALSE(plus_state().is_unitary());
}

TEST_CASE("herm_eig matches trace and reconstructs the matrix") {
  rnd::Rng rng(53);
  ComplexMatrix h = rnd::hamiltonian(rng, 5).matrix;
  HermitianEig eig = herm_eig(h);
  double val_sum = 0.0;
  for (double v : eig.values) val_sum += v;
  CHECK(std::abs(val_sum - h.trace().real()) < 1e-10);
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) scaled(i, j) *= eig.values[j];
  CHECK(scaled.mul_adjoint(eig.vectors).approx_equal(h, 1e-10));
}
