#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "objectify/quantum.hpp"
#include "objectify/random.hpp"

using namespace objectify;

namespace {

const ComplexMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};

Povm unsharp_qubit(double bias = 0.3) {
  Povm p;
  p.dim = 2;
  p.outcomes = {"+", "-"};
  ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
  p.effects = {half + kSigmaX * cplx(bias), half - kSigmaX * cplx(bias)};
  return p;
}

}  // namespace

TEST_CASE("state validation") {
  CHECK(validate_state(State::maximally_mixed(2)).ok());
  CHECK(validate_state(State::pure({1.0, 1.0})).ok());

  State bad(2, ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5}));
  ValidationReport report = validate_state(bad);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const Violation& v : report.violations)
    if (v.invariant == "state positivity") {
      found = true;
      CHECK(v.magnitude == doctest::Approx(0.5).epsilon(1e-9));
    }
  CHECK(found);
}

TEST_CASE("povm validation") {
  CHECK(validate_povm(Povm::sharp_basis(2)).ok());
  CHECK(validate_povm(unsharp_qubit()).ok());

  Povm overcomplete;
  overcomplete.dim = 2;
  overcomplete.outcomes = {"a", "b"};
  ComplexMatrix e = ComplexMatrix::identity(2) * cplx(0.6);
  overcomplete.effects = {e, e};
  ValidationReport report = validate_povm(overcomplete);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().invariant == "povm completeness");
  CHECK(report.violations.front().magnitude ==
        doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("unsharp qubit effects have spectrum {0.2, 0.8}") {
  Povm p = unsharp_qubit();
  for (const ComplexMatrix& e : p.effects) {
    HermitianEig eig = herm_eig(e);
    CHECK(eig.values.front() == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(eig.values.back() == doctest::Approx(0.8).epsilon(1e-12));
  }
}

TEST_CASE("born probabilities") {
  State plus = State::pure({1.0, 1.0});
  std::vector<double> p = born_probabilities(Povm::sharp_basis(2), plus);
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));

  // tr[sigma_x |0><0|] = 0, so the unsharp pair is uniform as well
  std::vector<double> q =
      born_probabilities(unsharp_qubit(), State::basis(2, 0));
  CHECK(q[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q[1] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(born_probabilities(Povm::sharp_basis(3), plus),
                  DimensionError);
}

TEST_CASE("born probabilities sum to one on random pairs") {
  rnd::Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 2 + rng.integer(3);
    std::size_t n = 2 + rng.integer(dim - 1);
    Povm e = (trial % 2) ? rnd::unsharp_povm(rng, dim, n)
                         : rnd::sharp_povm(rng, dim, n);
    State rho = rnd::state(rng, dim);
    std::vector<double> p = born_probabilities(e, rho);
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
}

TEST_CASE("eigenvalue-1 projector") {
  ComplexMatrix proj0 = ComplexMatrix::basis_op(2, 0, 0);
  CHECK(eigenvalue_one_projector(proj0).approx_equal(proj0, 1e-12));
  CHECK(eigenvalue_one_projector(ComplexMatrix::identity(2) * cplx(0.5))
            .approx_equal(ComplexMatrix::zero(2, 2), 1e-12));
  ComplexMatrix effect =
      ComplexMatrix::diagonal(std::vector<double>{1.0, 0.7, 0.0});
  ComplexMatrix expect =
      ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0, 0.0});
  CHECK(eigenvalue_one_projector(effect).approx_equal(expect, 1e-12));
}

TEST_CASE("unit eigenspace projector properties on random sharp povms") {
  rnd::Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t dim = 3 + rng.integer(3);
    std::size_t n = 2 + rng.integer(2);
    Povm z = rnd::sharp_povm(rng, dim, n);
    std::vector<ComplexMatrix> projectors;
    for (const ComplexMatrix& e : z.effects)
      projectors.push_back(eigenvalue_one_projector(e));
    for (std::size_t x = 0; x < z.effects.size(); ++x) {
      const ComplexMatrix& p = projectors[x];
      CHECK((p * p).approx_equal(p, 1e-9));
      CHECK(p.approx_equal(p.adjoint(), 1e-9));
      CHECK((z.effects[x] * p).approx_equal(p, 1e-9));
      CHECK((p * z.effects[x]).approx_equal(p, 1e-9));
      for (std::size_t y = 0; y < z.effects.size(); ++y) {
        ComplexMatrix expect = (x == y) ? p : ComplexMatrix::zero(dim, dim);
        CHECK((p * z.effects[y]).approx_equal(expect, 1e-9));
      }
    }
  }
}

TEST_CASE("objectification support") {
  CHECK(admits_objectification(Povm::sharp_basis(3)).admits);

  Povm trivial;
  trivial.dim = 2;
  trivial.outcomes = {"a", "b"};
  ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
  trivial.effects = {half, half};
  CHECK_FALSE(admits_objectification(trivial).admits);

  Povm mixed;
  mixed.dim = 2;
  mixed.outcomes = {"a", "b"};
  mixed.effects = {ComplexMatrix::diagonal(std::vector<double>{1.0, 0.3}),
                   ComplexMatrix::diagonal(std::vector<double>{0.0, 0.7})};
  ObjectificationSupport support = admits_objectification(mixed);
  CHECK_FALSE(support.admits);
  CHECK(support.ranks[0] == 1);
  CHECK(support.ranks[1] == 0);
}
