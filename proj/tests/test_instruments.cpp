#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "objectify/instruments.hpp"
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

TEST_CASE("apply and duality") {
  KrausOperation id = KrausOperation::identity_channel(2);
  State plus = State::pure({1.0, 1.0});
  CHECK(apply(id, plus.matrix).approx_equal(plus.matrix, 0.0));
  CHECK(apply_dual(id, kSigmaX).approx_equal(kSigmaX, 0.0));

  // Lueders operation of |0><0| sends |+><+| to the unnormalized 0.5 |0><0|.
  Instrument luders = luders_instrument(Povm::sharp_basis(2));
  ComplexMatrix out = apply(luders.ops[0], plus.matrix);
  CHECK(out.approx_equal(ComplexMatrix::basis_op(2, 0, 0) * cplx(0.5), 1e-12));

  rnd::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t dim = 2 + rng.integer(3);
    KrausOperation op = rnd::channel(rng, dim, 1 + rng.integer(3));
    ComplexMatrix b = rnd::ginibre(rng, dim, dim);
    ComplexMatrix t = rnd::ginibre(rng, dim, dim);
    cplx lhs = trace_product(apply_dual(op, b), t);
    cplx rhs = trace_product(b, apply(op, t));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("induced observable") {
  Povm sharp = Povm::sharp_basis(2);
  Povm back = induced_observable(luders_instrument(sharp));
  for (std::size_t x = 0; x < 2; ++x)
    CHECK(back.effects[x].approx_equal(sharp.effects[x], 1e-12));

  Povm unsharp = unsharp_qubit();
  Povm round = induced_observable(luders_instrument(unsharp));
  for (std::size_t x = 0; x < 2; ++x)
    CHECK(round.effects[x].approx_equal(unsharp.effects[x], 1e-10));

  rnd::Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t dim = 2 + rng.integer(3);
    Instrument ins =
        rnd::repeatable_instrument(rng, rnd::sharp_povm(rng, dim, 2));
    CHECK(validate_instrument(ins).ok());
    CHECK(validate_povm(induced_observable(ins)).ok());
  }
}

TEST_CASE("luders kraus operators are the psd roots") {
  Instrument sharp = luders_instrument(Povm::sharp_basis(2));
  CHECK(sharp.ops[0].kraus[0].approx_equal(ComplexMatrix::basis_op(2, 0, 0),
                                           1e-12));
  Instrument unsharp = luders_instrument(unsharp_qubit());
  for (std::size_t x = 0; x < 2; ++x) {
    const ComplexMatrix& k = unsharp.ops[x].kraus[0];
    CHECK(k.is_psd(1e-10));
    CHECK((k * k).approx_equal(unsharp_qubit().effects[x], 1e-12));
  }
}

TEST_CASE("conditional states") {
  Instrument luders = luders_instrument(Povm::sharp_basis(2));
  State plus = State::pure({1.0, 1.0});
  Conditional c = conditional_state(luders, plus, 0);
  CHECK(c.probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(c.state.has_value());
  CHECK(c.state->matrix.approx_equal(ComplexMatrix::basis_op(2, 0, 0), 1e-12));

  // outcome of probability zero returns the null marker
  Conditional zero = conditional_state(luders, State::basis(2, 1), 0);
  CHECK(zero.probability == 0.0);
  CHECK_FALSE(zero.state.has_value());

  // unsharp "+" outcome on |0><0|: p = 1/2 and <sigma_x> = 0.6
  Instrument uns = luders_instrument(unsharp_qubit());
  Conditional cu = conditional_state(uns, State::basis(2, 0), 0);
  CHECK(cu.probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(cu.state.has_value());
  double sx = trace_product(kSigmaX, cu.state->matrix).real();
  CHECK(sx == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("repeatability") {
  CHECK(is_repeatable(luders_instrument(Povm::sharp_basis(2))).repeatable);
  CHECK(is_repeatable(luders_instrument(Povm::sharp_basis(4))).repeatable);
  // Lueders of an unsharp observable is never repeatable: E^2 != E.
  RepeatabilityCheck check = is_repeatable(luders_instrument(unsharp_qubit()));
  CHECK_FALSE(check.repeatable);
  CHECK(check.max_violation > 0.1);
}

TEST_CASE("repeatable outputs are orthogonal and live in unit eigenspaces") {
  rnd::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t dim = 3 + rng.integer(3);
    std::size_t n = 2 + rng.integer(2);
    Povm z = rnd::sharp_povm(rng, dim, n);
    Instrument ins = rnd::repeatable_instrument(rng, z);
    REQUIRE(is_repeatable(ins, 1e-9).repeatable);
    State rho = rnd::state(rng, dim);
    std::vector<std::optional<State>> outs;
    for (std::size_t x = 0; x < n; ++x) {
      Conditional c = conditional_state(ins, rho, x);
      outs.push_back(c.state);
      if (!c.state) continue;
      ComplexMatrix p = eigenvalue_one_projector(z.effects[x]);
      CHECK((p * c.state->matrix * p).approx_equal(c.state->matrix, 1e-9));
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (outs[x] && outs[y])
          CHECK(std::abs(trace_product(outs[x]->matrix, outs[y]->matrix)) <
                1e-9);
  }
}

TEST_CASE("luders ideality: certain outcomes leave the state alone") {
  rnd::Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    Povm z = rnd::sharp_povm(rng, 4, 2);
    // build a state supported in the unit eigenspace of effect 0
    ComplexMatrix p = eigenvalue_one_projector(z.effects[0]);
    ComplexMatrix raw = p * rnd::state(rng, 4).matrix * p;
    double tr = raw.trace().real();
    REQUIRE(tr > 1e-6);
    State rho(4, raw * cplx(1.0 / tr));
    Instrument luders = luders_instrument(z);
    double prob = trace_product(z.effects[0], rho.matrix).real();
    CHECK(prob == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(apply(luders.ops[0], rho.matrix).approx_equal(rho.matrix, 1e-9));
  }
}

TEST_CASE("sequential sharp instrument") {
  rnd::Rng rng(89);
  Povm z = rnd::sharp_povm(rng, 4, 2);
  // identity channel reproduces the Lueders instrument
  Instrument seq =
      sequential_sharp_instrument(z, KrausOperation::identity_channel(4));
  Instrument luders = luders_instrument(z);
  State rho = rnd::state(rng, 4);
  for (std::size_t x = 0; x < 2; ++x)
    CHECK(apply(seq.ops[x], rho.matrix)
              .approx_equal(apply(luders.ops[x], rho.matrix), 1e-10));

  // any channel induces exactly Z
  for (int trial = 0; trial < 5; ++trial) {
    KrausOperation phi = rnd::channel(rng, 4, 2);
    Povm induced = induced_observable(sequential_sharp_instrument(z, phi));
    for (std::size_t x = 0; x < 2; ++x)
      CHECK(induced.effects[x].approx_equal(z.effects[x], 1e-10));
  }

  CHECK_THROWS_AS(sequential_sharp_instrument(
                      unsharp_qubit(), KrausOperation::identity_channel(2)),
                  PreconditionError);
}

TEST_CASE("depolarising objectification") {
  // N = 1: the whole qubit apparatus carries a single rank-2 effect.
  Povm z;
  z.dim = 2;
  z.outcomes = {"0"};
  z.effects = {ComplexMatrix::identity(2)};
  Instrument j = depolarising_objectification(z);
  CHECK(validate_instrument(j).ok());
  CHECK(is_repeatable(j).repeatable);

  // J*(diag(0,1)) = 0.5 * 1 by direct substitution into the dual channel.
  ComplexMatrix h = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
  ComplexMatrix mapped = apply_total_dual(j, h);
  CHECK(mapped.approx_equal(ComplexMatrix::identity(2) * cplx(0.5), 1e-10));

  rnd::Rng rng(97);
  for (std::size_t n : {2u, 3u}) {
    Povm zr = rnd::sharp_povm_rank2(rng, n);
    Instrument jr = depolarising_objectification(zr);
    CHECK(validate_instrument(jr).ok());
    CHECK(is_repeatable(jr).repeatable);
    Povm induced = induced_observable(jr);
    for (std::size_t x = 0; x < n; ++x)
      CHECK(induced.effects[x].approx_equal(zr.effects[x], 1e-9));
  }

  CHECK_THROWS_AS(depolarising_objectification(Povm::sharp_basis(2)),
                  PreconditionError);
}

TEST_CASE("choi round trip reproduces the channel action") {
  rnd::Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t dim = 2 + rng.integer(3);
    KrausOperation op = rnd::channel(rng, dim, 1 + rng.integer(3));
    KrausOperation back = kraus_from_choi(choi_matrix(op), dim, dim);
    ComplexMatrix t = rnd::ginibre(rng, dim, dim);
    CHECK(apply(back, t).approx_equal(apply(op, t), 1e-10));
    CHECK(back.is_trace_preserving(1e-9));
  }
}
