#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "objectify/schemes.hpp"

// Seeded generators for randomized property suites. Everything is a pure
// function of the generator state, so a fixed seed reproduces the exact same
// instances across runs.
namespace objectify::rnd {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t integer(std::uint64_t bound) {  // in [0, bound)
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// fnv-1a, used to derive stable per-check sub-seeds from names.
std::uint64_t fnv1a(std::string_view text);

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix unitary(Rng& rng, std::size_t dim);
State pure_state(Rng& rng, std::size_t dim);
State state(Rng& rng, std::size_t dim, std::size_t rank = 0);  // 0: full rank
Hamiltonian hamiltonian(Rng& rng, std::size_t dim, double scale = 1.0);
std::vector<double> probability_vector(Rng& rng, std::size_t n);

// Sharp observable from a random eigenbasis with a random split of the
// dimension into n_outcomes nonempty groups.
Povm sharp_povm(Rng& rng, std::size_t dim, std::size_t n_outcomes);
// Sharp observable on dim = 2*n_outcomes with every effect of rank 2.
Povm sharp_povm_rank2(Rng& rng, std::size_t n_outcomes);
// Unsharp observable E_x = S^{-1/2} A_x S^{-1/2} from random PSD operators.
Povm unsharp_povm(Rng& rng, std::size_t dim, std::size_t n_outcomes);

// Random channel via a Stinespring block column of a random unitary.
KrausOperation channel(Rng& rng, std::size_t dim, std::size_t n_kraus);

// Random repeatable instrument compatible with a sharp observable: each
// outcome applies a random channel supported on the effect's eigenspace.
Instrument repeatable_instrument(Rng& rng, const Povm& sharp_z);

// Hamiltonian commuting with every effect of a sharp observable (random
// Hermitian block per eigenspace).
Hamiltonian commuting_hamiltonian(Rng& rng, const Povm& sharp_z,
                                  double scale = 1.0);

// Generic scheme with a random coupling, random mixed probe state, and a
// random sharp pointer observable of n_outcomes effects.
MeasurementScheme scheme(Rng& rng, std::size_t dim_s, std::size_t dim_a,
                         std::size_t n_outcomes);

}  // namespace objectify::rnd
