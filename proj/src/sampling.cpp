#include "hexad/sampling.hpp"

#include <array>

namespace hexad {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  // splitmix64 finalizer
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Integer Sampler::integer() {
  std::uniform_int_distribution<int> d(-9, 9);
  return Integer(d(rng_));
}

Rational Sampler::rational() {
  static constexpr std::array<int, 5> denominators{1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<std::size_t> den(0, denominators.size() - 1);
  const int n = num(rng_);
  return make_rational(n, denominators[den(rng_)]);
}

std::size_t Sampler::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  return d(rng_);
}

IntVector Sampler::integers(std::size_t n) {
  IntVector v(n);
  for (auto& x : v) x = integer();
  return v;
}

RatVector Sampler::rationals(std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = rational();
  return v;
}

Cochain Sampler::integer_cochain(const SimplicialComplex& x, int k) {
  return Cochain::from_integers(k, integers(x.count(k)));
}

Cochain Sampler::rational_cochain(const SimplicialComplex& x, int k) {
  return Cochain(k, Ring::Rational, rationals(x.count(k)));
}

WhitneyForm Sampler::form(const SimplicialComplex& x, int k) { return WhitneyForm{k, rationals(x.count(k))}; }

RatVector Sampler::element_of(const MixedSubgroup& s) {
  RatVector v(s.ambient_dim, Rational(0));
  for (const auto& g : s.lattice_gens) v = add(v, scale(Rational(integer()), g));
  for (const auto& g : s.space_gens) v = add(v, scale(rational(), g));
  return v;
}

}  // namespace hexad
