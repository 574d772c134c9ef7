#include <doctest.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "solvpair/combinat.hpp"
#include "solvpair/pair.hpp"
#include "solvpair/rng.hpp"
#include "solvpair/structure.hpp"
#include "util.hpp"

using namespace solvpair;
using testutil::P;
using testutil::Q;

namespace {

SolvablePair a_n(int n, const Rat& a) { return canonical_pair({n + 1}, {a}); }

SolvablePair jordan_plane() {
  return SolvablePair::validate(
      Derivation::make({Poly::constant(2, Rat(1)), Poly(2)}),
      Derivation::make({P(2, "X0"), P(2, "X1^2")}));
}

}  // namespace

TEST_CASE("canonical pair images") {
  const SolvablePair p = canonical_pair({2, 2}, {Rat(1), Rat(3)});
  CHECK(p.delta().images[0].is_zero());
  CHECK(p.delta().images[1] == P(4, "X0"));
  CHECK(p.delta().images[2].is_zero());
  CHECK(p.delta().images[3] == P(4, "X2"));
  CHECK(p.gamma().images[0] == P(4, "X0"));
  CHECK(p.gamma().images[1] == P(4, "2*X1"));
  CHECK(p.gamma().images[2] == P(4, "3*X2"));
  CHECK(p.gamma().images[3] == P(4, "4*X3"));
  CHECK(p.cert().exponents == std::vector<int>{1, 2, 1, 2});
  CHECK(p.linear());
}

TEST_CASE("validate rejects bad pairs with the right error") {
  // Commutator off at generator 1: gamma misses the shift.
  CHECK_THROWS_WITH_AS(
      SolvablePair::validate(
          Derivation::make({Poly(2), P(2, "X0")}),
          Derivation::make({P(2, "X0"), P(2, "X1")})),
      "commutator mismatch at generator 1", std::invalid_argument);
  // Non-nilpotent delta is reported before the commutator test.
  CHECK_THROWS_AS(
      SolvablePair::validate(
          Derivation::make({Poly(2), P(2, "X1")}),
          Derivation::make({P(2, "X0"), P(2, "X1")})),
      std::runtime_error);
  CHECK_THROWS_AS(
      SolvablePair::validate(Derivation::zero(2), Derivation::zero(3)),
      std::invalid_argument);
  // Delta = 0 pairs with any gamma.
  const SolvablePair p = SolvablePair::validate(
      Derivation::zero(2), Derivation::make({P(2, "X1^3"), P(2, "X0")}));
  CHECK(bracket(p, P(2, "X0"), P(2, "X1")).is_zero());
}

TEST_CASE("bracket table of the two-block pair") {
  const SolvablePair p = canonical_pair({2, 2}, {Rat(1), Rat(3)});
  const Poly x0 = P(4, "X0"), x1 = P(4, "X1"), x2 = P(4, "X2"),
             x3 = P(4, "X3");
  CHECK(bracket(p, x0, x1) == P(4, "-X0^2"));
  CHECK(bracket(p, x0, x2).is_zero());
  CHECK(bracket(p, x0, x3) == P(4, "-X0*X2"));
  CHECK(bracket(p, x1, x2) == P(4, "3*X0*X2"));
  CHECK(bracket(p, x1, x3) == P(4, "4*X0*X3 - 2*X1*X2"));
  CHECK(bracket(p, x2, x3) == P(4, "-3*X2^2"));
  CHECK(bracket(p, x1, x0) == P(4, "X0^2"));
}

TEST_CASE("bracket is a biderivation") {
  Rng rng(51);
  const SolvablePair p = a_n(2, Q("-2/3"));
  for (int t = 0; t < 25; ++t) {
    const Poly f = random_poly(rng, 3, 3, 3);
    const Poly g = random_poly(rng, 3, 3, 3);
    const Poly h = random_poly(rng, 3, 3, 3);
    CHECK(bracket(p, f * g, h) ==
          f * bracket(p, g, h) + bracket(p, f, h) * g);
    CHECK(bracket(p, f, g) == -bracket(p, g, f));
  }
}

TEST_CASE("star product oracles") {
  const SolvablePair p = a_n(1, Rat(1));
  CHECK(star(p, P(2, "X1"), P(2, "X0")) == P(2, "X0*X1 + X0^2"));
  CHECK(star(p, P(2, "X0"), P(2, "X1")) == P(2, "X0*X1"));
  CHECK(star(p, P(2, "X1"), P(2, "X1")) == P(2, "X1^2 + 2*X0*X1"));
  CHECK(star(p, Poly::constant(2, Rat(5)), P(2, "X1")) == P(2, "5*X1"));
  // Star restricted to ker delta is the commutative product.
  CHECK(star(p, P(2, "X0^2"), P(2, "X0^3")) == P(2, "X0^5"));
}

TEST_CASE("star commutator minus bracket loses two filtration degrees") {
  Rng rng(52);
  const SolvablePair p = canonical_pair({2, 2}, {Rat(1), Rat(3)});
  for (int t = 0; t < 30; ++t) {
    const Poly f = random_poly(rng, 4, 3, 3);
    const Poly g = random_poly(rng, 4, 3, 3);
    const Poly comm = star(p, f, g) - star(p, g, f);
    const Poly rest = comm - bracket(p, f, g);
    const auto ef = epsilon(p, f), eg = epsilon(p, g);
    const auto ec = epsilon(p, comm), er = epsilon(p, rest);
    if (ec) CHECK(*ec <= *ef + *eg - 1);
    if (er) CHECK(*er <= *ef + *eg - 2);
  }
}

TEST_CASE("t-family interpolates the star product") {
  const SolvablePair p = a_n(1, Rat(1));
  const TPoly c = star_t(p, P(2, "X1"), P(2, "X0"));
  CHECK(c.t_coeff(0) == P(2, "X0*X1"));
  CHECK(c.t_coeff(1) == P(2, "X0^2"));
  CHECK(c.t_coeff(2).is_zero());
  Rng rng(53);
  for (int t = 0; t < 25; ++t) {
    const Poly f = random_poly(rng, 2, 3, 3);
    const Poly g = random_poly(rng, 2, 3, 3);
    const TPoly family = star_t(p, f, g);
    Poly total(2);
    Poly direct(2);
    for (int i = 0; i <= 8; ++i) {
      const Poly ci = family.t_coeff(i);
      total += ci;
      CHECK(ci == power_apply(p.delta(), i, f) * p.binom_gamma(i, g));
    }
    CHECK(total == star(p, f, g));
    // t-coefficient 1 of the family commutator is the bracket.
    const TPoly rev = star_t(p, g, f);
    CHECK(family.t_coeff(1) - rev.t_coeff(1) == bracket(p, f, g));
  }
}

TEST_CASE("phi and delta-log oracles") {
  const SolvablePair p = a_n(2, Rat(1));
  CHECK(phi(p, Q("1/3"), P(3, "X1")) == P(3, "X1 + 1/3*X0"));
  CHECK(phi(p, Rat(2), P(3, "X2")) == P(3, "X2 + 2*X1 + X0"));
  CHECK(log_delta(p, P(3, "X2")) == P(3, "X1 - 1/2*X0"));
  CHECK(log_delta(p, P(3, "X0")).is_zero());
}

TEST_CASE("phi composes additively and respects star") {
  Rng rng(54);
  const SolvablePair p = a_n(2, Q("5/4"));
  for (int t = 0; t < 20; ++t) {
    const Poly f = random_poly(rng, 3, 3, 3);
    const Rat a = make_rat(rng.range(-9, 9), rng.range(1, 4));
    const Rat b = make_rat(rng.range(-9, 9), rng.range(1, 4));
    CHECK(phi(p, a, phi(p, b, f)) == phi(p, a + b, f));
    const Poly g = random_poly(rng, 3, 3, 3);
    // (id+delta) automorphism identity for star.
    const Poly prod = star(p, f, g);
    CHECK(star(p, phi(p, Rat(1), f), phi(p, Rat(1), g)) ==
          prod + apply(p.delta(), prod));
    // General exponent: phi_a is a star automorphism.
    CHECK(star(p, phi(p, a, f), phi(p, a, g)) == phi(p, a, prod));
  }
}

TEST_CASE("delta-log is a star derivation but not a product derivation") {
  Rng rng(55);
  const SolvablePair p = a_n(1, Rat(1));
  for (int t = 0; t < 25; ++t) {
    const Poly f = random_poly(rng, 2, 3, 3);
    const Poly g = random_poly(rng, 2, 3, 3);
    CHECK(log_delta(p, star(p, f, g)) ==
          star(p, log_delta(p, f), g) + star(p, f, log_delta(p, g)));
  }
  const Poly x1 = P(2, "X1");
  CHECK(log_delta(p, x1 * x1) != log_delta(p, x1) * x1 * Rat(2));
}

TEST_CASE("epsilon values and laws") {
  const SolvablePair p = a_n(2, Rat(1));
  CHECK(epsilon(p, P(3, "X2^2")) == 4);
  CHECK(epsilon(p, P(3, "X1*X2")) == 3);
  CHECK(epsilon(p, P(3, "X0^5")) == 0);
  CHECK(!epsilon(p, Poly(3)).has_value());
  CHECK(epsilon(p, P(3, "2*X0*X2 - X1^2")) == 0);
  CHECK(epsilon(p, Poly::constant(3, Rat(1))) == 0);

  Rng rng(56);
  for (int t = 0; t < 30; ++t) {
    const Poly f = random_poly(rng, 3, 3, 3);
    const Poly g = random_poly(rng, 3, 3, 3);
    const int ef = *epsilon(p, f), eg = *epsilon(p, g);
    CHECK(*epsilon(p, f * g) == ef + eg);  // multiplicativity in a domain
    const Poly df = apply(p.delta(), f);
    if (!df.is_zero()) CHECK(*epsilon(p, df) == ef - 1);
    const Poly gf = apply(p.gamma(), f);
    if (!gf.is_zero()) CHECK(*epsilon(p, gf) <= ef);
  }
}

TEST_CASE("epsilon on a non-linear pair") {
  const SolvablePair p = jordan_plane();
  CHECK(epsilon(p, P(2, "X0^3")) == 3);
  CHECK(epsilon(p, P(2, "X1")) == 0);
  CHECK(star(p, P(2, "X0"), P(2, "X1")) == P(2, "X0*X1 + X1^2"));
  CHECK(star(p, P(2, "X1"), P(2, "X0")) == P(2, "X0*X1"));
  CHECK(bracket(p, P(2, "X0"), P(2, "X1")) == P(2, "X1^2"));
}

TEST_CASE("epsilon_tilde refines epsilon") {
  const SolvablePair p = a_n(2, Rat(1));
  const AdaptedBasisRef b = jordan_chain_basis(p);
  CHECK(b.eps1 == std::vector<int>{0, 1, 2});
  CHECK(epsilon_tilde(p, b, P(3, "X2^2")) == 4);
  CHECK(epsilon_tilde(p, b, P(3, "X1")) == 1);
  // The kernel generator F2 has epsilon 0 but weighted degree 2.
  const Poly f2 = P(3, "2*X0*X2 - X1^2");
  CHECK(epsilon(p, f2) == 0);
  CHECK(epsilon_tilde(p, b, f2) == 2);
  CHECK(!epsilon_tilde(p, b, Poly(3)).has_value());

  Rng rng(57);
  for (int t = 0; t < 30; ++t) {
    const Poly f = random_poly(rng, 3, 3, 4);
    CHECK(*epsilon_tilde(p, b, f) >= *epsilon(p, f));
    const Poly g = random_poly(rng, 3, 3, 4);
    CHECK(*epsilon_tilde(p, b, f * g) ==
          *epsilon_tilde(p, b, f) + *epsilon_tilde(p, b, g));
    // Agreement on degree one.
    Poly lin(3);
    for (int i = 0; i < 3; ++i) {
      lin += Poly::variable(3, i) * Rat(rng.range(-3, 3));
    }
    if (!lin.is_zero()) {
      CHECK(*epsilon_tilde(p, b, lin) == *epsilon(p, lin));
    }
  }
}

TEST_CASE("star of nonzero elements is nonzero") {
  Rng rng(58);
  const SolvablePair p = canonical_pair({2, 1}, {Rat(1), Rat(4)});
  for (int t = 0; t < 40; ++t) {
    const Poly f = random_poly(rng, 3, 3, 3);
    const Poly g = random_poly(rng, 3, 3, 3);
    CHECK(!star(p, f, g).is_zero());
  }
}

TEST_CASE("associativity and Jacobi on mixed fixtures") {
  Rng rng(59);
  const SolvablePair fixtures[] = {a_n(1, Rat(1)), a_n(2, Q("-2/3")),
                                   jordan_plane()};
  for (const SolvablePair& p : fixtures) {
    const int n = p.nvars();
    for (int t = 0; t < 20; ++t) {
      const Poly f = random_poly(rng, n, 3, 3);
      const Poly g = random_poly(rng, n, 3, 3);
      const Poly h = random_poly(rng, n, 3, 3);
      CHECK(star(p, star(p, f, g), h) == star(p, f, star(p, g, h)));
      CHECK((bracket(p, f, bracket(p, g, h)) +
             bracket(p, g, bracket(p, h, f)) +
             bracket(p, h, bracket(p, f, g)))
                .is_zero());
    }
  }
}

TEST_CASE("operator rewriting identities") {
  Rng rng(60);
  const SolvablePair p = canonical_pair({3}, {Q("1/2")});
  for (int t = 0; t < 25; ++t) {
    const Poly f = random_poly(rng, 3, 3, 3);
    const int i = rng.range(1, 3);
    const int k = rng.range(1, 4);
    // delta^i gamma = gamma delta^i + i delta^i
    CHECK(power_apply(p.delta(), i, apply(p.gamma(), f)) ==
          apply(p.gamma(), power_apply(p.delta(), i, f)) +
              power_apply(p.delta(), i, f) * Rat(i));
    // delta binom(gamma,k) = binom(gamma,k) delta + binom(gamma,k-1) delta
    CHECK(apply(p.delta(), p.binom_gamma(k, f)) ==
          p.binom_gamma(k, apply(p.delta(), f)) +
              p.binom_gamma(k - 1, apply(p.delta(), f)));
    // delta^i binom(gamma,k) = sum_l C(i,l) binom(gamma,k-l) delta^i
    const Poly dif = power_apply(p.delta(), i, f);
    Poly rhs(3);
    for (int l = 0; l <= std::min(i, k); ++l) {
      rhs += p.binom_gamma(k - l, dif) * gbinom(Rat(i), l);
    }
    CHECK(power_apply(p.delta(), i, p.binom_gamma(k, f)) == rhs);
  }
}
