#include <doctest.h>

#include <random>

#include "free2/error.hpp"
#include "free2/kpq_family.hpp"
#include "free2/structure.hpp"
#include "support.hpp"

using namespace free2;
using free2::testing::C;
using free2::testing::W;

namespace {
const Word kXY = commutator(W("x"), W("y"));
}

TEST_CASE("equiv") {
  CHECK(equiv(W("xyX"), W("y")));
  CHECK(equiv(W("x"), W("X")));
  CHECK(equiv(kXY, commutator(W("y"), W("x"))));
  CHECK_FALSE(equiv(W("x"), W("y")));
  CHECK(equiv(Word{}, W("xX")));
  CHECK_FALSE(equiv(Word{}, W("x")));
  CHECK_FALSE(equiv(W("xy"), W("xY")));
  CHECK(equiv(W("xyy"), W("YYX")));
  CHECK(equiv_class(W("yx")) == equiv_class(W("YX")));
}

TEST_CASE("is_commutator_of_basis") {
  CHECK(is_commutator_of_basis(kXY));
  CHECK(is_commutator_of_basis(commutator(W("y"), W("X"))));
  CHECK_FALSE(is_commutator_of_basis(W("x^2 y^2")));
  for (std::int64_t p : {-3, -1, 1, 2, 5}) {
    for (std::int64_t q : {-2, 0, 1, 3}) {
      CHECK_FALSE(is_commutator_of_basis(generate(FamilyId::D2, {0, p, q})));
    }
  }
  std::mt19937 rng(free2::testing::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const Automorphism phi = free2::testing::random_automorphism(rng, 6);
    CHECK(is_commutator_of_basis(phi(kXY)));
    CHECK(orbit_equivalent(CyclicWord::of(phi(kXY)), CyclicWord::of(kXY)));
  }
}

TEST_CASE("power_form_match") {
  const auto a = power_form_match(C("(yx^3)^2"), 2);
  REQUIRE(a.has_value());
  CHECK(a->epsilon == 1);
  CHECK(a->s == 3);

  const auto b = power_form_match(C("(Yx)^3"), 3);
  REQUIRE(b.has_value());
  CHECK(b->epsilon == -1);
  CHECK(b->s == 1);

  CHECK_FALSE(power_form_match(C("xyXY"), 2).has_value());
  CHECK_FALSE(power_form_match(C("(yx)^3"), 2).has_value());
  // rotations match: (X^2Y)^2 ~ (Y X^2)^2
  const auto c = power_form_match(C("(X^2Y)^2"), 2);
  REQUIRE(c.has_value());
  CHECK(c->epsilon == -1);
  CHECK(c->s == -2);
  const auto d = power_form_match(C("y^2"), 2);
  REQUIRE(d.has_value());
  CHECK(d->s == 0);
  CHECK_FALSE(power_form_match(C("x^2"), 2).has_value());
  CHECK_THROWS_AS((void)power_form_match(C("xy"), 0), DomainError);
}

TEST_CASE("comm_power_form") {
  SUBCASE("waist disk with a squared lift") {
    const Word w = generate(FamilyId::D2, {0, 1, 5});
    const Word gamma = generate(FamilyId::C0PP, {0, 1, 5});
    CHECK(equiv(gamma, W("(yx)^2")));
    const auto witness = comm_power_form(w, gamma);
    REQUIRE(witness.has_value());
    CHECK(witness->m == 2);
    CHECK(witness->condition == Condition::ii);
    CHECK(verify_witness(w, *witness));
  }
  SUBCASE("standard basis") {
    const auto witness = comm_power_form(commutator(W("x"), W("y^3")), W("y^3"));
    REQUIRE(witness.has_value());
    CHECK(witness->m == 3);
    CHECK(is_basis(witness->basis_first, witness->basis_second));
    CHECK(verify_witness(commutator(W("x"), W("y^3")), *witness));
  }
  SUBCASE("no structure") {
    CHECK_FALSE(comm_power_form(kXY, W("y^2")).has_value());
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS((void)comm_power_form(kXY, W("y")), DomainError);
    CHECK_THROWS_AS((void)comm_power_form(kXY, W("(xyXY)^2")), DomainError);
    CHECK_THROWS_AS((void)comm_power_form(kXY, Word{}), DomainError);
  }
}

TEST_CASE("comm_power_pair") {
  SUBCASE("waist disk with two powered lifts") {
    const Word w = generate(FamilyId::D2, {0, 2, 1});
    const Word g1 = generate(FamilyId::C1PP, {0, 2, 1});
    const auto witness = comm_power_pair(w, W("x^2"), g1);
    REQUIRE(witness.has_value());
    CHECK(witness->m == 2);
    CHECK(witness->n == 2);
    CHECK(witness->condition == Condition::iii);
    CHECK(verify_witness(w, *witness));
  }
  SUBCASE("standard basis") {
    const Word w = commutator(W("x^2"), W("y^2"));
    const auto witness = comm_power_pair(w, W("x^2"), W("y^2"));
    REQUIRE(witness.has_value());
    CHECK(witness->m == 2);
    CHECK(witness->n == 2);
    CHECK(verify_witness(w, *witness));
  }
  SUBCASE("no structure") {
    CHECK_FALSE(comm_power_pair(kXY, W("x^2"), W("y^2")).has_value());
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS((void)comm_power_pair(kXY, W("x"), W("y^2")), DomainError);
    CHECK_THROWS_AS((void)comm_power_pair(kXY, W("x^2"), W("(xyXY)^3")),
                    DomainError);
  }
}

TEST_CASE("answers are invariant under equivalent inputs") {
  const Word w = commutator(W("x^2"), W("y^3"));
  const Word w_conj = W("yx") * invert(w) * W("XY");
  const Word g0 = W("Y x^2 y");
  const Word g1 = W("Y^3");
  CHECK(comm_power_pair(w, W("x^2"), W("y^3")).has_value());
  CHECK(comm_power_pair(w_conj, g0, g1).has_value());
  CHECK(comm_power_form(commutator(W("x"), W("y^3")), W("y^3")).has_value());
  CHECK(comm_power_form(W("y") * commutator(W("y^3"), W("x")) * W("Y"),
                        W("x Y^3 X"))
            .has_value());
}

TEST_CASE("verify_witness rejects bad witnesses") {
  CommPowerWitness bad{Condition::ii, W("x"), W("x"), 2, 1};
  CHECK_FALSE(verify_witness(commutator(W("x^2"), W("x")), bad));
  CommPowerWitness wrong{Condition::ii, W("x"), W("y"), 3, 1};
  CHECK_FALSE(verify_witness(commutator(W("x^2"), W("y")), wrong));
}

TEST_CASE("condition names") {
  CHECK(to_string(Condition::i) == "i");
  CHECK(to_string(Condition::ii) == "ii");
  CHECK(to_string(Condition::iii) == "iii");
}
