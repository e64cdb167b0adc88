#include <doctest.h>

#include "free2/classifier.hpp"
#include "free2/error.hpp"
#include "free2/kpq_family.hpp"
#include "free2/structure.hpp"
#include "support.hpp"

using namespace free2;
using free2::testing::W;

TEST_CASE("special_form") {
  CHECK(special_form(0, 0).kind == FormKind::Trivial);
  CHECK(special_form(0, 1).kind == FormKind::Trivial);
  const KnotForm t = special_form(0, 3);
  CHECK(t.kind == FormKind::TorusT2);
  CHECK(t.torus_params() == std::pair<std::int64_t, std::int64_t>{2, 5});
  CHECK(t.name() == "torus");
  // trefoil point
  CHECK(special_form(0, -1).torus_params() ==
        std::pair<std::int64_t, std::int64_t>{2, -3});
  CHECK(special_form(-1, 1).torus_params() ==
        std::pair<std::int64_t, std::int64_t>{5, 8});
  CHECK(special_form(2, 3).kind == FormKind::General);
  CHECK(special_form(2, 3).name() == "general");
  CHECK_FALSE(special_form(2, 3).torus_params().has_value());
  CHECK(special_form(0, 0).name() == "trivial");
}

TEST_CASE("pi1_injective") {
  CHECK_FALSE(pi1_injective(3, 0));
  CHECK_FALSE(pi1_injective(-1, 2));
  CHECK_FALSE(pi1_injective(-2, 1));
  CHECK(pi1_injective(2, 3));
  CHECK(pi1_injective(-2, 2));
  CHECK_THROWS_AS((void)pi1_injective(0, 3), DomainError);
  CHECK_THROWS_AS((void)pi1_injective(-1, 1), DomainError);
}

TEST_CASE("tunnel_one") {
  for (auto [p, q] : {std::pair{1, 1}, {-3, 4}, {5, -2}, {2, 0}}) {
    const auto w = tunnel_one(p, q);
    REQUIRE(w.has_value());
    CHECK(is_primitive(w->word));
    CHECK(w->family == FamilyId::L0);
    CHECK(w->n == 0);
    const Word expected =
        W("x") * power(generator_power(Generator::x, p) * W("y"), 2);
    CHECK(equiv(w->word, expected));
  }
}

TEST_CASE("atoroidality_certificate") {
  SUBCASE("(2,3)") {
    const CertificateStatus s = atoroidality_certificate(2, 3);
    CHECK(s.ok);
    CHECK(s.window == kDefaultWindow);
    CHECK(s.mu_m0 == 1);
    CHECK_FALSE(s.counterexample.has_value());
  }
  SUBCASE("(1,-1): l1' at n = 1 is primitive") {
    CHECK(atoroidality_certificate(1, -1).ok);
    const Word l1 = generate(FamilyId::L1, {1, 1, -1});
    CHECK(is_primitive(l1));
    CHECK(equiv(l1, W("x^2yxy")));
    // at n = -1 the word is not primitive, but still not a proper power
    const Word back = generate(FamilyId::L1, {-1, 1, -1});
    CHECK_FALSE(is_primitive(back));
    CHECK(multiplicity(back).exponent == 1);
  }
  SUBCASE("(-2,5)") { CHECK(atoroidality_certificate(-2, 5).ok); }
  SUBCASE("window is recorded") {
    ClassifierOptions opts;
    opts.window = 2;
    CHECK(atoroidality_certificate(3, 3, opts).window == 2);
  }
  CHECK_THROWS_AS((void)atoroidality_certificate(0, 4), DomainError);
}

TEST_CASE("decide_11") {
  SUBCASE("(3,1)") {
    const OneOneDecision d = decide_11(3, 1);
    REQUIRE(d.decided);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->n == 0);
    CHECK(d.witness->detail.condition == Condition::iii);
    CHECK(d.witness->c0 == FamilyId::C0P);
    CHECK(d.witness->c1 == FamilyId::C1PP);
    CHECK(verify_witness(generate(FamilyId::D2, {0, 3, 1}), d.witness->detail));
  }
  SUBCASE("(-1,0)") {
    const OneOneDecision d = decide_11(-1, 0);
    REQUIRE(d.decided);
    CHECK(d.witness->n == 1);
    CHECK(d.witness->detail.condition == Condition::ii);
    CHECK(verify_witness(generate(FamilyId::D2, {1, -1, 0}), d.witness->detail));
  }
  SUBCASE("(1,5)") {
    const OneOneDecision d = decide_11(1, 5);
    REQUIRE(d.decided);
    CHECK(d.witness->n == 0);
    CHECK(d.witness->c0 == FamilyId::C0PP);
    CHECK(d.witness->detail.condition == Condition::ii);
    CHECK(d.witness->detail.m == 2);
  }
  SUBCASE("(-3,2)") {
    const OneOneDecision d = decide_11(-3, 2);
    REQUIRE(d.decided);
    CHECK(d.witness->detail.condition == Condition::iii);
  }
  SUBCASE("(2,3) undecided within the window") {
    const OneOneDecision d = decide_11(2, 3);
    CHECK_FALSE(d.decided);
    CHECK(d.window == 6);
    CHECK_FALSE(d.witness.has_value());
  }
  SUBCASE("skipped pairings carry a reason") {
    const OneOneDecision d = decide_11(4, -3);
    for (const SkippedCandidate& s : d.skipped) CHECK_FALSE(s.reason.empty());
  }
  CHECK_THROWS_AS((void)decide_11(0, 5), DomainError);
}

TEST_CASE("surgery_invariant") {
  const auto a = surgery_invariant(1, 0);
  REQUIRE(a.has_value());
  CHECK(a->slope == -36);
  CHECK(a->seifert_index == 5);
  const auto b = surgery_invariant(-1, 2);
  REQUIRE(b.has_value());
  CHECK(b->slope == 44);
  CHECK(b->seifert_index == 3);
  const auto c = surgery_invariant(-2, 1);
  REQUIRE(c.has_value());
  CHECK(c->slope == 76);
  CHECK(c->seifert_index == 7);
  for (std::int64_t p = -6; p <= 6; ++p) {
    if (p == 0) continue;
    const auto s = surgery_invariant(p, 0);
    REQUIRE(s.has_value());
    CHECK(s->seifert_index == std::llabs(6 * p - 1));
  }
  CHECK_FALSE(surgery_invariant(2, 3).has_value());
}

TEST_CASE("meridian_genus") {
  CHECK(meridian_genus(1) == 2);
  CHECK(meridian_genus(-2) == 5);
  CHECK(meridian_genus(3) == 8);
  CHECK_THROWS_AS((void)meridian_genus(0), DomainError);
}

TEST_CASE("classify") {
  const ClassificationReport r = classify(1, 0);
  CHECK(r.form.kind == FormKind::General);
  CHECK(r.slope == -36);
  CHECK(r.pi1_injective == false);
  REQUIRE(r.surgery.has_value());
  CHECK(r.surgery->seifert_index == 5);
  REQUIRE(r.atoroidality.has_value());
  CHECK(r.one_one.decided);

  const ClassificationReport t = classify(0, 2);
  CHECK(t.form.kind == FormKind::TorusT2);
  CHECK_FALSE(t.pi1_injective.has_value());
  CHECK_FALSE(t.atoroidality.has_value());
  CHECK_FALSE(t.one_one.decided);
  CHECK(t.one_one.window == kDefaultWindow);
}

TEST_CASE("survey") {
  const auto rows = survey({0, 1, 0, 1}, {}, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].p == 0);
  CHECK(rows[0].q == 0);
  CHECK(rows[0].form.kind == FormKind::Trivial);
  CHECK(rows[1].form.kind == FormKind::Trivial);
  CHECK(rows[2].p == 1);
  CHECK(rows[3].q == 1);

  // row order does not depend on the number of workers
  const auto one = survey({-2, 2, -1, 2}, {}, 1);
  const auto many = survey({-2, 2, -1, 2}, {}, 8);
  REQUIRE(one.size() == 20);
  REQUIRE(many.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].p == many[i].p);
    CHECK(one[i].q == many[i].q);
    CHECK(one[i].one_one.decided == many[i].one_one.decided);
  }

  CHECK_THROWS_AS((void)survey({1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS((void)survey({0, 0, 3, 2}), DomainError);
}

TEST_CASE("survey propagates computation errors") {
  ClassifierOptions opts;
  opts.length_cap = 8;
  CHECK_THROWS_AS((void)survey({1, 3, 1, 3}, opts, 3), LengthCapError);
}
