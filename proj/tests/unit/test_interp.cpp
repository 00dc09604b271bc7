#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncdioph/compile.hpp"
#include "ncdioph/pell.hpp"
#include "ncdioph/reductions.hpp"

using namespace ncd;

namespace {

const Field Q = Field::rationals();
const Field Qi = Field::gaussian();

PolyRingPtr qt() { return PolyRing::make(Q, {"t"}); }

Element z(long n) { return Element(mpz_class(n)); }

Poly value(const std::vector<Element>& coords) { return coords.at(0).as<Poly>(); }

Scalar at_one(const Poly& f) {
  return f.evaluate(std::vector<Scalar>(f.ring()->arity(), Scalar::one(f.ring()->field)));
}

bool holds_true(const Template& t, const std::vector<std::vector<Element>>& blocks) {
  auto r = holds(t, blocks);
  return r.has_value() && *r;
}

// Solution preservation through an arbitrary interpretation: push the source
// solution forward and check it against the translated system.
bool pushes_forward(const InterpPtr& I, const EqSystem& sys, const Assignment& a) {
  auto tr = translate_system(I, sys);
  return check_solution(tr.target, tr.witness(a));
}

struct Case {
  const char* text;
  std::vector<std::pair<const char*, long>> witness;
};

// Integer systems with known solutions.
const std::vector<Case>& suite() {
  static const std::vector<Case> cases{
      {"structure int; x1^2 = 4;", {{"x1", 2}}},
      {"structure int; x1^2 = 4;", {{"x1", -2}}},
      {"structure int; x1 + x2 = 3; x1*x2 = 2;", {{"x1", 1}, {"x2", 2}}},
      {"structure int; x1^2 - 2*x2^2 = 1;", {{"x1", 3}, {"x2", 2}}},
      {"structure int; x1^2 - 2*x2^2 = 1;", {{"x1", 1}, {"x2", 0}}},
      {"structure int; x1 = 0;", {{"x1", 0}}},
      {"structure int; x1 = x1;", {{"x1", 5}}},
      {"structure int; x1*x2 = -6; x1 - x2 = 5;", {{"x1", 2}, {"x2", -3}}},
      {"structure int; x1^3 = -8;", {{"x1", -2}}},
      {"structure int; (x1 - 1)*(x2 + 2) = 0; x2 = 4;", {{"x1", 1}, {"x2", 4}}},
      {"structure int; x1^2 + x2^2 = x3^2;", {{"x1", 3}, {"x2", 4}, {"x3", 5}}},
      {"structure int; 2*x1 + 3 = 7 - x2; x2^2 = 4*x1^2;", {{"x1", 1}, {"x2", 2}}},
  };
  return cases;
}

Assignment assignment(const Case& c) {
  Assignment a;
  for (auto [v, n] : c.witness) a.emplace(v, z(n));
  return a;
}

}  // namespace

// --- Z in K[t] ---------------------------------------------------------------

TEST(ZInPoly, EncoderExamples) {
  auto I = interp_Z_in_polyring(qt());
  auto t = Poly::variable(qt(), 0);
  EXPECT_EQ(value(I->encode(z(2))), t * Scalar::from_int(Q, 2));
  EXPECT_EQ(at_one(value(I->encode(z(2)))), Scalar::from_int(Q, 2));
  EXPECT_TRUE(value(I->encode(z(0))).is_zero());
  EXPECT_EQ(value(I->encode(z(-3))), -chebyshev(ChebyshevKind::Second, 2, qt()));
  EXPECT_EQ(I->dim, 1u);
}

TEST(ZInPoly, ZeroSatisfiesDomain) {
  auto I = interp_Z_in_polyring(qt());
  EXPECT_TRUE(holds_true(I->domain, {I->encode(z(0))}));
}

TEST(ZInPoly, OnePlusOneIsTwo) {
  auto I = interp_Z_in_polyring(qt());
  auto one = value(I->encode(z(1))), two = value(I->encode(z(2)));
  auto h = value_at_one_equiv(one + one, two);
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, Poly::from_int(qt(), -2));
  EXPECT_TRUE(holds_true(I->add, {I->encode(z(1)), I->encode(z(1)), I->encode(z(2))}));
  EXPECT_FALSE(holds_true(I->add, {I->encode(z(1)), I->encode(z(1)), I->encode(z(3))}));
}

TEST(ZInPoly, NonPellPointFailsDomain) {
  auto I = interp_Z_in_polyring(qt());
  auto t = Poly::variable(qt(), 0);
  EXPECT_FALSE(holds_true(I->domain, {{Element(t + Poly::from_int(qt(), 1))}}));
}

TEST(ZInPoly, RejectsPositiveCharacteristic) {
  EXPECT_THROW(interp_Z_in_polyring(PolyRing::make(Field::prime(5), {"t"})), std::invalid_argument);
}

TEST(ZInPoly, EncoderSoundnessOnRandomIntegers) {
  gen::Rng rng(31);
  for (auto ring : {qt(), PolyRing::make(Q, {"t"}, true)}) {
    auto I = ring->laurent ? interp_Zi_in_laurent(ring) : interp_Z_in_polyring(ring);
    for (int n = 0; n < 60; ++n) {
      long a = gen::uniform(rng, -12, 12), b = gen::uniform(rng, -12, 12);
      auto ea = I->encode(z(a)), eb = I->encode(z(b));
      EXPECT_TRUE(holds_true(I->domain, {ea}));
      EXPECT_EQ(at_one(value(ea)), Scalar::from_int(Q, a));
      EXPECT_TRUE(holds_true(I->add, {ea, eb, I->encode(z(a + b))}));
      EXPECT_TRUE(holds_true(I->mul, {ea, eb, I->encode(z(a * b))}));
      // encoder(a) + encoder(b) is E-equivalent to encoder(a + b).
      EXPECT_TRUE(holds_true(I->equality, {{Element(value(ea) + value(eb))}, I->encode(z(a + b))}));
      EXPECT_TRUE(holds_true(I->equality, {{Element(value(ea) * value(eb))}, I->encode(z(a * b))}));
      if (a != b) EXPECT_FALSE(holds_true(I->equality, {ea, eb}));
      auto d = I->decode(ea);
      ASSERT_TRUE(d);
      EXPECT_EQ(*d, z(a));
    }
  }
}

// --- quotient ----------------------------------------------------------------

TEST(Quotient, Examples) {
  auto ring = PolyRing::make(Q, {"t1", "t2"});
  auto I = interp_quotient(ring);
  auto t1 = Poly::variable(ring, 0), t2 = Poly::variable(ring, 1);
  auto split = ideal_membership_t2_tn(t1 - (t1 + t2 * t1));
  ASSERT_TRUE(split);
  EXPECT_EQ(split->at(0), -t1);
  EXPECT_TRUE(holds_true(I->equality, {{Element(t1)}, {Element(t1 + t2 * t1)}}));
  EXPECT_TRUE(holds_true(I->equality, {{Element(Poly(ring))}, {Element(t2)}}));
  EXPECT_FALSE(holds_true(I->equality, {{Element(t1)}, {Element(t1 * t1)}}));
  auto src = PolyRing::make(Q, {"t1"});
  auto s = Poly::variable(src, 0);
  EXPECT_EQ(value(I->encode(Element(s * s + Poly::from_int(src, 1)))), t1 * t1 + Poly::from_int(ring, 1));
}

TEST(Quotient, RestrictedToSourceIsEquality) {
  gen::Rng rng(37);
  auto ring = PolyRing::make(Q, {"t1", "t2", "t3"});
  auto src = PolyRing::make(Q, {"t1"});
  auto I = interp_quotient(ring);
  for (int n = 0; n < 40; ++n) {
    auto f = gen::poly(rng, src), g = gen::poly(rng, src);
    EXPECT_EQ(holds_true(I->equality, {I->encode(Element(f)), I->encode(Element(g))}), f == g);
    EXPECT_TRUE(holds_true(I->equality, {I->encode(Element(f)), I->encode(Element(f))}));
  }
}

TEST(Quotient, ShiftedIdealForLaurentRings) {
  auto ring = PolyRing::make(Qi, {"t1", "t2"}, true);
  auto I = interp_quotient(ring);
  auto t1 = Poly::variable(ring, 0), t2 = Poly::variable(ring, 1);
  EXPECT_TRUE(holds_true(I->equality, {{Element(t1)}, {Element(t1 * t2)}}));
  EXPECT_FALSE(holds_true(I->equality, {{Element(t1)}, {Element(t2)}}));
}

// --- K[t] in the free algebra ------------------------------------------------

TEST(KtInFreeAlg, Examples) {
  auto alg = FreeAlgebra::make(Q, {"a", "b"});
  auto I = interp_Kt_in_freealg(alg, 0);
  auto t = Poly::variable(qt(), 0);
  auto a = NCPoly::generator(alg, 0), b = NCPoly::generator(alg, 1);
  auto img = I->encode(Element(t * t + Poly::from_int(qt(), 1)));
  EXPECT_EQ(img.at(0).as<NCPoly>(), a * a + NCPoly::from_int(alg, 1));
  EXPECT_TRUE(holds_true(I->domain, {img}));
  EXPECT_FALSE(holds_true(I->domain, {{Element(b)}}));
}

TEST(KtInFreeAlg, EncoderIsMultiplicative) {
  gen::Rng rng(41);
  auto alg = FreeAlgebra::make(Q, {"a", "b"});
  auto I = interp_Kt_in_freealg(alg, 0);
  for (int n = 0; n < 50; ++n) {
    auto f = gen::poly(rng, qt()), g = gen::poly(rng, qt());
    auto ef = I->encode(Element(f)).at(0).as<NCPoly>(), eg = I->encode(Element(g)).at(0).as<NCPoly>();
    EXPECT_EQ(I->encode(Element(f * g)).at(0).as<NCPoly>(), ef * eg);
    EXPECT_EQ(I->encode(Element(f + g)).at(0).as<NCPoly>(), ef + eg);
    EXPECT_TRUE(holds_true(I->domain, {I->encode(Element(f))}));
  }
}

// --- Laurent ring in the group algebra ----------------------------------------

TEST(LaurentInGroupAlg, FreeGroupGenerator) {
  auto G = std::make_shared<FreeGroupOracle>(2);
  auto alg = GroupAlgebra::make(Q, G);
  auto I = interp_laurent_in_groupalg(alg, {1}, {{1}});
  auto ring = PolyRing::make(Q, {"t"}, true);
  auto s = Poly::variable(ring, 0);
  auto img = I->encode(Element(s * Scalar::from_int(Q, 2) + s.pow_signed(-1) * Scalar::from_int(Q, 3)));
  auto expected = GroupAlgElement::element(alg, {1}, Scalar::from_int(Q, 2)) +
                  GroupAlgElement::element(alg, {-1}, Scalar::from_int(Q, 3));
  EXPECT_EQ(img.at(0).as<GroupAlgElement>(), expected);
  EXPECT_TRUE(holds_true(I->domain, {img}));
  EXPECT_FALSE(holds_true(I->domain, {{Element(GroupAlgElement::element(alg, {2}))}}));
}

TEST(LaurentInGroupAlg, RejectsWrongBasis) {
  auto G = std::make_shared<FreeGroupOracle>(2);
  auto alg = GroupAlgebra::make(Q, G);
  EXPECT_THROW(interp_laurent_in_groupalg(alg, {1}, {{2}}), std::invalid_argument);
  EXPECT_THROW(interp_laurent_in_groupalg(alg, {1, 1}, {{1, 1}}), std::invalid_argument);
}

TEST(LaurentInGroupAlg, EncoderIsRingHomomorphism) {
  gen::Rng rng(43);
  auto G = std::make_shared<FreeGroupOracle>(2);
  auto alg = GroupAlgebra::make(Qi, G);
  auto I = interp_laurent_in_groupalg(alg, {1, 2}, {{1, 2}});
  auto ring = PolyRing::make(Qi, {"t"}, true);
  for (int n = 0; n < 40; ++n) {
    auto f = gen::poly(rng, ring, 2, 3), g = gen::poly(rng, ring, 2, 3);
    auto enc = [&](const Poly& p) { return I->encode(Element(p)).at(0).as<GroupAlgElement>(); };
    EXPECT_EQ(enc(f * g), enc(f) * enc(g));
    EXPECT_EQ(enc(f - g), enc(f) - enc(g));
    EXPECT_TRUE(holds_true(I->domain, {I->encode(Element(f))}));
    EXPECT_EQ(*I->decode(I->encode(Element(f))), Element(f));
  }
}

// --- Z[i] in the Laurent ring ---------------------------------------------------

TEST(ZiInLaurent, Examples) {
  auto ring = PolyRing::make(Qi, {"t"}, true);
  auto I = interp_Zi_in_laurent(ring);
  EXPECT_EQ(I->source.kind, Structure::Kind::GaussianIntegers);
  auto t = Poly::variable(ring, 0);
  EXPECT_EQ(value(I->encode(Element(Scalar::from_int(Qi, 2)))), t * Scalar::from_int(Qi, 2));
  EXPECT_TRUE(value(I->encode(Element(Scalar::zero(Qi)))).is_zero());
  auto fam = laurent_pell_family(0, 1, 1, 1, ring);
  EXPECT_EQ(at_one(fam.y), -Scalar::imaginary_unit(Qi));
  EXPECT_TRUE(holds_true(I->domain, {I->encode(Element(Scalar::zero(Qi)))}));
}

TEST(ZiInLaurent, IntegerVariantWithoutI) {
  auto I = interp_Zi_in_laurent(PolyRing::make(Q, {"t"}, true));
  EXPECT_EQ(I->source.kind, Structure::Kind::Integers);
}

TEST(ZiInLaurent, EncoderSoundnessOnRandomGaussianIntegers) {
  gen::Rng rng(47);
  auto ring = PolyRing::make(Qi, {"t"}, true);
  auto I = interp_Zi_in_laurent(ring);
  auto gi = [](long re, long im) { return Element(Scalar::gaussian(Qi, re, im)); };
  for (int n = 0; n < 60; ++n) {
    long p = gen::uniform(rng, -5, 5), q = gen::uniform(rng, -5, 5);
    long r = gen::uniform(rng, -5, 5), s = gen::uniform(rng, -5, 5);
    auto ea = I->encode(gi(p, q)), eb = I->encode(gi(r, s));
    EXPECT_TRUE(holds_true(I->domain, {ea})) << p << "+" << q << "i";
    EXPECT_EQ(at_one(value(ea)), Scalar::gaussian(Qi, p, q));
    EXPECT_TRUE(holds_true(I->add, {ea, eb, I->encode(gi(p + r, q + s))}));
    EXPECT_TRUE(holds_true(I->mul, {ea, eb, I->encode(gi(p * r - q * s, p * s + q * r))}));
  }
}

// --- composition ---------------------------------------------------------------

TEST(Compose, WithIdentityKeepsEncoder) {
  auto I = interp_Z_in_polyring(qt());
  auto left = compose(identity_interpretation(Structure::integers()), I);
  auto right = compose(I, identity_interpretation(I->target));
  for (long n = -6; n <= 6; ++n) {
    EXPECT_EQ(left->encode(z(n)), I->encode(z(n)));
    EXPECT_EQ(right->encode(z(n)), I->encode(z(n)));
  }
}

TEST(Compose, MismatchThrows) {
  auto I = interp_Z_in_polyring(qt());
  EXPECT_THROW(compose(I, I), StructureMismatch);
}

TEST(Compose, ZToFreeAlgebraEncoder) {
  auto alg = FreeAlgebra::make(Q, {"a", "b"});
  auto I = compose(interp_Z_in_polyring(qt()), interp_Kt_in_freealg(alg, 0));
  auto a = NCPoly::generator(alg, 0);
  EXPECT_EQ(I->encode(z(2)).at(0).as<NCPoly>(), a * NCPoly::from_int(alg, 2));
}

TEST(Compose, AssociativeOnThreeStages) {
  auto r1 = PolyRing::make(Qi, {"t1"}, true);
  auto r2 = PolyRing::make(Qi, {"t1", "t2"}, true);
  auto G = std::make_shared<FreeAbelianOracle>(2);
  auto alg = GroupAlgebra::make(Qi, G);
  auto A = interp_Zi_in_laurent(r1);
  auto B = interp_quotient(r2);
  auto C = interp_laurent_in_groupalg(alg, {1, 2}, *G->centralizer_basis({1, 2}));
  auto left = compose(compose(A, B), C);
  auto right = compose(A, compose(B, C));
  auto sys = parse_system("structure gaussint; x1^2 + 1 = 0; x1 + x2 = 3;");
  for (auto x1 : {Scalar::imaginary_unit(Qi), -Scalar::imaginary_unit(Qi)}) {
    Assignment a{{"x1", Element(x1)}, {"x2", Element(Scalar::from_int(Qi, 3) - x1)}};
    ASSERT_TRUE(check_solution(sys, a));
    EXPECT_TRUE(pushes_forward(left, sys, a));
    EXPECT_TRUE(pushes_forward(right, sys, a));
    EXPECT_EQ(left->encode(a.at("x1")), right->encode(a.at("x1")));
  }
}

// --- translate_system -------------------------------------------------------------

TEST(Translate, EmptySystemKeepsOnlyDomainConstraints) {
  auto I = interp_Z_in_polyring(qt());
  EqSystem sys(Structure::integers());
  sys.declare("x1");
  auto tr = translate_system(I, sys);
  EXPECT_EQ(tr.target.equations.size(), I->domain.system.equations.size());
  EXPECT_TRUE(check_solution(tr.target, tr.witness({{"x1", z(7)}})));
}

TEST(Translate, ReflexiveEquation) {
  auto I = interp_Z_in_polyring(qt());
  auto sys = parse_system("structure int; x1 = x1;");
  for (long n : {-3, 0, 4}) EXPECT_TRUE(pushes_forward(I, sys, {{"x1", z(n)}}));
}

TEST(Translate, ConstantsAreEncoded) {
  auto I = interp_Z_in_polyring(qt());
  auto tr = translate_system(I, parse_system("structure int; x1 = 2;"));
  auto text = serialize(tr.target);
  EXPECT_NE(text.find("2*t"), std::string::npos) << text;
}

// --- compile_h10 and forward_verify ---------------------------------------------------

class ForwardVerify : public ::testing::TestWithParam<const char*> {};

TEST_P(ForwardVerify, SuitePassesAndStagedAgrees) {
  auto target = Structure::parse(GetParam());
  for (const auto& c : suite()) {
    auto sys = parse_system(c.text);
    auto compiled = compile_h10(sys, target);
    auto a = assignment(c);
    EXPECT_TRUE(forward_verify(compiled, a)) << c.text;
    EXPECT_EQ(staged_forward_verify(compiled, a), forward_verify(compiled, a)) << c.text;
  }
}

INSTANTIATE_TEST_SUITE_P(Targets, ForwardVerify,
                         ::testing::Values("poly(Q; t)", "poly(Q; t1, t2)", "freealg(Q; a, b)", "laurent(Qi; t)",
                                           "groupalg(Qi; freegroup(2))"));

TEST(ForwardVerifyErrors, NotASourceSolution) {
  auto c = compile_h10(parse_system("structure int; x1^2 = 4;"), Structure::parse("freealg(Q; a, b)"));
  EXPECT_THROW(forward_verify(c, {{"x1", z(3)}}), NotASourceSolution);
  EXPECT_THROW(forward_verify(c, {}), NotASourceSolution);
}

TEST(Compile, NoIntegerWitnessStillCompiles) {
  auto c = compile_h10(parse_system("structure int; x1^2 = 3;"), Structure::parse("freealg(Q; a, b)"));
  EXPECT_FALSE(c.target.equations.empty());
}

TEST(Compile, CharPTargetIsOutOfScope) {
  try {
    compile_h10(parse_system("structure int; x1 = 1;"), Structure::parse("freealg(F5; a)"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("out of scope: char-p construction", 0), 0u) << e.what();
  }
}

TEST(Compile, Deterministic) {
  auto sys = parse_system("structure int; x1 + x2 = 3; x1*x2 = 2;");
  auto target = Structure::parse("freealg(Q; a, b)");
  auto c1 = compile_h10(sys, target), c2 = compile_h10(sys, target);
  EXPECT_EQ(serialize(c1.target), serialize(c2.target));
  EXPECT_EQ(c1.provenance_json().dump(), c2.provenance_json().dump());
}

TEST(Compile, SingleEquationMode) {
  CompileOptions o;
  o.single_equation = true;
  auto sys = parse_system("structure int; x1 + x2 = 3; x1*x2 = 2;");
  auto c = compile_h10(sys, Structure::parse("freealg(Q; a, b)"), o);
  EXPECT_EQ(c.target.equations.size(), 1u);
  Assignment a{{"x1", z(1)}, {"x2", z(2)}};
  EXPECT_TRUE(forward_verify(c, a));
  EXPECT_TRUE(staged_forward_verify(c, a));
}

TEST(Compile, GaussianSystemsThroughLaurentAndGroupAlgebra) {
  auto sys = parse_system("structure gaussint; x1^2 = -1; x2 = x1 + 2;");
  for (const char* t : {"laurent(Qi; t)", "groupalg(Qi; freegroup(2))", "groupalg(Qi; raag(3; a-b))"}) {
    auto c = compile_h10(sys, Structure::parse(t));
    auto i = Scalar::imaginary_unit(Qi);
    EXPECT_TRUE(forward_verify(c, {{"x1", Element(i)}, {"x2", Element(i + Scalar::from_int(Qi, 2))}})) << t;
  }
}

TEST(Compile, ProvenanceCoversEveryEquation) {
  auto c = compile_h10(parse_system("structure int; x1^2 = 4;"), Structure::parse("poly(Q; t)"));
  auto j = c.provenance_json();
  ASSERT_TRUE(j.contains("equations"));
  EXPECT_EQ(j["equations"].size(), c.target.equations.size());
}

TEST(Decode, PolyTargetsRecoverIntegers) {
  auto I = interp_Z_in_polyring(qt());
  for (long n = -7; n <= 7; ++n) EXPECT_EQ(*I->decode(I->encode(z(n))), z(n));
  auto q = interp_quotient(PolyRing::make(Q, {"t1", "t2"}));
  auto t2 = Poly::variable(PolyRing::make(Q, {"t1", "t2"}), 1);
  EXPECT_EQ(*q->decode({Element(t2)}), Element(Poly(PolyRing::make(Q, {"t1"}))));
}
