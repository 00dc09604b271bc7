#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncdioph/system.hpp"

using namespace ncd;

namespace {

Element var_value(const EqSystem& sys, const std::string& text) {
  return evaluate(parse_term(text, sys.structure), {});
}

}  // namespace

TEST(Parse, IntegerSystem) {
  auto sys = parse_system("structure int; x1^2 - 4 = 0");
  EXPECT_EQ(sys.structure.kind, Structure::Kind::Integers);
  ASSERT_EQ(sys.equations.size(), 1u);
  EXPECT_EQ(sys.variables, std::vector<std::string>{"x1"});
}

TEST(Parse, FreeAlgebraSystem) {
  auto sys = parse_system("structure freealg(Q; a,b); x1*a - a*x1 = 0");
  EXPECT_EQ(sys.structure.kind, Structure::Kind::FreeAlgebra);
  EXPECT_EQ(sys.equations.size(), 1u);
}

TEST(Parse, SyntaxErrorHasPosition) {
  try {
    parse_system("structure int;\nx1 + = 0");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Parse, Rejections) {
  EXPECT_THROW(parse_system("structure nothing; x1 = 0;"), ParseError);
  EXPECT_THROW(parse_system("structure int; x1 = 1/2;"), ParseError);
  EXPECT_THROW(parse_system("structure int; x1 = i;"), ParseError);
  EXPECT_THROW(parse_system("structure poly(Q; t); x1 = s;"), ParseError);
  EXPECT_THROW(parse_system("x1 = 0;"), ParseError);
}

TEST(Parse, CommentsAndEquationWithoutTrailingSemicolon) {
  auto sys = parse_system("# header\nstructure int; # the ring\nx1 + x2 = 3; x1*x2 = 2");
  EXPECT_EQ(sys.equations.size(), 2u);
  EXPECT_EQ(sys.variables, (std::vector<std::string>{"x1", "x2"}));
}

class RoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(RoundTrip, ParseSerializeParse) {
  auto sys = parse_system(GetParam());
  auto text = serialize(sys);
  auto again = parse_system(text);
  EXPECT_TRUE(structurally_equal(sys, again)) << text;
  EXPECT_EQ(serialize(again), text);
}

INSTANTIATE_TEST_SUITE_P(
    Corpus, RoundTrip,
    ::testing::Values("structure int; x1^2 - 4 = 0;", "structure int; -(x1 - x2)*(x1 + 2) = -7; x2^3 = 8;",
                      "structure gaussint; x1^2 + 1 = 0; x2 = 2 - 3*i;", "structure field(Q); x1^2 = 1/4;",
                      "structure field(F7); 3*x1 + x2^2 = 6;", "structure field(Qi); x1 = i*x2 + 1/2;",
                      "structure poly(Q; t1, t2); x1*(t1 - t2) = t1^2*x2;",
                      "structure laurent(Qi; t); x1 - i*t^-1 = 0; x2*t = 3;",
                      "structure freealg(Q; a, b); x1*a - a*x1 = 0; x2^2 = a*b + 1/2;",
                      "structure freealg(F3; a); x1 + x1 = a;", "structure groupalg(Q; freegroup(2)); x1*a = a*x1;",
                      "structure groupalg(Qi; raag(3; a-b)); x1*a^-1*b = c - 1;",
                      "structure groupalg(F2; freeabelian(2)); x1^2 = a*b^-1 + 1;"));

TEST(Serialize, Deterministic) {
  const char* text = "structure freealg(Q; a, b); (x1 + a)^2 - b*x2 = 3;";
  EXPECT_EQ(serialize(parse_system(text)), serialize(parse_system(text)));
}

TEST(Json, MirrorsTheTree) {
  auto sys = parse_system("structure int; x1^2 - 4 = 0;");
  auto j = to_json(sys);
  EXPECT_EQ(j["structure"], "int");
  ASSERT_EQ(j["equations"].size(), 1u);
  const auto& e = j["equations"][0];
  EXPECT_EQ(e["op"], "sub");
  EXPECT_EQ(e["args"][0]["op"], "pow");
  EXPECT_EQ(e["args"][0]["exp"], 2);
  EXPECT_EQ(e["args"][0]["args"][0]["name"], "x1");
  EXPECT_EQ(e["args"][1]["op"], "const");
}

TEST(Evaluate, Examples) {
  auto z = parse_system("structure int; x1^2 - 4 = 0;");
  EXPECT_TRUE(evaluate(z.equations[0], {{"x1", Element(mpz_class(2))}}).is_zero());
  EXPECT_TRUE(check_solution(z, {{"x1", Element(mpz_class(-2))}}));
  EXPECT_FALSE(check_solution(z, {{"x1", Element(mpz_class(3))}}));

  auto f = parse_system("structure freealg(Q; a, b); x1*a - a*x1 = 0;");
  auto b = var_value(f, "b");
  auto r = evaluate(f.equations[0], {{"x1", b}});
  EXPECT_FALSE(r.is_zero());
  EXPECT_EQ(r, var_value(f, "b*a - a*b"));
  EXPECT_FALSE(check_solution(f, {{"x1", b}}));
  EXPECT_TRUE(check_solution(f, {{"x1", var_value(f, "a^2")}}));
}

TEST(Evaluate, MissingBindingThrows) {
  auto z = parse_system("structure int; x1 + x2 = 0;");
  EXPECT_THROW(check_solution(z, {{"x1", Element(mpz_class(1))}}), UnboundVariable);
}

TEST(Evaluate, GroupAlgebra) {
  auto sys = parse_system("structure groupalg(Q; freegroup(2)); x1*a = a*x1;");
  EXPECT_TRUE(check_solution(sys, {{"x1", var_value(sys, "1 + a + a^-1")}}));
  EXPECT_FALSE(check_solution(sys, {{"x1", var_value(sys, "b")}}));
}

TEST(Assignment, Parses) {
  auto s = Structure::parse("freealg(Q; a, b)");
  auto a = parse_assignment("x1=a^2, x2 = -1/2", s);
  EXPECT_EQ(a.at("x1").to_string(), "a^2");
  EXPECT_EQ(a.at("x2").to_string(), "-1/2");
}

// Random integer terms built together with their value; evaluation must
// reproduce it.
namespace {

std::pair<Term, mpz_class> random_term(gen::Rng& rng, int depth, const std::map<std::string, mpz_class>& env) {
  if (depth == 0 || gen::uniform(rng, 0, 3) == 0) {
    if (gen::uniform(rng, 0, 1)) {
      auto name = "x" + std::to_string(gen::uniform(rng, 1, static_cast<long>(env.size())));
      return {make_var(name), env.at(name)};
    }
    mpz_class c = gen::uniform(rng, -5, 5);
    return {make_const(Element(c)), c};
  }
  auto [l, lv] = random_term(rng, depth - 1, env);
  switch (gen::uniform(rng, 0, 4)) {
    case 0: {
      auto [r, rv] = random_term(rng, depth - 1, env);
      return {make_add(l, r), lv + rv};
    }
    case 1: {
      auto [r, rv] = random_term(rng, depth - 1, env);
      return {make_sub(l, r), lv - rv};
    }
    case 2: {
      auto [r, rv] = random_term(rng, depth - 1, env);
      return {make_mul(l, r), lv * rv};
    }
    case 3: return {make_neg(l), -lv};
    default: {
      auto e = static_cast<unsigned long>(gen::uniform(rng, 0, 3));
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), lv.get_mpz_t(), e);
      return {make_pow(l, e), p};
    }
  }
}

}  // namespace

TEST(Evaluate, RandomTreesOverZ) {
  gen::Rng rng(23);
  for (int n = 0; n < 300; ++n) {
    std::map<std::string, mpz_class> env{{"x1", gen::uniform(rng, -4, 4)}, {"x2", gen::uniform(rng, -4, 4)}};
    auto [t, expected] = random_term(rng, 4, env);
    Assignment a;
    for (const auto& [k, v] : env) a.emplace(k, Element(v));
    EXPECT_EQ(evaluate(t, a), Element(expected)) << term_to_string(t);
    // Rendering and reparsing preserves the value.
    auto back = parse_term(term_to_string(t), Structure::integers());
    EXPECT_EQ(evaluate(back, a), Element(expected)) << term_to_string(t);
  }
}

TEST(Term, ConstantFolding) {
  auto t = make_add(make_const(Element(mpz_class(2))), make_const(Element(mpz_class(3))));
  ASSERT_TRUE(is_const(t));
  EXPECT_EQ(*t->value, Element(mpz_class(5)));
  EXPECT_TRUE(is_zero_const(make_sub(t, t)));
}
