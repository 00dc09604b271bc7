#include "ncdioph/structure.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <stdexcept>

namespace ncd {

Structure Structure::integers() { return {}; }

Structure Structure::gaussian_integers() {
  Structure s;
  s.kind = Kind::GaussianIntegers;
  s.field = Field::gaussian();
  return s;
}

Structure Structure::of_field(Field f) {
  Structure s;
  s.kind = Kind::Field;
  s.field = f;
  return s;
}

Structure Structure::of_poly(PolyRingPtr ring) {
  Structure s;
  s.kind = ring->laurent ? Kind::Laurent : Kind::Poly;
  s.field = ring->field;
  s.poly = std::move(ring);
  return s;
}

Structure Structure::of_freealg(FreeAlgebraPtr alg) {
  Structure s;
  s.kind = Kind::FreeAlgebra;
  s.field = alg->field;
  s.freealg = std::move(alg);
  return s;
}

Structure Structure::of_groupalg(GroupAlgebraPtr alg) {
  Structure s;
  s.kind = Kind::GroupAlgebra;
  s.field = alg->field;
  s.groupalg = std::move(alg);
  return s;
}

std::string Structure::describe() const {
  switch (kind) {
    case Kind::Integers: return "int";
    case Kind::GaussianIntegers: return "gaussint";
    case Kind::Field: return "field(" + field.name() + ")";
    case Kind::Poly:
    case Kind::Laurent: return poly->describe();
    case Kind::FreeAlgebra: return freealg->describe();
    case Kind::GroupAlgebra: return groupalg->describe();
  }
  return "?";
}

bool Structure::commutative() const {
  switch (kind) {
    case Kind::FreeAlgebra: return freealg->letters.size() <= 1;
    case Kind::GroupAlgebra: {
      const auto& G = *groupalg->group;
      for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = i + 1; j < G.rank(); ++j)
          if (!G.generators_commute(i, j)) return false;
      return true;
    }
    default: return true;
  }
}

namespace {

class DescLexer {
 public:
  explicit DescLexer(const std::string& s) : s_(s) {}

  std::string next() {
    skip();
    if (pos_ >= s_.size()) return "";
    char c = s_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return s_.substr(start, pos_ - start);
    }
    ++pos_;
    return std::string(1, c);
  }
  std::string peek() {
    std::size_t saved = pos_;
    std::string t = next();
    pos_ = saved;
    return t;
  }
  void expect(const std::string& tok) {
    std::string t = next();
    if (t != tok) fail("expected '" + tok + "' but found '" + t + "'");
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("bad structure descriptor \"" + s_ + "\": " + msg);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
};

bool valid_symbol_name(const std::string& name) {
  static const std::regex ident("[A-Za-z][A-Za-z0-9_]*");
  static const std::regex variable("x[0-9]+");
  return std::regex_match(name, ident) && !std::regex_match(name, variable) && name != "i";
}

std::vector<std::string> name_list(DescLexer& lex) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  while (true) {
    std::string name = lex.next();
    if (!valid_symbol_name(name)) lex.fail("'" + name + "' cannot name a generator or variable");
    if (!seen.insert(name).second) lex.fail("duplicate name '" + name + "'");
    names.push_back(name);
    if (lex.peek() != ",") break;
    lex.next();
  }
  return names;
}

std::size_t parse_count(DescLexer& lex) {
  std::string t = lex.next();
  if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit)) lex.fail("expected a count, got '" + t + "'");
  return std::stoul(t);
}

GroupOraclePtr parse_group(DescLexer& lex) {
  std::string kind = lex.next();
  lex.expect("(");
  GroupOraclePtr G;
  if (kind == "freegroup") {
    G = std::make_shared<FreeGroupOracle>(parse_count(lex));
  } else if (kind == "freeabelian") {
    G = std::make_shared<FreeAbelianOracle>(parse_count(lex));
  } else if (kind == "raag") {
    std::optional<std::size_t> rank;
    std::string first = lex.peek();
    if (!first.empty() && std::all_of(first.begin(), first.end(), ::isdigit)) {
      rank = parse_count(lex);
      if (lex.peek() == ";") lex.next();
    }
    const auto names = default_generator_names(26);
    auto index = [&](const std::string& name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) lex.fail("unknown RAAG generator '" + name + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t needed = 0;
    while (lex.peek() != ")") {
      std::size_t u = index(lex.next());
      lex.expect("-");
      std::size_t v = index(lex.next());
      edges.emplace_back(u, v);
      needed = std::max({needed, u + 1, v + 1});
      if (lex.peek() == ",") lex.next();
    }
    std::size_t k = rank.value_or(needed);
    if (k < needed) lex.fail("edge mentions a generator beyond the declared rank");
    if (k == 0) lex.fail("a RAAG needs at least one generator");
    G = std::make_shared<RaagOracle>(default_generator_names(k), edges);
  } else {
    lex.fail("unknown group '" + kind + "'");
  }
  lex.expect(")");
  return G;
}

}  // namespace

Structure Structure::parse(const std::string& desc) {
  DescLexer lex(desc);
  std::string head = lex.next();
  Structure s;
  if (head == "int") {
    s = integers();
  } else if (head == "gaussint") {
    s = gaussian_integers();
  } else if (head == "field" || head == "poly" || head == "laurent" || head == "freealg" || head == "groupalg") {
    lex.expect("(");
    Field f;
    try {
      f = Field::parse(lex.next());
    } catch (const std::invalid_argument& e) {
      lex.fail(e.what());
    }
    if (head == "field") {
      s = of_field(f);
    } else {
      lex.expect(";");
      if (head == "poly" || head == "laurent")
        s = of_poly(PolyRing::make(f, name_list(lex), head == "laurent"));
      else if (head == "freealg")
        s = of_freealg(FreeAlgebra::make(f, name_list(lex)));
      else
        s = of_groupalg(GroupAlgebra::make(f, parse_group(lex)));
    }
    lex.expect(")");
  } else {
    lex.fail("unknown structure '" + head + "'");
  }
  if (!lex.done()) lex.fail("trailing input");
  return s;
}

// ---------------------------------------------------------------------------

Element Element::from_int(const Structure& s, const mpz_class& n) {
  switch (s.kind) {
    case Structure::Kind::Integers: return Element(n);
    case Structure::Kind::GaussianIntegers:
    case Structure::Kind::Field: return Element(Scalar::from_int(s.field, n));
    case Structure::Kind::Poly:
    case Structure::Kind::Laurent: return Element(Poly::constant(s.poly, Scalar::from_int(s.field, n)));
    case Structure::Kind::FreeAlgebra: return Element(NCPoly::constant(s.freealg, Scalar::from_int(s.field, n)));
    case Structure::Kind::GroupAlgebra:
      return Element(GroupAlgElement::constant(s.groupalg, Scalar::from_int(s.field, n)));
  }
  throw std::logic_error("unreachable");
}

Element Element::scalar(const Structure& s, const Scalar& c) {
  if (!(c.field() == s.field)) throw StructureMismatch("constant from " + c.field().name() + " in " + s.describe());
  switch (s.kind) {
    case Structure::Kind::Integers:
      if (!c.is_integer()) throw std::invalid_argument(c.to_string() + " is not an integer");
      return Element(mpz_class(c.real().get_num()));
    case Structure::Kind::GaussianIntegers:
      if (!c.is_integer()) throw std::invalid_argument(c.to_string() + " is not a Gaussian integer");
      return Element(c);
    case Structure::Kind::Field: return Element(c);
    case Structure::Kind::Poly:
    case Structure::Kind::Laurent: return Element(Poly::constant(s.poly, c));
    case Structure::Kind::FreeAlgebra: return Element(NCPoly::constant(s.freealg, c));
    case Structure::Kind::GroupAlgebra: return Element(GroupAlgElement::constant(s.groupalg, c));
  }
  throw std::logic_error("unreachable");
}

std::optional<Element> Element::named(const Structure& s, const std::string& name) {
  if (name == "i") {
    if (!s.field.has_i()) return std::nullopt;
    const Scalar i = Scalar::imaginary_unit(s.field);
    switch (s.kind) {
      case Structure::Kind::Integers: return std::nullopt;
      case Structure::Kind::GaussianIntegers:
      case Structure::Kind::Field: return Element(i);
      case Structure::Kind::Poly:
      case Structure::Kind::Laurent: return Element(Poly::constant(s.poly, i));
      case Structure::Kind::FreeAlgebra: return Element(NCPoly::constant(s.freealg, i));
      case Structure::Kind::GroupAlgebra: return Element(GroupAlgElement::constant(s.groupalg, i));
    }
  }
  switch (s.kind) {
    case Structure::Kind::Poly:
    case Structure::Kind::Laurent: {
      auto it = std::find(s.poly->vars.begin(), s.poly->vars.end(), name);
      if (it == s.poly->vars.end()) return std::nullopt;
      return Element(Poly::variable(s.poly, static_cast<std::size_t>(it - s.poly->vars.begin())));
    }
    case Structure::Kind::FreeAlgebra: {
      auto idx = s.freealg->index_of(name);
      if (!idx) return std::nullopt;
      return Element(NCPoly::generator(s.freealg, *idx));
    }
    case Structure::Kind::GroupAlgebra: {
      auto letter = s.groupalg->group->letter_of(name);
      if (!letter) return std::nullopt;
      return Element(GroupAlgElement::element(s.groupalg, {*letter}));
    }
    default: return std::nullopt;
  }
}

namespace {

template <class F>
Element binary(const Element::Value& a, const Element::Value& b, F&& f) {
  if (a.index() != b.index()) throw StructureMismatch("operands come from different structures");
  return std::visit(
      [&](const auto& x) -> Element {
        using T = std::decay_t<decltype(x)>;
        return f(x, std::get<T>(b));
      },
      a);
}

}  // namespace

bool Element::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>)
          return sgn(x) == 0;
        else
          return x.is_zero();
      },
      v_);
}

Element Element::operator+(const Element& o) const {
  return binary(v_, o.v_, [](const auto& x, const auto& y) { return Element(x + y); });
}

Element Element::operator-(const Element& o) const {
  return binary(v_, o.v_, [](const auto& x, const auto& y) { return Element(x - y); });
}

Element Element::operator*(const Element& o) const {
  return binary(v_, o.v_, [](const auto& x, const auto& y) { return Element(x * y); });
}

Element Element::operator-() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>)
          return Element(mpz_class(-x));
        else
          return Element(-x);
      },
      v_);
}

Element Element::pow(unsigned long e) const {
  return std::visit(
      [e](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>) {
          mpz_class r;
          mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
          return Element(r);
        } else {
          return Element(x.pow(static_cast<unsigned>(e)));
        }
      },
      v_);
}

std::optional<Element> Element::unit_inverse() const {
  return std::visit(
      [](const auto& x) -> std::optional<Element> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>) {
          if (x == 1 || x == -1) return Element(x);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Scalar>) {
          if (x.is_zero()) return std::nullopt;
          return Element(x.inverse());
        } else if constexpr (std::is_same_v<T, Poly>) {
          auto inv = x.unit_inverse();
          if (!inv) return std::nullopt;
          return Element(*inv);
        } else {
          auto inv = ncd::unit_inverse(x);
          if (!inv) return std::nullopt;
          return Element(*inv);
        }
      },
      v_);
}

bool Element::operator==(const Element& o) const {
  if (v_.index() != o.v_.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(o.v_);
      },
      v_);
}

std::string Element::to_string() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>)
          return x.get_str();
        else
          return x.to_string();
      },
      v_);
}

bool belongs_to(const Element& e, const Structure& s) {
  switch (s.kind) {
    case Structure::Kind::Integers: return std::holds_alternative<mpz_class>(e.value());
    case Structure::Kind::GaussianIntegers:
      return std::holds_alternative<Scalar>(e.value()) && e.as<Scalar>().field() == s.field &&
             e.as<Scalar>().is_integer();
    case Structure::Kind::Field: return std::holds_alternative<Scalar>(e.value()) && e.as<Scalar>().field() == s.field;
    case Structure::Kind::Poly:
    case Structure::Kind::Laurent:
      return std::holds_alternative<Poly>(e.value()) && *e.as<Poly>().ring() == *s.poly;
    case Structure::Kind::FreeAlgebra:
      return std::holds_alternative<NCPoly>(e.value()) && *e.as<NCPoly>().algebra() == *s.freealg;
    case Structure::Kind::GroupAlgebra:
      return std::holds_alternative<GroupAlgElement>(e.value()) && *e.as<GroupAlgElement>().algebra() == *s.groupalg;
  }
  return false;
}

}  // namespace ncd
