#include "ncdioph/reductions.hpp"

#include "ncdioph/pell.hpp"

namespace ncd {

namespace {

Term B(std::size_t j, std::size_t c = 0) { return make_var(block_var(j, c)); }
Term A(std::size_t k) { return make_var(aux_var(k)); }
Term C(Element e) { return make_const(std::move(e)); }

void set_blocks(Template& t, std::size_t blocks, std::size_t dim, std::size_t aux, std::string rule) {
  t.blocks = blocks;
  for (std::size_t j = 0; j < blocks; ++j)
    for (std::size_t c = 0; c < dim; ++c) t.system.declare(block_var(j, c));
  for (std::size_t k = 0; k < aux; ++k) t.aux.push_back(aux_var(k));
  for (const auto& a : t.aux) t.system.declare(a);
  t.rule = std::move(rule);
}

// Source-level witnesses go through the encoder and the target witness.
void derive_witnesses(Interpretation& I) {
  for (Template* t : {&I.domain, &I.equality, &I.add, &I.mul}) {
    auto tw = t->target_witness;
    auto enc = I.encode;
    std::string rule = t->rule;
    t->witness = [tw, enc, rule](const std::vector<Element>& values) {
      std::vector<std::vector<Element>> blocks;
      for (const auto& v : values) blocks.push_back(enc(v));
      auto aux = tw(blocks);
      if (!aux) throw WitnessError("relation " + rule + " fails on the encoded values");
      return *aux;
    };
  }
}

const Poly& poly_of(const Element& e) { return e.as<Poly>(); }

// Literal equality x = y, sum x + y = z and product x*y = z.
void literal_relations(Interpretation& I, const std::string& prefix) {
  set_blocks(I.equality, 2, 1, 0, prefix + "literal-equality");
  I.equality.system.add_equation(make_sub(B(0), B(1)));
  I.equality.target_witness = [](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    if (b[0][0] != b[1][0]) return std::nullopt;
    return Assignment{};
  };
  set_blocks(I.add, 3, 1, 0, prefix + "literal-sum");
  I.add.system.add_equation(make_sub(make_add(B(0), B(1)), B(2)));
  I.add.target_witness = [](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    if (b[0][0] + b[1][0] != b[2][0]) return std::nullopt;
    return Assignment{};
  };
  set_blocks(I.mul, 3, 1, 0, prefix + "literal-product");
  I.mul.system.add_equation(make_sub(make_mul(B(0), B(1)), B(2)));
  I.mul.target_witness = [](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    if (b[0][0] * b[1][0] != b[2][0]) return std::nullopt;
    return Assignment{};
  };
}

// Y-value relations up to a multiple of (t - 1): the Pell-based encodings
// identify a domain point with its value at t = 1.
void value_at_one_relations(Interpretation& I, const PolyRingPtr& ring) {
  const Poly t_minus_1 = Poly::variable(ring, 0) - Poly::from_int(ring, 1);
  auto h_term = [&] { return make_mul(A(0), C(t_minus_1)); };
  auto via_h = [](const Poly& lhs, const Poly& rhs) -> std::optional<Assignment> {
    auto h = value_at_one_equiv(lhs, rhs);
    if (!h) return std::nullopt;
    return Assignment{{aux_var(0), Element(*h)}};
  };

  set_blocks(I.equality, 2, 1, 1, "value-at-one-equality");
  I.equality.system.add_equation(make_sub(make_sub(B(0), B(1)), h_term()));
  I.equality.target_witness = [via_h](const std::vector<std::vector<Element>>& b) {
    return via_h(poly_of(b[0][0]), poly_of(b[1][0]));
  };
  set_blocks(I.add, 3, 1, 1, "value-at-one-sum");
  I.add.system.add_equation(make_sub(make_sub(make_add(B(0), B(1)), B(2)), h_term()));
  I.add.target_witness = [via_h](const std::vector<std::vector<Element>>& b) {
    return via_h(poly_of(b[0][0]) + poly_of(b[1][0]), poly_of(b[2][0]));
  };
  set_blocks(I.mul, 3, 1, 1, "value-at-one-product");
  I.mul.system.add_equation(make_sub(make_sub(make_mul(B(0), B(1)), B(2)), h_term()));
  I.mul.target_witness = [via_h](const std::vector<std::vector<Element>>& b) {
    return via_h(poly_of(b[0][0]) * poly_of(b[1][0]), poly_of(b[2][0]));
  };
}

// (X^2 - (t^2 - 1) Y^2 - 1) * Y = 0: Y is a Pell Y-coordinate or zero.
void pell_or_zero_domain(Interpretation& I, const PolyRingPtr& ring, const std::string& rule) {
  const Poly t = Poly::variable(ring, 0);
  const Poly d = t * t - Poly::from_int(ring, 1);
  set_blocks(I.domain, 1, 1, 1, rule);
  Term pell = make_sub(make_sub(make_pow(A(0), 2), make_mul(C(d), make_pow(B(0), 2))), C(Poly::from_int(ring, 1)));
  I.domain.system.add_equation(make_mul(pell, B(0)));
  I.domain.target_witness = [d](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    const Poly& y = poly_of(b[0][0]);
    if (y.is_zero()) return Assignment{{aux_var(0), Element(Poly(y.ring()))}};
    auto x = (Poly::from_int(y.ring(), 1) + d * y * y).sqrt();
    if (!x) return std::nullopt;
    return Assignment{{aux_var(0), Element(*x)}};
  };
}

std::optional<Element> integer_at_one(const Poly& y, const Structure& source) {
  Scalar v = y.evaluate({Scalar::one(y.field())});
  if (!v.is_integer()) return std::nullopt;
  if (source.kind == Structure::Kind::Integers) {
    if (sgn(v.imag()) != 0) return std::nullopt;
    return Element(mpz_class(v.real().get_num()));
  }
  return Element(v);
}

}  // namespace

InterpPtr identity_interpretation(const Structure& s) {
  auto I = std::make_shared<Interpretation>(s, s);
  I->name = "identity on " + s.describe();
  set_blocks(I->domain, 1, 1, 0, "identity-domain");
  I->domain.target_witness = [](const std::vector<std::vector<Element>>&) -> std::optional<Assignment> {
    return Assignment{};
  };
  literal_relations(*I, "");
  I->encode = [](const Element& a) { return std::vector<Element>{a}; };
  I->decode = [](const std::vector<Element>& c) -> std::optional<Element> { return c[0]; };
  derive_witnesses(*I);
  return I;
}

InterpPtr interp_Z_in_polyring(const PolyRingPtr& ring) {
  if (ring->arity() != 1) throw std::invalid_argument("interp_Z_in_polyring needs a one-variable ring");
  if (ring->field.characteristic() != 0)
    throw std::invalid_argument("out of scope: char-p construction (Z in " + ring->describe() + ")");
  auto I = std::make_shared<Interpretation>(Structure::integers(), Structure::of_poly(ring));
  I->name = "Z in " + ring->describe();
  pell_or_zero_domain(*I, ring, "pell-or-zero-domain");
  value_at_one_relations(*I, ring);
  I->encode = [ring](const Element& a) {
    const mpz_class& m = a.as<mpz_class>();
    if (m == 0) return std::vector<Element>{Element(Poly(ring))};
    mpz_class n = abs(m);
    if (!n.fits_slong_p()) throw std::overflow_error("integer too large to encode");
    Poly y = chebyshev(ChebyshevKind::Second, n.get_si() - 1, ring);
    return std::vector<Element>{Element(sgn(m) < 0 ? -y : y)};
  };
  Structure src = I->source;
  I->decode = [src](const std::vector<Element>& c) { return integer_at_one(poly_of(c[0]), src); };
  derive_witnesses(*I);
  return I;
}

InterpPtr interp_quotient(const PolyRingPtr& ring) {
  const std::size_t n = ring->arity();
  if (n < 2) throw std::invalid_argument("interp_quotient needs at least two variables");
  auto small = PolyRing::make(ring->field, {ring->vars[0]}, ring->laurent);
  auto I = std::make_shared<Interpretation>(Structure::of_poly(small), Structure::of_poly(ring));
  I->name = small->describe() + " in " + ring->describe();
  const bool laurent = ring->laurent;

  std::vector<Poly> gens;
  for (std::size_t j = 1; j < n; ++j)
    gens.push_back(laurent ? Poly::variable(ring, j) - Poly::from_int(ring, 1) : Poly::variable(ring, j));
  auto ideal_term = [&] {
    Term sum = make_mul(A(0), C(gens[0]));
    for (std::size_t k = 1; k < gens.size(); ++k) sum = make_add(sum, make_mul(A(k), C(gens[k])));
    return sum;
  };
  auto member = [laurent, n](const Poly& f) -> std::optional<Assignment> {
    auto z = laurent ? ideal_membership_shifted(f) : ideal_membership_t2_tn(f);
    if (!z) return std::nullopt;
    Assignment a;
    for (std::size_t k = 0; k + 1 < n; ++k) a.insert_or_assign(aux_var(k), Element((*z)[k]));
    return a;
  };
  const std::string rule = laurent ? "shifted-ideal-quotient" : "ideal-quotient";

  set_blocks(I->domain, 1, 1, 0, rule + "-domain");
  I->domain.target_witness = [](const std::vector<std::vector<Element>>&) -> std::optional<Assignment> {
    return Assignment{};
  };
  set_blocks(I->equality, 2, 1, n - 1, rule + "-equality");
  I->equality.system.add_equation(make_sub(make_sub(B(0), B(1)), ideal_term()));
  I->equality.target_witness = [member](const std::vector<std::vector<Element>>& b) {
    return member(poly_of(b[0][0]) - poly_of(b[1][0]));
  };
  set_blocks(I->add, 3, 1, n - 1, rule + "-sum");
  I->add.system.add_equation(make_sub(make_sub(make_add(B(0), B(1)), B(2)), ideal_term()));
  I->add.target_witness = [member](const std::vector<std::vector<Element>>& b) {
    return member(poly_of(b[0][0]) + poly_of(b[1][0]) - poly_of(b[2][0]));
  };
  set_blocks(I->mul, 3, 1, n - 1, rule + "-product");
  I->mul.system.add_equation(make_sub(make_sub(make_mul(B(0), B(1)), B(2)), ideal_term()));
  I->mul.target_witness = [member](const std::vector<std::vector<Element>>& b) {
    return member(poly_of(b[0][0]) * poly_of(b[1][0]) - poly_of(b[2][0]));
  };

  I->encode = [ring, n](const Element& a) {
    Poly out(ring);
    for (const auto& [e, c] : poly_of(a).terms()) {
      Exponents big(n, 0);
      big[0] = e[0];
      out += Poly::monomial(ring, big, c);
    }
    return std::vector<Element>{Element(out)};
  };
  I->decode = [small, laurent, n](const std::vector<Element>& c) -> std::optional<Element> {
    Poly f = poly_of(c[0]);
    const Scalar v = laurent ? Scalar::one(f.field()) : Scalar::zero(f.field());
    for (std::size_t j = 1; j < n; ++j) f = f.substitute(j, v);
    Poly out(small);
    for (const auto& [e, coef] : f.terms()) out += Poly::monomial(small, {e[0]}, coef);
    return Element(out);
  };
  derive_witnesses(*I);
  return I;
}

InterpPtr interp_Kt_in_freealg(const FreeAlgebraPtr& alg, std::uint32_t letter) {
  if (letter >= alg->letters.size()) throw std::invalid_argument("letter outside the alphabet");
  auto ring = PolyRing::make(alg->field, {"t"});
  auto I = std::make_shared<Interpretation>(Structure::of_poly(ring), Structure::of_freealg(alg));
  I->name = ring->describe() + " in " + alg->describe() + " as C(" + alg->letters[letter] + ")";
  const NCPoly a = NCPoly::generator(alg, letter);

  set_blocks(I->domain, 1, 1, 0, "generator-centralizer-domain");
  I->domain.system.add_equation(make_sub(make_mul(B(0), C(a)), make_mul(C(a), B(0))));
  I->domain.target_witness = [a](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    const NCPoly& x = b[0][0].as<NCPoly>();
    if (x * a != a * x) return std::nullopt;
    return Assignment{};
  };
  literal_relations(*I, "");
  I->encode = [alg, letter](const Element& e) {
    std::vector<NCPoly::Term> terms;
    for (const auto& [ex, c] : poly_of(e).terms()) terms.emplace_back(Word(static_cast<std::size_t>(ex[0]), letter), c);
    return std::vector<Element>{Element(NCPoly::from_terms(alg, std::move(terms)))};
  };
  I->decode = [ring, letter](const std::vector<Element>& c) -> std::optional<Element> {
    Poly out(ring);
    for (const auto& [w, coef] : c[0].as<NCPoly>().terms()) {
      for (auto l : w)
        if (l != letter) return std::nullopt;
      out += Poly::monomial(ring, {static_cast<int>(w.size())}, coef);
    }
    return Element(out);
  };
  derive_witnesses(*I);
  return I;
}

InterpPtr interp_laurent_in_groupalg(const GroupAlgebraPtr& alg, const GroupElement& g0,
                                     const std::vector<GroupElement>& basis) {
  const GroupOracle& G = *alg->group;
  const GroupElement g = G.normalize(g0);
  const auto certified = G.centralizer_basis(g);
  if (!certified)
    throw std::invalid_argument("centralizer of " + G.to_string(g) + " in " + G.describe() +
                                " is not certified to be of Laurent type");
  if (basis.size() != certified->size())
    throw std::invalid_argument("centralizer of " + G.to_string(g) + " has rank " +
                                std::to_string(certified->size()));
  for (const auto& b : basis)
    if (!G.commutes(b, g)) throw std::invalid_argument(G.to_string(b) + " does not commute with " + G.to_string(g));
  // The given basis must generate the certified one.
  for (const auto& c : *certified)
    if (!decompose_in_basis(G, c, basis))
      throw std::invalid_argument(G.to_string(c) + " centralizes " + G.to_string(g) +
                                  " but is not in the span of the given basis");

  std::vector<std::string> vars;
  if (basis.size() == 1)
    vars = {"t"};
  else
    for (std::size_t j = 0; j < basis.size(); ++j) vars.push_back("t" + std::to_string(j + 1));
  auto ring = PolyRing::make(alg->field, vars, true);
  auto I = std::make_shared<Interpretation>(Structure::of_poly(ring), Structure::of_groupalg(alg));
  I->name = ring->describe() + " in " + alg->describe() + " as C(" + G.to_string(g) + ")";
  const GroupAlgElement ge = GroupAlgElement::element(alg, g);

  set_blocks(I->domain, 1, 1, 0, "group-centralizer-domain");
  I->domain.system.add_equation(make_sub(make_mul(B(0), C(ge)), make_mul(C(ge), B(0))));
  I->domain.target_witness = [g](const std::vector<std::vector<Element>>& b) -> std::optional<Assignment> {
    if (!commutes_in_algebra(b[0][0].as<GroupAlgElement>(), g)) return std::nullopt;
    return Assignment{};
  };
  literal_relations(*I, "");
  I->encode = [alg, basis](const Element& e) {
    return std::vector<Element>{Element(laurent_iso_inverse(poly_of(e), alg, basis))};
  };
  I->decode = [ring, basis](const std::vector<Element>& c) -> std::optional<Element> {
    try {
      return Element(laurent_iso(c[0].as<GroupAlgElement>(), basis, ring));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  derive_witnesses(*I);
  return I;
}

InterpPtr interp_Zi_in_laurent(const PolyRingPtr& ring) {
  if (ring->arity() != 1 || !ring->laurent)
    throw std::invalid_argument("interp_Zi_in_laurent needs a one-variable Laurent ring");
  if (ring->field.characteristic() != 0)
    throw std::invalid_argument("out of scope: char-p construction (Z[i] in " + ring->describe() + ")");
  const bool gaussian = ring->field.has_i();
  Structure source = gaussian ? Structure::gaussian_integers() : Structure::integers();
  auto I = std::make_shared<Interpretation>(source, Structure::of_poly(ring));
  I->name = source.describe() + " in " + ring->describe();
  pell_or_zero_domain(*I, ring, "laurent-pell-or-zero-domain");
  value_at_one_relations(*I, ring);
  // p + q i is the value at 1 of the Y-part of (t + eps u)^|p| ((1 - delta i u)/t)^|q|.
  I->encode = [ring, gaussian](const Element& a) {
    mpz_class p, q;
    if (gaussian) {
      p = a.as<Scalar>().real().get_num();
      q = a.as<Scalar>().imag().get_num();
    } else {
      p = a.as<mpz_class>();
    }
    if (p == 0 && q == 0) return std::vector<Element>{Element(Poly(ring))};
    mpz_class m = abs(p), n = abs(q);
    if (!m.fits_uint_p() || !n.fits_uint_p()) throw std::overflow_error("element too large to encode");
    const int eps = sgn(p) < 0 ? -1 : 1;
    const int delta = sgn(q) > 0 ? -1 : 1;
    PellPair pair = laurent_pell_family(static_cast<unsigned>(m.get_ui()), static_cast<unsigned>(n.get_ui()), eps,
                                        delta, ring);
    return std::vector<Element>{Element(pair.y)};
  };
  I->decode = [source](const std::vector<Element>& c) { return integer_at_one(poly_of(c[0]), source); };
  derive_witnesses(*I);
  return I;
}

}  // namespace ncd
