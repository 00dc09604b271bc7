#include "ncdioph/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ncd {

namespace {

mpz_class mod_positive(const mpz_class& a, std::int64_t p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return mpq_class(rn, rd);
}

// Rationals of height exactly h in enumeration order.
std::vector<mpq_class> rationals_of_height(std::uint64_t h) {
  std::vector<mpq_class> out;
  for (std::uint64_t den = 1; den <= h; ++den) {
    for (std::uint64_t num = 0; num <= h; ++num) {
      if (std::max(num, den) != h) continue;
      if (std::gcd(num, den) != 1) continue;
      mpq_class q(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
      q.canonicalize();
      out.push_back(q);
      if (num != 0) out.push_back(-q);
    }
  }
  return out;
}

mpz_class rational_height(const mpq_class& q) {
  mpz_class n = abs(q.get_num());
  return n > q.get_den() ? n : mpz_class(q.get_den());
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(static_cast<long>(p)).get_mpz_t(), 30) == 0)
    throw std::invalid_argument("F_p requires a prime modulus, got " + std::to_string(p));
  return {Kind::Prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Qi") return gaussian();
  if (text.size() > 1 && text[0] == 'F') {
    std::int64_t p = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad field name: " + std::string(text));
      p = p * 10 + (c - '0');
      if (p > (std::int64_t{1} << 40)) throw std::invalid_argument("modulus too large: " + std::string(text));
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field: " + std::string(text));
}

std::string Field::name() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::Gaussian: return "Qi";
    case Kind::Prime: return "F" + std::to_string(modulus);
  }
  return "?";
}

std::vector<Scalar> Field::enumerate(std::uint64_t bound) const {
  std::vector<Scalar> out;
  if (kind == Kind::Prime) {
    std::uint64_t n = std::min<std::uint64_t>(bound, static_cast<std::uint64_t>(modulus));
    out.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) out.push_back(Scalar::from_int(*this, static_cast<long>(r)));
    return out;
  }
  std::vector<std::vector<mpq_class>> by_height(bound + 1);
  for (std::uint64_t h = 1; h <= bound; ++h) by_height[h] = rationals_of_height(h);
  if (kind == Kind::Rational) {
    for (std::uint64_t h = 1; h <= bound; ++h)
      for (const auto& q : by_height[h]) out.push_back(Scalar::rational(*this, q));
    return out;
  }
  // Q(i): graded by max height, then by the rational order of each part.
  std::vector<std::pair<mpq_class, std::uint64_t>> flat;
  for (std::uint64_t h = 1; h <= bound; ++h)
    for (const auto& q : by_height[h]) flat.emplace_back(q, h);
  for (std::uint64_t h = 1; h <= bound; ++h) {
    for (const auto& [re, hr] : flat) {
      for (const auto& [im, hi] : flat) {
        if (std::max(hr, hi) != h) continue;
        out.push_back(Scalar::gaussian(*this, re, im));
      }
    }
  }
  return out;
}

Scalar::Scalar(Field f, mpq_class re, mpq_class im) : field_(f), re_(std::move(re)), im_(std::move(im)) {
  canonicalize();
}

Scalar::Scalar(Field f, mpq_class re, mpq_class im, Exact) : field_(f), re_(std::move(re)), im_(std::move(im)) {
  if (field_.kind == Field::Kind::Prime) {
    mpz_ptr num = mpq_numref(re_.get_mpq_t());
    mpz_fdiv_r_ui(num, num, static_cast<unsigned long>(field_.modulus));
  }
}

void Scalar::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
  if (field_.kind == Field::Kind::Prime) {
    // residues are kept as integers in [0, p)
    mpz_class num = re_.get_num(), den = re_.get_den();
    mpz_class p(static_cast<long>(field_.modulus));
    if (den != 1) {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) throw DivisionByZero();
      num *= inv;
    }
    re_ = mpq_class(mod_positive(num, field_.modulus));
    im_ = 0;
  } else if (field_.kind == Field::Kind::Rational) {
    if (sgn(im_) != 0) throw StructureMismatch("imaginary part in Q");
  }
}

Scalar Scalar::from_int(const Field& f, const mpz_class& n) { return Scalar(f, mpq_class(n), mpq_class(0)); }

Scalar Scalar::rational(const Field& f, const mpq_class& q) { return Scalar(f, q, mpq_class(0)); }

Scalar Scalar::gaussian(const Field& f, const mpq_class& re, const mpq_class& im) {
  if (!f.has_i() && sgn(im) != 0) throw StructureMismatch("field " + f.name() + " does not contain i");
  return Scalar(f, re, im);
}

Scalar Scalar::imaginary_unit(const Field& f) { return gaussian(f, 0, 1); }

bool Scalar::is_integer() const {
  if (field_.kind == Field::Kind::Prime) return true;
  return re_.get_den() == 1 && im_.get_den() == 1;
}

mpz_class Scalar::height() const {
  if (field_.kind == Field::Kind::Prime) return re_.get_num();
  mpz_class a = rational_height(re_);
  if (field_.kind == Field::Kind::Gaussian) {
    mpz_class b = rational_height(im_);
    if (b > a) a = b;
  }
  return a;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw StructureMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, re_ + o.re_, im_ + o.im_, Exact{});
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, re_ - o.re_, im_ - o.im_, Exact{});
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_.kind == Field::Kind::Gaussian)
    return Scalar(field_, re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, Exact{});
  return Scalar(field_, re_ * o.re_, mpq_class(), Exact{});
}

Scalar Scalar::operator-() const { return Scalar(field_, -re_, -im_, Exact{}); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (field_.kind) {
    case Field::Kind::Rational: return Scalar(field_, 1 / re_, 0);
    case Field::Kind::Prime: {
      mpz_class inv, p(static_cast<long>(field_.modulus));
      mpz_class r = re_.get_num();
      mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      return Scalar(field_, mpq_class(inv), 0);
    }
    case Field::Kind::Gaussian: {
      mpq_class norm = re_ * re_ + im_ * im_;
      return Scalar(field_, re_ / norm, -im_ / norm);
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<Scalar> Scalar::sqrt() const {
  switch (field_.kind) {
    case Field::Kind::Rational: {
      auto r = rational_sqrt(re_);
      if (!r) return std::nullopt;
      return Scalar(field_, *r, 0);
    }
    case Field::Kind::Prime: {
      for (std::int64_t r = 0; r < field_.modulus; ++r) {
        Scalar c = from_int(field_, static_cast<long>(r));
        if (c * c == *this) return c;
      }
      return std::nullopt;
    }
    case Field::Kind::Gaussian: {
      if (sgn(im_) == 0) {
        if (auto r = rational_sqrt(re_)) return Scalar(field_, *r, 0);
        if (auto r = rational_sqrt(-re_)) return Scalar(field_, 0, *r);
        return std::nullopt;
      }
      // (a + bi)^2 = re + im*i  =>  a^2 = (re + |z|)/2, b = im / 2a
      auto modulus = rational_sqrt(re_ * re_ + im_ * im_);
      if (!modulus) return std::nullopt;
      auto a = rational_sqrt((re_ + *modulus) / 2);
      if (!a || sgn(*a) == 0) return std::nullopt;
      return Scalar(field_, *a, im_ / (2 * *a));
    }
  }
  return std::nullopt;
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && re_ == o.re_ && im_ == o.im_; }

bool Scalar::operator<(const Scalar& o) const {
  if (re_ != o.re_) return re_ < o.re_;
  return im_ < o.im_;
}

std::string Scalar::to_string() const {
  if (field_.kind != Field::Kind::Gaussian || sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  std::string out = re_.get_str();
  if (imag[0] != '-') out += '+';
  return out + imag;
}

bool Scalar::is_compound() const {
  std::string s = to_string();
  return s.find_first_of("+-") != std::string::npos;
}

}  // namespace ncd
