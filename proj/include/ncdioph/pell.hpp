#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncdioph/poly.hpp"

namespace ncd {

enum class ChebyshevKind { First, Second };  // T_n, U_n

/// n-th Chebyshev polynomial in the single variable of `ring`. For the
/// second kind, n = -1 yields 0 so that (±T_n, ±U_{n-1}) covers n = 0.
Poly chebyshev(ChebyshevKind kind, long n, const PolyRingPtr& ring);
/// [P_0, ..., P_{n_max}] via the three-term recurrence.
std::vector<Poly> chebyshev_sequence(ChebyshevKind kind, long n_max, const PolyRingPtr& ring);

/// X^2 - (t^2 - 1) Y^2 == 1 in a one-variable (Laurent) ring.
bool pell_check(const Poly& x, const Poly& y);

struct PellPair {
  Poly x, y;
};

struct PellEnumeration {
  std::vector<PellPair> pairs;
  /// False in positive characteristic: the listed pairs solve the equation but
  /// need not exhaust its solutions.
  bool complete = true;
};

/// (±T_n, ±U_{n-1}) for n = 0..n_max with duplicates removed.
PellEnumeration pell_enumerate(long n_max, const PolyRingPtr& ring);

/// P + uQ with u^2 = t^2 - 1, over a one-variable (Laurent) ring.
class QuadExtElement {
 public:
  QuadExtElement(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {}

  const Poly& p() const { return p_; }
  const Poly& q() const { return q_; }
  QuadExtElement operator*(const QuadExtElement& o) const;
  QuadExtElement pow(unsigned e) const;
  /// P - uQ
  QuadExtElement conjugate() const { return {p_, -q_}; }

 private:
  Poly p_, q_;
};

/// (X, Y) with X + uY = (t + εu)^m ((1 - δ i u)/t)^n in laurent(Qi; t).
/// eps and delta are ±1. n > 0 throws std::invalid_argument unless the ring
/// is a Laurent ring whose field contains i.
PellPair laurent_pell_family(unsigned m, unsigned n, int eps, int delta, const PolyRingPtr& ring);

/// If f(1) == g(1) returns h with f - g = h (t - 1); otherwise nullopt.
std::optional<Poly> value_at_one_equiv(const Poly& f, const Poly& g);

/// If f(t1, 0, ..., 0) == 0 returns z2..zn with f = t2 z2 + ... + tn zn,
/// each term assigned to the first of t2..tn it contains.
std::optional<std::vector<Poly>> ideal_membership_t2_tn(const Poly& f);

/// Laurent analogue: f(t1, 1, ..., 1) == 0 iff f = sum_{j>=2} (t_j - 1) z_j.
std::optional<std::vector<Poly>> ideal_membership_shifted(const Poly& f);

}  // namespace ncd
