#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "smc/countvec.hpp"
#include "smc/graph.hpp"
#include "smc/separator.hpp"

namespace smc {

// "0.15384", "3/7", "-2" -> exact rational
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);
double to_double(const Rational& q);

struct CspWeights {
  Rational w_s, w2_s, w_r, w_b, w_c;
  Rational eps;
  Rational w_d() const { return w_b + 1; }
  // w_r = 0.2 + eps, w_s = 0.7, w2_s = 0.6, w_b = 0.2, w_c = 0.1
  static CspWeights published(const Rational& eps = Rational(1, 1000));
};

struct ScWeights {
  std::array<Rational, 7> w_elt{}, w_set{};   // degree 0..6, constant above 6
  std::array<Rational, 4> w_sep{}, w_right{};  // degree 0..3
  Rational eps = Rational(1, 100);
  Rational elt(int d) const { return w_elt[d > 6 ? 6 : d]; }
  Rational set(int d) const { return w_set[d > 6 ? 6 : d]; }
  Rational dw_elt(int d) const { return d > 6 || d < 1 ? Rational(0) : w_elt[d] - w_elt[d - 1]; }
  Rational dw_set(int d) const { return d > 6 || d < 1 ? Rational(0) : w_set[d] - w_set[d - 1]; }
  Rational sep(int d) const;    // throws for d > 3
  Rational right(int d) const;  // throws for d > 3
  Rational B() const { return 6 * w_right[3]; }
  static ScWeights published();
};

CspWeights read_csp_weights(std::istream& in);
ScWeights read_sc_weights(std::istream& in);

// separator measure of a subcubic constraint graph; log of 0 is taken as 0
long double mu_csp(const Graph& g, const Separation& sep, const CspWeights& w);
// 3|S| + 2|R| + |L| + 2|E| with R the larger side
long eta_csp(const Graph& g, const Separation& sep);

struct ConstraintResult {
  std::string id;
  Rational lhs;    // constraint is lhs <= 0 (or < 0 when strict)
  bool strict = false;
  bool ok = false;
  double lhs_float = 0;  // for exponential constraints lhs is sum - 1 in floating point
  bool exact = true;
  Rational slack() const { return -lhs; }
};

struct ConstraintReport {
  std::vector<ConstraintResult> constraints;
  bool feasible = false;
  std::vector<std::string> binding;  // |slack| < 1e-9
};

// The sixteen inequalities of the CSP system.  (r1) carries eps and is
// checked in the limit eps -> 0+; `eps_max` reports the largest separator eps
// for which it still holds at the given weights.
ConstraintReport check_csp(const CspWeights& w, Rational* eps_max = nullptr);
ConstraintReport check_sc(const ScWeights& w);

struct Exponent {
  double exponent = 0;
  double base = 0;
};
Exponent exponent_csp(const CspWeights& w, int r);
Exponent exponent_sc(const ScWeights& w);

CspWeights improve_csp(const CspWeights& start, int budget);
ScWeights improve_sc(const ScWeights& start, int budget);

void print_report(std::ostream& out, const ConstraintReport& rep);

}  // namespace smc
