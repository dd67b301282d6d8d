#include <cmath>
#include <sstream>

#include "doctest.h"
#include "smc/error.hpp"
#include "smc/measure.hpp"

using namespace smc;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.15384") == Rational(15384, 100000));
  CHECK(parse_rational("3/7") == Rational(3, 7));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS(parse_rational("1.2.3"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("published csp weights") {
  CspWeights w = CspWeights::published();
  Rational eps_max;
  ConstraintReport rep = check_csp(w, &eps_max);
  CHECK(rep.feasible);
  CHECK(eps_max > 0);
  Exponent e = exponent_csp(w, 3);
  CHECK(e.exponent == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::fabs(e.base - 1.2458) < 1e-4);
}

TEST_CASE("csp constraint ids") {
  ConstraintReport rep = check_csp(CspWeights::published());
  std::vector<std::string> want = {"degredL", "degredS", "degredR1", "degredR2", "r1",   "2S1",
                                   "2S0",     "r2",      "noR2",     "noR1",     "r5",   "red2L0",
                                   "red2L1",  "red2L2",  "red2R1",   "red2R2"};
  for (const auto& id : want) {
    bool found = false;
    for (const auto& c : rep.constraints) found |= c.id == id;
    CHECK_MESSAGE(found, id);
  }
}

TEST_CASE("infeasible csp weights are flagged") {
  CspWeights w = CspWeights::published();
  w.w_r = Rational(1, 10);
  CHECK_FALSE(check_csp(w).feasible);
  CHECK_THROWS(exponent_csp(w, 2));
}

TEST_CASE("published set cover table") {
  ScWeights w = ScWeights::published();
  ConstraintReport rep = check_sc(w);
  CHECK(rep.feasible);
  Exponent e = exponent_sc(w);
  CHECK(std::fabs(e.base - 1.5183) < 1e-4);
  CHECK(e.exponent == doctest::Approx(0.60243).epsilon(1e-6));
}

TEST_CASE("set cover table perturbed") {
  ScWeights w = ScWeights::published();
  w.w_elt[3] = parse_rational("0.1");
  CHECK_FALSE(check_sc(w).feasible);
}

TEST_CASE("weights files") {
  std::istringstream in("w_s 0.7\nw2_s 0.6\nw_r 0.201\nw_b 0.2\nw_c 0.1\neps 1/1000\n");
  CspWeights w = read_csp_weights(in);
  CHECK(w.w_r == Rational(201, 1000));
  std::istringstream missing("w_s 0.7\n");
  CHECK_THROWS(read_csp_weights(missing));
  std::istringstream sc("w_elt 2 0.15384\nw_right 3 0.22669\neps 1/100\n");
  ScWeights s = read_sc_weights(sc);
  CHECK(s.w_elt[2] == parse_rational("0.15384"));
  CHECK(s.B() == 6 * parse_rational("0.22669"));
}

TEST_CASE("report format") {
  std::ostringstream os;
  print_report(os, check_csp(CspWeights::published()));
  CHECK(os.str().find("CONSTRAINT r2 lhs=") != std::string::npos);
}

TEST_CASE("improvement keeps feasibility") {
  CspWeights w = improve_csp(CspWeights::published(), 20);
  CHECK(check_csp(w).feasible);
  CHECK(w.w_r <= CspWeights::published().w_r);
}
