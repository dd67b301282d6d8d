#include "smc/measure.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smc/error.hpp"

namespace smc {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw ParseError("empty number");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("bad number '" + text + "'");
    for (char c : ip + fp)
      if (c < '0' || c > '9') throw ParseError("bad number '" + text + "'");
    BigInt num(ip.empty() ? "0" : ip);
    BigInt den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational q(num, den);
    return neg ? Rational(-q) : q;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad number '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

CspWeights CspWeights::published(const Rational& eps) {
  CspWeights w;
  w.eps = eps;
  w.w_r = Rational(1, 5) + eps;
  w.w_s = Rational(7, 10);
  w.w2_s = Rational(3, 5);
  w.w_b = Rational(1, 5);
  w.w_c = Rational(1, 10);
  return w;
}

Rational ScWeights::sep(int d) const {
  if (d < 0 || d > 3) throw std::invalid_argument("w_sep defined for degree <= 3");
  return w_sep[d];
}

Rational ScWeights::right(int d) const {
  if (d < 0 || d > 3) throw std::invalid_argument("w_right defined for degree <= 3");
  return w_right[d];
}

ScWeights ScWeights::published() {
  ScWeights w;
  const char* elt[] = {"0", "0", "0.15384", "0.22732", "0.26684", "0.29023", "0.30019"};
  const char* set[] = {"0", "0", "0.16408", "0.24592", "0.29320", "0.30224", "0.30224"};
  for (int i = 0; i < 7; ++i) {
    w.w_elt[i] = parse_rational(elt[i]);
    w.w_set[i] = parse_rational(set[i]);
  }
  w.w_right[2] = parse_rational("0.15282");
  w.w_right[3] = parse_rational("0.22669");
  w.w_sep[2] = parse_rational("0.75630");
  w.w_sep[3] = parse_rational("0.78943");
  w.eps = Rational(1, 100);
  return w;
}

namespace {

std::vector<std::vector<std::string>> read_lines(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find('#');
    if (p != std::string::npos) line = line.substr(0, p);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(toks);
  }
  return out;
}

}  // namespace

CspWeights read_csp_weights(std::istream& in) {
  CspWeights w;
  w.eps = 0;
  std::map<std::string, Rational*> keys{{"w_s", &w.w_s},   {"w2_s", &w.w2_s}, {"w_r", &w.w_r},
                                        {"w_b", &w.w_b},   {"w_c", &w.w_c},   {"eps", &w.eps}};
  std::map<std::string, bool> seen;
  for (auto& toks : read_lines(in)) {
    auto it = keys.find(toks[0]);
    if (it == keys.end() || toks.size() != 2) throw ParseError("bad weight line '" + toks[0] + "'");
    *it->second = parse_rational(toks[1]);
    seen[toks[0]] = true;
  }
  for (const char* k : {"w_s", "w2_s", "w_r", "w_b", "w_c"})
    if (!seen[k]) throw ParseError(std::string("missing weight ") + k);
  return w;
}

ScWeights read_sc_weights(std::istream& in) {
  ScWeights w = ScWeights::published();
  for (auto& toks : read_lines(in)) {
    if (toks[0] == "eps" && toks.size() == 2) {
      w.eps = parse_rational(toks[1]);
      continue;
    }
    if (toks.size() != 3) throw ParseError("bad weight line '" + toks[0] + "'");
    int d;
    try {
      d = std::stoi(toks[1]);
    } catch (const std::exception&) {
      throw ParseError("bad degree '" + toks[1] + "'");
    }
    Rational v = parse_rational(toks[2]);
    if (toks[0] == "w_elt" || toks[0] == "w_set") {
      if (d < 0 || d > 6) throw ParseError("degree out of range 0..6");
      (toks[0] == "w_elt" ? w.w_elt : w.w_set)[d] = v;
    } else if (toks[0] == "w_sep" || toks[0] == "w_right") {
      if (d < 0 || d > 3) throw ParseError("degree out of range 0..3");
      (toks[0] == "w_sep" ? w.w_sep : w.w_right)[d] = v;
    } else {
      throw ParseError("unknown weight '" + toks[0] + "'");
    }
  }
  return w;
}

long double mu_csp(const Graph& g, const Separation& sep, const CspWeights& w) {
  long s3 = 0, s2 = 0, r3 = 0, l3 = 0;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    switch (sep.get(v)) {
      case Side::Sep:
        if (d == 3) ++s3;
        if (d == 2) ++s2;
        break;
      case Side::Right:
        if (d == 3) ++r3;
        break;
      case Side::Left:
        if (d == 3) ++l3;
        break;
      default: break;
    }
  }
  long double mu = to_double(w.w_s) * s3 + to_double(w.w2_s) * s2 + to_double(w.w_r) * r3;
  if (r3 == l3) mu += to_double(w.w_b);
  if (r3 == l3 + 1) mu += to_double(w.w_c);
  if (r3 + s3 > 0) mu += to_double(w.w_d()) * std::log(static_cast<long double>(r3 + s3)) / std::log(1.5L);
  return mu;
}

long eta_csp(const Graph& g, const Separation& sep) {
  long s = 0, l = 0, r = 0;
  for (int v : g.vertices()) switch (sep.get(v)) {
      case Side::Sep: ++s; break;
      case Side::Right: ++r; break;
      case Side::Left: ++l; break;
      default: break;
    }
  // sides get renamed by the orientation rule, so R is taken as the larger one
  return 3 * s + 2 * std::max(l, r) + std::min(l, r) + 2L * g.num_edges();
}

namespace {

ConstraintResult linear(std::string id, Rational lhs, bool strict = false) {
  ConstraintResult c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.strict = strict;
  c.ok = strict ? lhs < 0 : lhs <= 0;
  c.lhs_float = to_double(lhs);
  return c;
}

// sum of 2^{-a_i} <= 1, evaluated in long double
ConstraintResult expo(std::string id, const std::vector<Rational>& exps) {
  long double s = 0;
  for (const auto& e : exps) s += std::pow(2.0L, -static_cast<long double>(to_double(e)));
  ConstraintResult c;
  c.id = std::move(id);
  c.exact = false;
  c.lhs_float = static_cast<double>(s - 1);
  c.lhs = Rational(0);
  c.ok = s - 1 <= 1e-9L;
  return c;
}

void finalize(ConstraintReport& rep) {
  rep.feasible = true;
  for (auto& c : rep.constraints) {
    rep.feasible = rep.feasible && c.ok;
    if (std::fabs(c.lhs_float) < 1e-9) rep.binding.push_back(c.id);
  }
}

Rational min3(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace

ConstraintReport check_csp(const CspWeights& w, Rational* eps_max) {
  ConstraintReport rep;
  auto& c = rep.constraints;
  const Rational &ws = w.w_s, &w2 = w.w2_s, &wr = w.w_r, &wb = w.w_b, &wc = w.w_c;
  Rational lo = min3(min3(min3(ws, w2), min3(wr, wb)), min3(wc, w.w_d()));
  c.push_back(linear("nonneg", -lo));
  c.push_back(linear("degredL", -wb + wc));
  c.push_back(linear("degredS", -ws + w2));
  c.push_back(linear("degredR1", -wr + wc));
  c.push_back(linear("degredR2", -wr + wb - wc));
  // separator eps -> 0+: strict inequality at eps = 0
  c.push_back(linear("r1", ws / 6 + wr * Rational(5, 12) - wr, true));
  c.push_back(linear("2S1", -w2 + ws - wr + wc));
  c.push_back(linear("2S0", -w2 + ws - wr + wb - wc));
  c.push_back(linear("r2", -ws + wr));
  c.push_back(linear("noR2", -ws + wc));
  c.push_back(linear("noR1", -ws + wb - wc));
  c.push_back(linear("r5", 1 - 2 * ws + w2 - wr));
  c.push_back(linear("red2L0", 1 - ws - wr - wb + wc));
  c.push_back(linear("red2L1", 1 - ws - wr - wc));
  c.push_back(linear("red2L2", -wr + wb));
  c.push_back(linear("red2R1", 1 - ws - 2 * wr - wc + wb));
  c.push_back(linear("red2R2", 1 - ws - 2 * wr + wc));
  if (eps_max) {
    // w_s (1/6 + e) + 5/12 w_r <= w_r  <=>  e <= (7/12 w_r - w_s/6) / w_s
    *eps_max = ws > 0 ? Rational((Rational(7, 12) * wr - ws / 6) / ws) : Rational(-1);
  }
  finalize(rep);
  return rep;
}

namespace {

// worst (largest) left-hand side of the degree >= 4 branching constraint over
// neighbour degree multisets; class 7 stands for "degree >= 7"
long double worst_ds4(const ScWeights& w, bool set_vertex, int d) {
  // weights as floats once; the inner loop runs over many multisets
  auto f = [](const Rational& q) { return static_cast<long double>(to_double(q)); };
  auto own = f(set_vertex ? w.set(d) : w.elt(d));
  auto own_dw = f(set_vertex ? w.dw_set(d) : w.dw_elt(d));
  // neighbours of a branched set have degree < d, of an element <= d
  int top = set_vertex ? d - 1 : d;
  std::vector<int> classes;
  std::vector<long double> nb, nb_dw;
  for (int k = 2; k <= std::min(top, 6); ++k) classes.push_back(k);
  if (top >= 7) classes.push_back(7);
  for (int k : classes) {
    nb.push_back(f(set_vertex ? w.elt(k) : w.set(k)));
    nb_dw.push_back(f(set_vertex ? w.dw_elt(k) : w.dw_set(k)));
  }
  // 2^-a + 2^-b is convex in the neighbour counts, so over all multisets of
  // size d the maximum sits at a vertex of the simplex: every neighbour in
  // one class
  long double worst = -1;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    long double a = own + d * nb[j] + own_dw * d * (classes[j] - 1);
    long double b = own + d * nb_dw[j];
    worst = std::max(worst, std::pow(2.0L, -a) + std::pow(2.0L, -b) - 1);
  }
  return worst;
}

}  // namespace

ConstraintReport check_sc(const ScWeights& w) {
  ConstraintReport rep;
  auto& c = rep.constraints;
  Rational lo = 0;
  for (int i = 0; i < 7; ++i) lo = min3(lo, min3(w.w_elt[i], w.w_set[i]));
  for (int i = 0; i < 4; ++i) lo = min3(lo, min3(w.w_sep[i], w.w_right[i]));
  c.push_back(linear("nonneg", -lo));
  c.push_back(linear("w01-elt", abs(w.w_elt[0]) + abs(w.w_elt[1])));
  c.push_back(linear("w01-set", abs(w.w_set[0]) + abs(w.w_set[1])));
  for (int i = 2; i <= 7; ++i) {
    c.push_back(linear("mono-elt-" + std::to_string(i), -w.dw_elt(i)));
    c.push_back(linear("mono-set-" + std::to_string(i), -w.dw_set(i)));
  }
  for (int i = 2; i <= 6; ++i) {
    c.push_back(linear("concave-elt-" + std::to_string(i), w.dw_elt(i + 1) - w.dw_elt(i)));
    c.push_back(linear("concave-set-" + std::to_string(i), w.dw_set(i + 1) - w.dw_set(i)));
  }
  c.push_back(linear("deg-dec-N2-elt", 2 * w.dw_elt(3) - w.elt(2)));
  c.push_back(linear("deg-dec-N2-set", 2 * w.dw_set(4) - w.set(2)));
  long double worst[2][21];
  for (int sv = 0; sv < 2; ++sv)
    for (int d = 4; d <= 20; ++d) worst[sv][d] = worst_ds4(w, sv, d);
  for (int d = 4; d <= 12; ++d) {
    for (int sv : {1, 0}) {
      ConstraintResult r;
      r.id = std::string(sv ? "ds4set-" : "ds4elt-") + std::to_string(d);
      r.exact = false;
      r.lhs_float = static_cast<double>(worst[sv][d]);
      r.ok = r.lhs_float <= 1e-9;
      c.push_back(r);
    }
  }
  // tail d = 13..20 must be dominated by d = 12
  for (int sv : {1, 0}) {
    long double at12 = worst[sv][12], tail = -1;
    for (int d = 13; d <= 20; ++d) tail = std::max(tail, worst[sv][d]);
    ConstraintResult r;
    r.id = std::string(sv ? "ds4set" : "ds4elt") + "-tail-dominated";
    r.exact = false;
    r.lhs_float = static_cast<double>(tail - at12);
    r.ok = tail <= at12 + 1e-12L && tail <= 1e-9L;
    c.push_back(r);
  }
  c.push_back(linear("bridge-elt-3", w.right(3) - w.elt(3), true));
  c.push_back(linear("bridge-set-3", w.right(3) - w.set(3), true));
  for (int i = 0; i <= 2; ++i) {
    c.push_back(linear("bridge-elt-" + std::to_string(i), w.right(i) - w.elt(i)));
    c.push_back(linear("bridge-set-" + std::to_string(i), w.right(i) - w.set(i)));
  }
  Rational delta = min3(min3(w.sep(2) - w.sep(1), (w.right(2) - w.right(1)) / 2),
                        min3(w.sep(3) - w.sep(2), (w.right(3) - w.right(2)) / 2));
  c.push_back(linear("deg-dec", -delta));
  c.push_back(linear("sep", w.sep(3) - Rational(7, 2) * w.right(3), true));
  for (int d = 2; d <= 3; ++d) {
    c.push_back(linear("no-nb-L-" + std::to_string(d), -w.sep(d) + w.right(d)));
    c.push_back(linear("no-nb-R-" + std::to_string(d), -w.sep(d) + w.right(d) / 2));
  }
  c.push_back(linear("deg2-S", -w.sep(2) + w.sep(3) + (w.right(2) - w.right(3)) / 2));
  c.push_back(linear("imbal-2LS", -w.sep(3) + w.right(3) / 2));
  c.push_back(linear("deg-dec-N2-sep", 2 * (w.sep(3) - w.sep(2)) - w.sep(2)));
  c.push_back(linear("deg-dec-N2-right", 2 * (w.right(3) - w.right(2)) - w.right(2)));
  auto dr = [&](int d) { return w.right(d) - w.right(d - 1); };
  const Rational ds3 = w.sep(3) - w.sep(2);
  for (int dl = 2; dl <= 3; ++dl)
    for (int drr = 2; drr <= 3; ++drr)
      c.push_back(expo("branch-S-bal-" + std::to_string(dl) + std::to_string(drr),
                       {w.sep(3) + ds3 + (dr(drr) + dr(dl)) / 2,
                        2 * w.sep(3) + (w.right(drr) + w.right(dl)) / 2 + (drr + dl) * delta}));
  for (int drr = 2; drr <= 3; ++drr)
    c.push_back(expo("branch-S-imbal-" + std::to_string(drr),
                     {w.sep(3) + ds3 + dr(drr), 2 * w.sep(3) + w.right(drr) + drr * delta}));
  for (int d1 = 2; d1 <= 3; ++d1)
    for (int d2 = 2; d2 <= 3; ++d2)
      for (int d3 = 2; d3 <= 3; ++d3)
        c.push_back(expo("branch2-" + std::to_string(d1) + std::to_string(d2) + std::to_string(d3),
                         {w.sep(3) + (dr(d1) + dr(d2) + dr(d3)) / 2,
                          w.sep(3) + (w.right(d1) + w.right(d2) + w.right(d3)) / 2 +
                              (d1 + d2 + d3 - 3) * delta}));
  for (int d = 2; d <= 3; ++d)
    c.push_back(expo("imbal-2L-" + std::to_string(d),
                     {w.sep(3) + w.right(2) + dr(d), w.sep(3) + w.right(2) + dr(d)}));
  finalize(rep);
  return rep;
}

Exponent exponent_csp(const CspWeights& w, int r) {
  if (!check_csp(w).feasible) throw SolverError("infeasible CSP weights");
  Exponent e;
  e.exponent = to_double(w.w_r - w.eps);
  e.base = std::pow(static_cast<double>(r), e.exponent);
  return e;
}

Exponent exponent_sc(const ScWeights& w) {
  if (!check_sc(w).feasible) throw SolverError("infeasible set cover weights");
  Exponent e;
  e.exponent = to_double(w.elt(6) + w.set(6));
  e.base = std::pow(2.0, e.exponent);
  return e;
}

CspWeights improve_csp(const CspWeights& start, int budget) {
  if (!check_csp(start).feasible) throw SolverError("infeasible start weights");
  CspWeights cur = start;
  Rational step(1, 100);
  std::vector<Rational CspWeights::*> coords{&CspWeights::w_r, &CspWeights::w_s,
                                             &CspWeights::w2_s, &CspWeights::w_b,
                                             &CspWeights::w_c};
  for (int it = 0; it < budget; ++it) {
    bool moved = false;
    // lower w_r directly, otherwise make room by moving another coordinate
    for (auto m : coords)
      for (int sgn : {-1, 1}) {
        if (m == &CspWeights::w_r && sgn > 0) continue;
        CspWeights cand = cur;
        cand.*m += sgn * step;
        if (!check_csp(cand).feasible) continue;
        if (m != &CspWeights::w_r) {
          CspWeights lowered = cand;
          lowered.w_r -= step;
          if (!check_csp(lowered).feasible) continue;
          cand = lowered;
        }
        cur = cand;
        moved = true;
        goto next;
      }
  next:
    if (!moved) step /= 2;
  }
  return cur;
}

ScWeights improve_sc(const ScWeights& start, int budget) {
  if (!check_sc(start).feasible) throw SolverError("infeasible start weights");
  ScWeights cur = start;
  Rational step(1, 1000);
  for (int it = 0; it < budget; ++it) {
    bool moved = false;
    for (int k = 0; k < 22 && !moved; ++k) {
      ScWeights cand = cur;
      Rational* p = k < 7    ? &cand.w_elt[k]
                    : k < 14 ? &cand.w_set[k - 7]
                    : k < 18 ? &cand.w_sep[k - 14]
                             : &cand.w_right[k - 18];
      if (*p - step < 0) continue;
      *p -= step;
      if (check_sc(cand).feasible) {
        cur = cand;
        moved = true;
      }
    }
    if (!moved) step /= 2;
  }
  return cur;
}

void print_report(std::ostream& out, const ConstraintReport& rep) {
  std::size_t width = 4;
  for (auto& c : rep.constraints) width = std::max(width, c.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "id"
      << "  " << std::setw(16) << "lhs" << std::setw(16) << "slack"
      << "ok\n";
  for (auto& c : rep.constraints) {
    out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(16)
        << std::setprecision(8) << c.lhs_float << std::setw(16) << -c.lhs_float
        << (c.ok ? "yes" : "NO") << '\n';
  }
  for (auto& c : rep.constraints) {
    out << "CONSTRAINT " << c.id << " lhs=";
    if (c.exact)
      out << rational_to_string(c.lhs) << " slack=" << rational_to_string(-c.lhs);
    else
      out << std::setprecision(12) << c.lhs_float << " slack=" << -c.lhs_float;
    out << " ok=" << (c.ok ? "true" : "false") << '\n';
  }
}

}  // namespace smc
