#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <utility>

#include "doctest.h"
#include "rslab/gl_action.hpp"
#include "rslab/tensor_cg.hpp"

using namespace rslab;

namespace {

using TKey = std::pair<GTPattern, GTPattern>;
using TVec = std::map<TKey, SqrtSum>;

void tadd(TVec& t, const GTPattern& a, const GTPattern& b, const SqrtRational& c) {
  if (c.is_zero()) return;
  t[{a, b}].add(c);
}

TVec expand(const GTPattern& mprime, const Weight& lam, const SqrtRational& scale) {
  TVec out;
  for (const auto& term : tensor_expand(mprime, lam)) tadd(out, term.m, term.p, term.coef * scale);
  return out;
}

// Leibniz action of a generator on a tensor combination, exactly.
TVec tensor_act(const Generator& g, const TVec& v) {
  TVec out;
  for (const auto& [key, sum] : v)
    for (const auto& part : sum.terms()) {
      LinCombo left = act(g, LinCombo::unit(Basis::zeta, key.first));
      for (const auto& t : left.terms()) tadd(out, t.pat, key.second, part * t.coef);
      LinCombo right = act(g, LinCombo::unit(Basis::zeta, key.second));
      for (const auto& t : right.terms()) tadd(out, key.first, t.pat, part * t.coef);
    }
  return out;
}

bool tvec_zero(const TVec& v) {
  for (const auto& [key, sum] : v)
    if (!sum.is_zero()) return false;
  return true;
}

TVec tvec_diff(const TVec& a, const TVec& b) {
  TVec out = a;
  for (const auto& [key, sum] : b)
    for (const auto& part : sum.terms()) out[key].add(-part);
  return out;
}

Weight elementary_top(int n, long l) {
  Weight w(n, 0);
  w[0] = l;
  return w;
}

}  // namespace

TEST_CASE("factorial ladder helpers") {
  CHECK(S_circ({1, 1}, {1, 0}) == Rational(2));
  CHECK(S_circ({1, 1}, {1, 1}) == Rational(1));
  CHECK(S_plus({1, 0}, {1}) == Rational(1));
  CHECK(C_circ({3, 2}, {2, 1}) == Rational(1, 3));
  CHECK(C_circ({2, 1, 0}, {2, 1, 0}) == Rational(1));
}

TEST_CASE("rank-one couplings match the classical pair") {
  GTPattern e1({{1, 0}, {1}}), e2({{1, 0}, {0}});
  GTPattern f1 = elementary_pattern({1, 0}), f2 = elementary_pattern({0, 1});
  GTPattern det({{1, 1}, {1}});
  SqrtRational h = SqrtRational::sqrt_of(Rational(1, 2));
  CHECK(cg_coef(e1, f2, det) == h);
  CHECK(cg_coef(e2, f1, det) == -h);
  CHECK(cg_coef(e1, f1, det).is_zero());
  GTPattern sym({{2, 0}, {1}});
  CHECK(cg_coef(e1, f2, sym) == h);
  CHECK(cg_coef(e2, f1, sym) == h);
}

TEST_CASE("single-box top coupling collapses to a closed form") {
  auto closed = [](const Weight& lamp, const Weight& lam, const Weight& mu, long l) {
    Rational v = Rational(factorial(l)) * S_circ(lamp, lamp) * S_plus(lamp, mu) /
                 (S_circ(lamp, lam) * S_plus(lam, mu));
    return SqrtRational::sqrt_of(v);
  };
  Weight lam2 = {2, 0};
  for (const Weight& lamp : branching_circ(lam2, 2)) {
    GTPattern p = elementary_pattern({0, 2});
    for (long mu = lam2[1]; mu <= lam2[0]; ++mu) {
      if (!(lamp[0] >= mu && mu >= lamp[1])) continue;
      GTPattern m({{lam2[0], lam2[1]}, {mu}});
      GTPattern mp({{lamp[0], lamp[1]}, {mu}});
      CHECK(cg_coef(m, p, mp) == closed(lamp, lam2, {mu}, 2));
    }
  }
  Weight lam3 = {1, 1, 0};
  GTPattern p3 = elementary_pattern({0, 0, 2});
  for (const Weight& lamp : branching_circ(lam3, 2)) {
    for (const Weight& mu : branching_plus(lam3)) {
      if (!in_branching_plus(mu, lamp)) continue;
      for (const auto& lower : enumerate_patterns(mu)) {
        GTPattern m = lower.with_top(lam3);
        GTPattern mp = lower.with_top(lamp);
        CHECK(cg_coef(m, p3, mp) == closed(lamp, lam3, mu, 2));
      }
    }
  }
}

TEST_CASE("highest vector coupling gives the content ratio") {
  auto probe = [](const Weight& lam, const Weight& lamp) {
    Weight gamma = sub(lamp, lam);
    SqrtRational c = cg_coef(highest_pattern(lam), elementary_pattern(gamma), highest_pattern(lamp));
    CHECK(c == SqrtRational::sqrt_of(C_circ(lamp, lam)));
  };
  probe({2, 1}, {3, 2});
  probe({2, 0}, {3, 1});
  probe({1, 1, 0}, {2, 1, 1});
  probe({1, 0, 0}, {2, 1, 0});
  probe({2, 1, 0}, {3, 2, 1});
}

TEST_CASE("coupling columns are orthonormal and complete") {
  struct Case {
    Weight lam;
    long l;
  };
  for (const Case& c : {Case{{2, 1}, 2}, Case{{1, 0, 0}, 1}, Case{{1, 1, 0}, 2}}) {
    const int n = static_cast<int>(c.lam.size());
    std::vector<GTPattern> emms = enumerate_patterns(c.lam);
    std::vector<GTPattern> pees = enumerate_patterns(elementary_top(n, c.l));
    std::vector<TVec> columns;
    long total = 0;
    for (const Weight& lamp : branching_circ(c.lam, c.l)) {
      for (const auto& mp : enumerate_patterns(lamp)) {
        columns.push_back(expand(mp, c.lam, SqrtRational(1)));
        ++total;
      }
    }
    CHECK(total == weyl_dimension_long(c.lam) * weyl_dimension_long(elementary_top(n, c.l)));
    for (std::size_t a = 0; a < columns.size(); ++a)
      for (std::size_t b = a; b < columns.size(); ++b) {
        SqrtSum dot;
        for (const auto& [key, sum] : columns[a]) {
          auto it = columns[b].find(key);
          if (it == columns[b].end()) continue;
          for (const auto& x : sum.terms())
            for (const auto& y : it->second.terms()) dot.add(x * y);
        }
        if (a == b)
          CHECK(dot.equals(1));
        else
          CHECK(dot.is_zero());
      }
    // completeness: every pure tensor is recovered from its coupling data
    for (const auto& m : emms)
      for (const auto& p : pees) {
        TVec recovered;
        for (const Weight& lamp : branching_circ(c.lam, c.l))
          for (const auto& mp : enumerate_patterns(lamp)) {
            SqrtRational w = cg_coef(m, p, mp);
            if (w.is_zero()) continue;
            for (const auto& term : tensor_expand(mp, c.lam))
              tadd(recovered, term.m, term.p, term.coef * w);
          }
        tadd(recovered, m, p, SqrtRational(-1));
        CHECK(tvec_zero(recovered));
      }
  }
}

TEST_CASE("coupling map intertwines the ladder action") {
  struct Case {
    Weight lam;
    long l;
  };
  for (const Case& c : {Case{{2, 1}, 2}, Case{{1, 1, 0}, 2}}) {
    const int n = static_cast<int>(c.lam.size());
    std::vector<Generator> gens;
    for (int j = 1; j < n; ++j) {
      gens.push_back(Raise(j));
      gens.push_back(Lower(j));
    }
    for (int k = 1; k <= n; ++k) gens.push_back(Diag(k));
    for (const Weight& lamp : branching_circ(c.lam, c.l))
      for (const auto& mp : enumerate_patterns(lamp)) {
        TVec image = expand(mp, c.lam, SqrtRational(1));
        for (const auto& g : gens) {
          TVec lhs = tensor_act(g, image);
          TVec rhs;
          LinCombo acted = act(g, LinCombo::unit(Basis::zeta, mp));
          for (const auto& t : acted.terms()) {
            TVec piece = expand(t.pat, c.lam, t.coef);
            for (const auto& [key, sum] : piece)
              for (const auto& part : sum.terms()) tadd(rhs, key.first, key.second, part);
          }
          CHECK(tvec_zero(tvec_diff(lhs, rhs)));
        }
      }
  }
}

TEST_CASE("rational normalization") {
  CHECK(cg_coef_rational(highest_pattern({2, 1}), elementary_pattern({1, 1}),
                         highest_pattern({3, 2})) == Rational(2, 3));
  // rationality holds across a full decomposition
  Weight lam = {1, 1, 0};
  for (const Weight& lamp : branching_circ(lam, 2))
    for (const auto& mp : enumerate_patterns(lamp))
      for (const auto& term : tensor_expand(mp, lam))
        CHECK_NOTHROW(cg_coef_rational(term.m, term.p, mp));
}

TEST_CASE("zero-budget coupling is the identity") {
  Weight lam = {2, 1, 0};
  GTPattern p0 = elementary_pattern({0, 0, 0});
  for (const auto& m : enumerate_patterns(lam)) {
    for (const auto& m2 : enumerate_patterns(lam)) {
      SqrtRational c = cg_coef(m, p0, m2);
      if (m == m2)
        CHECK(c == SqrtRational(1));
      else
        CHECK(c.is_zero());
    }
  }
}
