#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pfano/annihilator.hpp"
#include "pfano/integration.hpp"
#include "pfano/parse.hpp"

using namespace pfano;
using pfano::testing::random_poly;

namespace {

std::vector<WeylOperator> ops(const WeylRingPtr& ring, const std::vector<std::string>& src) {
  std::vector<WeylOperator> out;
  for (const auto& s : src) out.push_back(parse_operator(s, ring));
  return out;
}

Polynomial s_poly(const std::string& src) {
  return parse_polynomial(src, PolyRing::make({"s"}));
}

// No x_i or d_i of an integration variable may survive.
bool lives_in_parameters(const std::vector<WeylOperator>& j, const WeylRing& full) {
  for (const auto& p : j) {
    for (const auto& name : p.ring()->names()) {
      if (full.index_of(name) < full.split()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("b-function fixtures") {
  auto ring = WeylRing::make({"t"}, 1);
  CHECK(generic_b(ops(ring, {"dt"}), {1}).b == s_poly("s"));
  CHECK(generic_b(ops(ring, {"t"}), {1}).b == s_poly("s+1"));
  CHECK(generic_b(ops(ring, {"t*dt-2"}), {1}).b == s_poly("s-2"));
  CHECK(generic_b(ops(ring, {"t*dt^2"}), {1}).b == s_poly("s^2-s"));
  CHECK(generic_b(ops(ring, {"1"}), {1}).b == s_poly("1"));

  auto ring2 = WeylRing::make({"t", "x"}, 1);
  CHECK(generic_b(ops(ring2, {"dt", "dx"}), {1, 0}).b == s_poly("s"));
  // No relation at all along t: the intersection with K[s] is zero.
  auto zero = generic_b(ops(ring2, {"dx"}), {1, 0}, 12);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
}

TEST_CASE("maximal non-negative integer roots") {
  CHECK(max_nonneg_int_root(s_poly("s*(s-2)")) == 2);
  CHECK_FALSE(max_nonneg_int_root(s_poly("s+1")).has_value());
  CHECK(max_nonneg_int_root(s_poly("(2*s-1)*(s-3)")) == 3);
  CHECK(max_nonneg_int_root(s_poly("s^3")) == 0);
  CHECK(max_nonneg_int_root(s_poly("(s+5)*(s-1/2)")) == std::nullopt);
  CHECK(max_nonneg_int_root(s_poly("(s-1000003)*(s-7)*s")) == 1000003);
  CHECK(max_nonneg_int_root(s_poly("1")) == std::nullopt);
  CHECK_THROWS_AS(max_nonneg_int_root(s_poly("0")), Error);
}

TEST_CASE("restriction data") {
  auto ring = WeylRing::make({"t"}, 1);
  auto rd = restriction_data(ops(ring, {"t*dt"}), {1}, 0);
  CHECK(rd.r == 1);
  REQUIRE(rd.restricted.size() == 1);
  CHECK(rd.restricted[0].is_zero());

  auto ring2 = WeylRing::make({"t1", "t2", "x"}, 2);
  rd = restriction_data(ops(ring2, {"dt1+x", "t2*dt2-1"}), {1, 2, 0}, 2);
  CHECK(rd.r == 4);
  CHECK(rd.basis == std::vector<std::vector<int>>{{2, 0}, {0, 1}, {1, 0}, {0, 0}});
  // dt1+x has order 1, so d^beta ranges over {1, dt1}; t2*dt2-1 has order 0.
  CHECK(rd.restricted.size() == 2 + 4);
  CHECK(rd.restricted[0] == parse_operator("dt1^2+x*dt1", ring2));
  CHECK(rd.restricted[1] == parse_operator("dt1+x", ring2));
  CHECK(rd.restricted[2] == parse_operator("-dt1^2", ring2));
  CHECK(rd.restricted[3].is_zero());
  CHECK(rd.restricted[4] == parse_operator("-dt1", ring2));
  CHECK(rd.restricted[5] == parse_operator("-1", ring2));
  // Negative budget: the generator is skipped.
  rd = restriction_data(ops(ring2, {"dt1^3"}), {1, 1, 0}, 1);
  CHECK(rd.restricted.empty());
}

TEST_CASE("integration ideals of small integrands") {
  auto ring = WeylRing::make({"t", "x"}, 1);
  auto pring = ring->parameter_ring();
  IntegrationReport rep;
  auto j = integration_ideal(ops(ring, {"dt+dx", "(x-t)*dt-1"}), &rep);
  CHECK(ideal_equal(j, ops(pring, {"dx"})));
  CHECK(lives_in_parameters(j, *ring));
  CHECK(rep.s0.has_value());

  j = integration_ideal(ops(ring, {"dt", "dx"}), &rep);
  CHECK_FALSE(rep.s0.has_value());
  CHECK(rep.b == s_poly("s+1"));
  REQUIRE(j.size() == 1);
  CHECK(j[0] == WeylOperator::constant(pring, 1));

  // exp(-(t-x)^2): the integral over the line does not depend on x.
  j = integration_ideal(ops(ring, {"dt+2*(t-x)", "dx-2*(t-x)"}));
  CHECK(ideal_equal(j, ops(pring, {"dx"})));

  CHECK_THROWS_AS(integration_ideal(ops(ring, {"dx"})), NotHolonomicError);
  CHECK_THROWS_AS(integration_ideal(ops(ring, {"dx"}), {0, 0}), Error);
}

TEST_CASE("integration of the two-dimensional Fano integrand") {
  auto ring = WeylRing::make({"t1", "t2", "x1", "x2", "x3", "x4"}, 2);
  auto pring = ring->parameter_ring();
  auto phi = parse_function("1/(x1*t1^2*t2 + x2*t1*t2^2 + x3 + x4*t1*t2)", ring);
  auto ann = approx_ann(phi, 1, ring);
  IntegrationReport rep;
  auto j = integration_ideal(ann, {1, 1, 0, 0, 0, 0}, &rep);
  CHECK(lives_in_parameters(j, *ring));
  auto reference = ops(pring, {"(x4^3+27*x1*x2*x3)*dx4^2+3*x4^2*dx4+x4",
                             "9*x2*x3*dx4^2-x4^2*dx1*dx4-x4*dx1",
                             "9*x1*x3*dx4^2-x4^2*dx2*dx4-x4*dx2",
                             "-9*x1*x2*dx4^2+x4^2*dx3*dx4+x4*dx3",
                             "-3*x3*dx4^2-x4*dx1*dx2",
                             "-3*x2*dx4^2-x4*dx1*dx3",
                             "-3*x1*dx4^2-x4*dx2*dx3",
                             "-dx4^3+dx1*dx2*dx3",
                             "x4*dx4+3*x1*dx1+1",
                             "-x4*dx4-3*x2*dx2-1",
                             "x4*dx4+3*x3*dx3+1"});
  CHECK(ideal_equal(j, reference));
  const auto g = gb_weyl(j);
  for (const char* e : {"x4*dx4+3*x1*dx1+1", "x4*dx4+3*x2*dx2+1", "x4*dx4+3*x3*dx3+1",
                        "-dx4^3+dx1*dx2*dx3"}) {
    CHECK(ideal_contains(g, parse_operator(e, pring)));
  }
}

TEST_CASE("integration ideals annihilate residues") {
  // f = p / ((t - a(x)) (t - b(x))): the residue at t = a is p(a, x) / (a - b).
  auto ring = WeylRing::make({"t", "x"}, 1);
  auto pring = ring->parameter_ring();
  auto fr = ring->coefficient_ring();
  auto xr = PolyRing::make({"x"});
  std::mt19937 rng(11);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial a = random_poly(rng, xr, 2, 2, 3);
    Polynomial b = random_poly(rng, xr, 2, 2, 3);
    if (a == b) continue;
    const Polynomial c = Polynomial::constant(xr, std::uniform_int_distribution<int>(1, 4)(rng));
    auto lift = [&](const Polynomial& q) { return parse_polynomial(q.to_string(), fr); };
    const Polynomial t = Polynomial::variable(fr, 0);
    RationalFunction phi(lift(c), (t - lift(a)) * (t - lift(b)));
    auto ann = approx_ann(phi, 1, ring);
    std::vector<WeylOperator> j;
    try {
      j = integration_ideal(ann);
    } catch (const NotHolonomicError&) {
      continue;
    }
    CHECK(lives_in_parameters(j, *ring));
    const RationalFunction residue(c, a - b);
    for (const auto& p : j) CHECK(apply(p, residue).is_zero());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("integration is monotone in the input ideal") {
  auto ring = WeylRing::make({"t", "x"}, 1);
  auto phi = parse_function("1/(t^3+x*t+1)", ring);
  auto j1 = integration_ideal(approx_ann(phi, 1, ring));
  auto j2 = integration_ideal(approx_ann(phi, 2, ring));
  const auto g2 = gb_weyl(j2);
  for (const auto& p : j1) CHECK(ideal_contains(g2, p));
}
