#include <doctest.h>

#include "fixtures.hpp"
#include "lzpath/error.hpp"
#include "lzpath/ls.hpp"
#include "lzpath/weyl.hpp"

using namespace lzp;
using fixtures::q;
using fixtures::w;

namespace {

OrbitOrder affine_order(const AffineData& data, const Weight& lambda, long bound) {
  auto win = orbit_window(data, lambda, Rational(bound));
  return OrbitOrder(data, std::move(win), real_roots_window(data, Rational(2 * bound)));
}

}  // namespace

TEST_CASE("simple reflections are involutions and fix δ") {
  for (const auto& data : {fixtures::a2(), fixtures::c2(), fixtures::d4()}) {
    Weight x = data.fundamental_level_zero(1) + q(3, 2) * data.delta() + data.fundamental(0);
    for (Index j : data.all_indices()) {
      CHECK(reflect(data, reflect(data, x, j), j) == x);
      CHECK(reflect(data, data.delta(), j) == data.delta());
      CHECK(reflect(data, data.simple_root(j), j) == -data.simple_root(j));
      CHECK(data.bilinear(reflect(data, x, j), reflect(data, x, j)) == data.bilinear(x, x));
    }
  }
}

TEST_CASE("words apply right to left") {
  auto a2 = fixtures::a2();
  Weight v = a2.fundamental_level_zero(1);
  CHECK(apply_word(a2, WeylWord{{2, 1}}, v) == reflect(a2, reflect(a2, v, 1), 2));
  CHECK(apply_word(a2, WeylWord{{}}, v) == v);
}

TEST_CASE("orbit window of ϖ1 in A1(1)") {
  auto a1 = fixtures::a1();
  auto win = orbit_window(a1, a1.fundamental_level_zero(1), Rational(3));
  // ±ϖ1 + nδ with |n| ≤ 3
  CHECK(win.elements.size() == 14);
  CHECK(win.contains(w({1, -1}, 3)));
  CHECK(!win.contains(w({1, -1}, 4)));
  CHECK(win.on_boundary(w({-1, 1}, 3)));
  CHECK(!win.on_boundary(w({-1, 1}, 0)));
  CHECK_THROWS_AS(orbit_window(a1, w({-1, 1}, 5), Rational(3)), Error);
  CHECK_THROWS_AS(orbit_window(a1, a1.fundamental_level_zero(1), Rational(1000), std::nullopt, 50), Error);
}

TEST_CASE("finite orbits have the Weyl group sizes") {
  auto a2 = fixtures::a2();
  CHECK(finite_order(a2, a2.fundamental_level_zero(1), {1, 2}).size() == 3);
  CHECK(finite_order(a2, a2.fundamental_level_zero(1) + a2.fundamental_level_zero(2), {1, 2}).size() == 6);
  auto d4 = fixtures::d4();
  // the vector representation of so(8) has 8 weights
  CHECK(finite_order(d4, d4.fundamental_level_zero(1), {1, 2, 3, 4}).size() == 8);
  CHECK_THROWS_AS(finite_order(a2, a2.fundamental_level_zero(1), {0, 1, 2}), Error);
}

TEST_CASE("order on ±ϖ1 + nδ in A1(1)") {
  auto a1 = fixtures::a1();
  auto order = affine_order(a1, a1.fundamental_level_zero(1), 4);
  const Weight up = w({-1, 1}), down = w({1, -1});
  CHECK(order.is_cover(down, up));
  CHECK(order.dist(down, up) == 1u);
  CHECK(order.geq(down, up));
  CHECK(!order.geq(up, down));
  CHECK(order.is_cover(up, w({1, -1}, 1)));
  // −ϖ1 > ϖ1 > −ϖ1+δ > ϖ1+δ, with a direct non-cover edge along α1 + δ
  CHECK(order.dist(down, w({-1, 1}, 1)) == 3u);
  CHECK(!order.is_cover(down, w({-1, 1}, 1)));
  CHECK(order.geq(down, w({-1, 1}, 1)));
  CHECK(!order.dist(up, down).has_value());
  CHECK(order.dist(up, up) == 0u);
}

TEST_CASE("orbit orders are acyclic and antisymmetric") {
  for (const auto& data : {fixtures::a1(), fixtures::a2(), fixtures::c2()}) {
    for (Index i : data.classical_indices()) {
      auto order = affine_order(data, data.fundamental_level_zero(i), 3);
      const auto& el = order.window().elements;
      for (std::size_t x = 0; x < el.size(); ++x)
        for (std::size_t y = 0; y < el.size(); ++y)
          if (x != y && order.geq(el[x], el[y])) CHECK(!order.geq(el[y], el[x]));
      for (const auto& e : order.edges()) {
        CHECK(el[e.target].delta >= el[e.source].delta);
        CHECK(order.dist(el[e.source], el[e.target]).value() >= 1);
        CHECK(e.cover == (order.dist(el[e.source], el[e.target]) == 1u));
      }
    }
  }
}

TEST_CASE("a-chains") {
  auto a1 = fixtures::a1();
  const Weight lambda = q(2) * a1.fundamental_level_zero(1);
  auto order = finite_order(a1, lambda, {1});
  CHECK(order.size() == 2);
  auto half = order.has_a_chain(-lambda, lambda, q(1, 2));
  CHECK(half.found);
  REQUIRE(half.chain.size() == 1);
  CHECK(half.chain[0].pairing == -2);
  CHECK(!order.has_a_chain(-lambda, lambda, q(1, 3)).found);
  CHECK(order.has_a_chain(-lambda, lambda, q(1)).found);
  CHECK(!order.has_a_chain(lambda, -lambda, q(1, 2)).found);
}

TEST_CASE("cover DAG in DOT form") {
  auto a1 = fixtures::a1();
  auto order = finite_order(a1, q(2) * a1.fundamental_level_zero(1), {1});
  const std::string dot = order.to_dot();
  CHECK(dot.find("digraph orbit_order") == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot == finite_order(a1, q(2) * a1.fundamental_level_zero(1), {1}).to_dot());
}
