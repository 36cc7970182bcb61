#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lzpath/crystal.hpp"
#include "lzpath/error.hpp"
#include "lzpath/path.hpp"

using namespace lzp;
using fixtures::q;
using fixtures::w;

namespace {

Path two(const Weight& a, const Rational& ta, const Weight& b) {
  return Path::canonicalize({Segment{a, ta}, Segment{b, 1 - ta}});
}

/// ε by repeated raising, independent of the h-profile.
long raise_count(const AffineData& data, Path p, Index i) {
  long n = 0;
  while (auto next = e_op(data, p, i)) {
    p = *next;
    ++n;
  }
  return n;
}

long lower_count(const AffineData& data, Path p, Index i) {
  long n = 0;
  while (auto next = f_op(data, p, i)) {
    p = *next;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("canonical form") {
  const Weight a = w({-1, 1}), b = w({1, -1}), zero = w({0, 0});
  SUBCASE("collinear neighbours merge") {
    Path p = Path::canonicalize({Segment{a, q(1, 3)}, Segment{q(2) * a, q(2, 3)}});
    REQUIRE(p.segments().size() == 1);
    CHECK(p.endpoint() == q(5, 3) * a);
    CHECK(p.segments()[0].duration == 1);
  }
  SUBCASE("pauses are dropped and displacement kept") {
    Path p = Path::canonicalize({Segment{a, q(1, 2)}, Segment{zero, q(1, 4)}, Segment{b, q(1, 4)}});
    CHECK(p.segments().size() == 2);
    CHECK(p.endpoint() == q(1, 2) * a + q(1, 4) * b);
  }
  SUBCASE("all-zero path becomes trivial") {
    Path p = Path::canonicalize({Segment{zero, q(1, 2)}, Segment{zero, q(1, 2)}});
    CHECK(p.is_trivial());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Path::canonicalize({Segment{a, q(0)}, Segment{b, q(1)}}), Error);
    CHECK_THROWS_AS(Path::canonicalize({Segment{a, q(1, 2)}}), Error);
    try {
      Path::canonicalize({Segment{a, q(1, 2)}});
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadTotal);
    }
    try {
      Path::canonicalize({Segment{a, q(-1, 2)}, Segment{a, q(3, 2)}});
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroDuration);
    }
  }
  SUBCASE("evaluation") {
    Path p = two(a, q(1, 2), b);
    CHECK(evaluate(p, q(1, 4)) == q(1, 4) * a);
    CHECK(evaluate(p, q(3, 4)) == q(1, 2) * a + q(1, 4) * b);
    CHECK(evaluate(p, q(0)).is_zero());
    CHECK_THROWS_AS(evaluate(p, q(3, 2)), Error);
    CHECK(p.breakpoints() == std::vector<Rational>{q(0), q(1, 2), q(1)});
  }
}

TEST_CASE("lowering a straight path of pairing 2") {
  auto a1 = fixtures::a1();
  const Weight lambda = q(2) * a1.fundamental_level_zero(1);  // λ(α1^∨) = 2
  const Path pl = Path::straight(lambda);
  auto f1 = f_op(a1, pl, 1);
  REQUIRE(f1);
  CHECK(*f1 == two(-lambda, q(1, 2), lambda));
  CHECK(f1->endpoint() == lambda - a1.simple_root(1));
  auto f11 = f_op(a1, *f1, 1);
  REQUIRE(f11);
  CHECK(*f11 == Path::straight(-lambda));
  CHECK(!f_op(a1, *f11, 1));
  CHECK(!e_op(a1, pl, 1));
  CHECK(e_op(a1, *f1, 1) == pl);
  CHECK(eps(*f1, 1) == 1);
  CHECK(phi(*f1, 1) == 1);
}

TEST_CASE("straight minuscule paths stay straight") {
  auto a1 = fixtures::a1();
  const Path p = Path::straight(a1.fundamental_level_zero(1));
  auto f1 = f_op(a1, p, 1);
  REQUIRE(f1);
  CHECK(*f1 == Path::straight(w({1, -1})));
  auto f0 = f_op(a1, *f1, 0);
  REQUIRE(f0);
  CHECK(*f0 == Path::straight(w({-1, 1}, -1)));
}

TEST_CASE("non-integral paths are rejected") {
  auto a1 = fixtures::a1();
  const Path half = Path::straight(q(1, 2) * a1.fundamental_level_zero(1));
  CHECK_THROWS_AS(eps(half, 1), Error);
  try {
    f_op(a1, half, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIntegralPath);
  }
}

TEST_CASE("crystal axioms on explored crystals") {
  for (const auto& data : {fixtures::a1(), fixtures::a2(), fixtures::c2()}) {
    for (Index i : data.classical_indices()) {
      auto g = bfs(data, Path::straight(data.fundamental_level_zero(i)), data.all_indices(), 5);
      for (const auto& p : g.nodes())
        for (Index j : data.all_indices()) {
          const Weight wt = p.endpoint();
          CHECK(phi(p, j) - eps(p, j) == wt.pairings[j]);
          CHECK(eps(p, j) == raise_count(data, p, j));
          CHECK(phi(p, j) == lower_count(data, p, j));
          if (auto f = f_op(data, p, j)) {
            CHECK(e_op(data, *f, j) == p);
            CHECK(f->endpoint() == wt - data.simple_root(j));
          }
          if (auto e = e_op(data, p, j)) {
            CHECK(f_op(data, *e, j) == p);
            CHECK(e->endpoint() == wt + data.simple_root(j));
          }
        }
    }
  }
}

TEST_CASE("concatenation, scaling and splitting") {
  auto a2 = fixtures::a2();
  const Weight v = a2.fundamental_level_zero(1);
  const Path p = Path::straight(v), r = Path::straight(a2.fundamental(0));
  const Path pr = concat(p, r);
  CHECK(pr.endpoint() == v + a2.fundamental(0));
  CHECK(pr.segments().size() == 2);
  CHECK(pr.segments()[0].duration == q(1, 2));
  CHECK(concat(p, p) == Path::straight(q(2) * v));
  std::vector<Path> three{p, r, p};
  CHECK(concat_all(three).endpoint() == q(2) * v + a2.fundamental(0));
  CHECK(concat_all(three).segments()[1].duration == q(1, 3));

  auto g = bfs(a2, Path::straight(v + a2.fundamental_level_zero(2)), a2.all_indices(), 3);
  for (const auto& x : g.nodes())
    for (long m : {1L, 2L, 3L}) {
      const Path sx = scale(m, x);
      CHECK(sx.endpoint() == Rational(m) * x.endpoint());
      auto pieces = split_scaled(m, x);
      CHECK(pieces.size() == static_cast<std::size_t>(m));
      CHECK(concat_all(pieces) == sx);
    }
}

TEST_CASE("scaling intertwines root operators") {
  auto c2 = fixtures::c2();
  auto g = bfs(c2, Path::straight(c2.fundamental_level_zero(1)), c2.all_indices(), 4);
  for (const auto& x : g.nodes())
    for (Index j : c2.all_indices())
      for (long m : {2L, 3L}) {
        auto once = f_op(c2, x, j);
        std::optional<Path> many = scale(m, x);
        for (long k = 0; k < m && many; ++k) many = f_op(c2, *many, j);
        CHECK((once ? std::optional<Path>(scale(m, *once)) : std::nullopt) == many);
      }
}

TEST_CASE("Weyl group action on paths") {
  auto a2 = fixtures::a2();
  const Weight v = a2.fundamental_level_zero(1);
  Path p = weyl_act(a2, WeylWord{{0, 2, 1}}, Path::straight(v));
  CHECK(p == Path::straight(apply_word(a2, WeylWord{{0, 2, 1}}, v)));
  CHECK(weyl_act(a2, WeylWord{{1, 1}}, Path::straight(v)) == Path::straight(v));
}

TEST_CASE("operator words") {
  CHECK(to_string(parse_letter("f1")) == "f1");
  CHECK(parse_letter("e12").raise);
  CHECK(parse_letter("e12").index == 12);
  CHECK_THROWS_AS(parse_letter("g1"), Error);
  CHECK_THROWS_AS(parse_letter("f"), Error);
  auto a1 = fixtures::a1();
  OperatorWord word{parse_letter("f0"), parse_letter("f1")};
  CHECK(to_string(word) == "f0 f1");
  auto p = apply_operators(a1, word, Path::straight(a1.fundamental_level_zero(1)));
  REQUIRE(p);
  CHECK(p->endpoint() == w({-1, 1}, -1));
  CHECK(!apply_operators(a1, {parse_letter("e1")}, Path::straight(a1.fundamental_level_zero(1))));
}

TEST_CASE("dominance along a path") {
  auto a1 = fixtures::a1();
  const Weight lambda = a1.fundamental(0);
  for (long n : {-1L, 0L, 1L}) {
    CHECK(is_lambda_dominant(Path::straight(a1.fundamental_level_zero(1) + q(n) * a1.delta()), lambda));
    CHECK(!is_lambda_dominant(Path::straight(-a1.fundamental_level_zero(1) + q(n) * a1.delta()), lambda));
  }
  const Weight mu = q(2) * a1.fundamental_level_zero(1);
  CHECK(is_dominant_S(Path::straight(mu), std::vector<Index>{1}));
  CHECK(!is_dominant_S(two(-mu, q(1, 2), mu), std::vector<Index>{1}));
}
