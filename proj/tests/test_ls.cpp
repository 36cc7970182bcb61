#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "lzpath/error.hpp"
#include "lzpath/ls.hpp"

using namespace lzp;
using fixtures::q;
using fixtures::w;

namespace {

long dim_a1(long m) { return m + 1; }
long dim_a2(long m1, long m2) { return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2; }

std::vector<Path> accepted_paths(const OrbitOrder& order, long denom_bound) {
  auto listed = enumerate_B_window(order, denom_bound);
  CHECK(!listed.truncated);
  std::vector<Path> out;
  for (const auto& ls : listed.paths) {
    CHECK(validate_ls(order, ls).valid);
    out.push_back(to_path(ls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two-step LS path of A1") {
  auto a1 = fixtures::a1();
  const Weight lambda = q(2) * a1.fundamental_level_zero(1);
  auto order = finite_order(a1, lambda, {1});
  LSPath good{{-lambda, lambda}, {q(0), q(1, 2), q(1)}};
  auto v = validate_ls(order, good);
  CHECK(v.valid);
  CHECK(!v.truncated);
  REQUIRE(v.certificates.size() == 1);
  CHECK(v.certificates[0].found);

  LSPath third{{-lambda, lambda}, {q(0), q(1, 3), q(1)}};
  auto bad = validate_ls(order, third);
  CHECK(!bad.valid);
  CHECK(bad.failing_link == 0u);

  LSPath wrong_order{{lambda, -lambda}, {q(0), q(1, 2), q(1)}};
  CHECK(!validate_ls(order, wrong_order).valid);
  LSPath bad_cuts{{-lambda, lambda}, {q(0), q(1, 2)}};
  CHECK(!validate_ls(order, bad_cuts).valid);
  LSPath outside{{q(4) * lambda}, {q(0), q(1)}};
  CHECK(!validate_ls(order, outside).valid);

  CHECK(to_path(good) == *f_op(a1, Path::straight(lambda), 1));
  CHECK(from_path(to_path(good)) == good);
}

TEST_CASE("f-closure matches the Weyl dimension formula and the validator on A1") {
  auto a1 = fixtures::a1();
  for (long m = 0; m <= 4; ++m) {
    const Weight lambda = q(m) * a1.fundamental_level_zero(1);
    auto closure = generate_B_finite(a1, lambda, {1});
    CHECK(static_cast<long>(closure.size()) == dim_a1(m));
    if (m == 0) continue;
    CHECK(accepted_paths(finite_order(a1, lambda, {1}), 12) == closure);
  }
}

TEST_CASE("f-closure matches the Weyl dimension formula and the validator on A2") {
  auto a2 = fixtures::a2();
  for (long m1 = 0; m1 <= 4; ++m1)
    for (long m2 = 0; m1 + m2 <= 4; ++m2) {
      const Weight lambda = q(m1) * a2.fundamental_level_zero(1) + q(m2) * a2.fundamental_level_zero(2);
      auto closure = generate_B_finite(a2, lambda, {1, 2});
      CHECK(static_cast<long>(closure.size()) == dim_a2(m1, m2));
      if (m1 + m2 == 0) continue;
      CHECK(accepted_paths(finite_order(a2, lambda, {1, 2}), 12) == closure);
    }
}

TEST_CASE("closure is closed under raising and lowering") {
  auto c2 = fixtures::c2();
  const Weight lambda = c2.fundamental_level_zero(1) + c2.fundamental_level_zero(2);
  auto closure = generate_B_finite(c2, lambda, {1, 2});
  std::set<Path> members(closure.begin(), closure.end());
  for (const auto& p : closure)
    for (Index j : {1, 2}) {
      if (auto f = f_op(c2, p, j)) CHECK(members.count(*f) == 1);
      if (auto e = e_op(c2, p, j)) CHECK(members.count(*e) == 1);
    }
  CHECK(accepted_paths(finite_order(c2, lambda, {1, 2}), 12) == closure);
}

TEST_CASE("closure errors") {
  auto a2 = fixtures::a2();
  try {
    generate_B_finite(a2, -a2.fundamental_level_zero(1), {1, 2});
    FAIL("expected NotDominant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDominant);
  }
  try {
    generate_B_finite(a2, a2.fundamental(0), {0, 1, 2}, 500);
    FAIL("expected NotFiniteType");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFiniteType);
  }
}

TEST_CASE("a small denominator bound is reported as truncation") {
  auto a1 = fixtures::a1();
  const Weight lambda = q(3) * a1.fundamental_level_zero(1);
  auto order = finite_order(a1, lambda, {1});
  CHECK(max_pairing(order, lambda) == 3);
  CHECK(enumerate_B_window(order, 2).truncated);
  CHECK(enumerate_B_window(order, 3).paths.size() == 4);
  CHECK_THROWS_AS(enumerate_B_window(order, 0), Error);
}

TEST_CASE("level-zero LS paths of shape ϖ1 in A1(1) are straight") {
  auto a1 = fixtures::a1();
  auto win = orbit_window(a1, a1.fundamental_level_zero(1), Rational(3));
  OrbitOrder order(a1, std::move(win), real_roots_window(a1, Rational(6)));
  auto listed = enumerate_B_window(order, 6);
  CHECK(listed.truncated);  // the window cuts the infinite orbit
  for (const auto& ls : listed.paths) CHECK(ls.directions.size() == 1);
  CHECK(listed.paths.size() == order.size());
}
