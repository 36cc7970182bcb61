#include <doctest.h>

#include <json.hpp>
#include <set>

#include "fixtures.hpp"
#include "lzpath/crystal.hpp"
#include "lzpath/error.hpp"
#include "lzpath/ls.hpp"

using namespace lzp;
using fixtures::q;
using fixtures::w;

TEST_CASE("radius-two crystal of ϖ1 in A1(1)") {
  auto a1 = fixtures::a1();
  auto g = bfs(a1, Path::straight(a1.fundamental_level_zero(1)), a1.all_indices(), 2);
  CHECK(g.size() == 5);
  CHECK(g.edges().size() == 4);
  CHECK(g.nodes()[g.root()] == Path::straight(w({-1, 1})));
  std::set<Weight> weights;
  for (const auto& p : g.nodes()) weights.insert(p.endpoint());
  CHECK(weights == std::set<Weight>{w({-1, 1}, -1), w({-1, 1}), w({-1, 1}, 1), w({1, -1}), w({1, -1}, 1)});
  CHECK(g.has_frontier());
  CHECK(g.on_frontier(*g.find(Path::straight(w({-1, 1}, 1)))));
  CHECK(!g.on_frontier(g.root()));
}

TEST_CASE("radius zero") {
  auto a2 = fixtures::a2();
  auto g = bfs(a2, Path::straight(a2.fundamental_level_zero(2)), a2.all_indices(), 0);
  CHECK(g.size() == 1);
  CHECK(g.edges().empty());
  CHECK(g.on_frontier(0));
}

TEST_CASE("node cap") {
  auto a2 = fixtures::a2();
  try {
    bfs(a2, Path::straight(a2.fundamental_level_zero(1)), a2.all_indices(), 12, 10);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("node ids do not depend on the start") {
  auto a1 = fixtures::a1();
  auto g = bfs(a1, Path::straight(a1.fundamental_level_zero(1)), a1.all_indices(), 1);
  auto h = closed_graph(CrystalOps::standard(a1), generate_B_finite(a1, q(2) * a1.fundamental_level_zero(1), {1}),
                        {1}, Path::straight(q(2) * a1.fundamental_level_zero(1)));
  CHECK(h.size() == 3);
  CHECK(h.edges().size() == 2);
  CHECK(std::is_sorted(g.nodes().begin(), g.nodes().end()));
  CHECK(std::is_sorted(h.nodes().begin(), h.nodes().end()));
}

TEST_CASE("DOT and JSON encode the same graph") {
  auto a2 = fixtures::a2();
  auto g = bfs(a2, Path::straight(a2.fundamental_level_zero(1)), a2.all_indices(), 3);
  auto j = nlohmann::json::parse(g.to_json());
  CHECK(j["nodes"].size() == g.size());
  CHECK(j["edges"].size() == g.edges().size());
  const std::string dot = g.to_dot();
  for (const auto& e : j["edges"]) {
    std::string line = "n" + std::to_string(e["source"].get<int>()) + " -> n" + std::to_string(e["target"].get<int>()) +
                       " [label=\"" + std::to_string(e["color"].get<int>()) + "\"]";
    CHECK(dot.find(line) != std::string::npos);
  }
  std::size_t arrows = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == g.edges().size());
  CHECK(dot == bfs(a2, Path::straight(a2.fundamental_level_zero(1)), a2.all_indices(), 3).to_dot());
}

TEST_CASE("S-components of the A1(1) crystal are 2-chains") {
  auto a1 = fixtures::a1();
  auto ops = CrystalOps::standard(a1);
  auto g = bfs(ops, Path::straight(a1.fundamental_level_zero(1)), a1.all_indices(), 4);
  auto comps = s_components(ops, g, {1});
  for (const auto& c : comps) {
    CHECK(c.size() == 2);
    auto top = find_dominant_extremal(ops, c, {1});
    const Weight mu = c.nodes()[top].endpoint();
    CHECK(mu.pairings[1] == 1);
    auto ref = closed_graph(ops, generate_BS(a1, mu, {1}), {1}, Path::straight(mu));
    CHECK(rooted_colored_isomorphic(c.rerooted(top), ref));
  }
  // the S = ∅ case: every node is its own component
  auto singles = s_components(ops, g, {});
  CHECK(singles.size() == g.size());
}

TEST_CASE("rooted isomorphism") {
  auto a2 = fixtures::a2();
  auto ops = CrystalOps::standard(a2);
  const Weight v = a2.fundamental_level_zero(1);
  auto g = bfs(ops, Path::straight(v), a2.all_indices(), 6);
  auto shifted = bfs(ops, Path::straight(v + q(2) * a2.delta()), a2.all_indices(), 6);
  CHECK(rooted_colored_isomorphic(g, shifted, 4));
  auto other = bfs(ops, Path::straight(a2.fundamental_level_zero(2)), a2.all_indices(), 6);
  CHECK(!rooted_colored_isomorphic(g, other, 4));
  CHECK_THROWS_AS(rooted_colored_isomorphic(g, shifted, 7), Error);
  CHECK_THROWS_AS(rooted_colored_isomorphic(g, shifted), Error);
  auto closed = closed_graph(ops, generate_B_finite(a2, v, {1, 2}), {1, 2}, Path::straight(v));
  CHECK(rooted_colored_isomorphic(closed, closed));
  auto bigger = closed_graph(ops, generate_B_finite(a2, q(2) * v, {1, 2}), {1, 2}, Path::straight(q(2) * v));
  CHECK(!rooted_colored_isomorphic(closed, bigger));
}

TEST_CASE("characters on windows") {
  auto a1 = fixtures::a1();
  auto g = bfs(a1, Path::straight(a1.fundamental_level_zero(1)), a1.all_indices(), 6);
  auto ch = character_window(g, WeightWindow::delta_band(q(1)));
  // count 1 at ±ϖ1 + nδ for n ∈ {−1, 0, 1}
  CHECK(ch.counts.size() == 6);
  for (const auto& [wt, n] : ch.counts) {
    CHECK(n == 1);
    CHECK(abs(wt.delta) <= 1);
  }
  CHECK(character_window(g, WeightWindow::empty()).counts.empty());
  CHECK(character_window(g, WeightWindow::explicit_set({w({1, -1})})).counts.size() == 1);
  try {
    character_window(g, WeightWindow::delta_band(q(10)));
    FAIL("expected IncompleteWindow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompleteWindow);
  }
}
