#include "lzpath/ls.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "lzpath/error.hpp"

namespace lzp {

LSValidation validate_ls(const OrbitOrder& order, const LSPath& c) {
  LSValidation res;
  const std::size_t s = c.directions.size();
  auto fail = [&](std::string why, std::optional<std::size_t> link = std::nullopt) {
    res.valid = false;
    res.reason = std::move(why);
    res.failing_link = link;
    return res;
  };
  if (s == 0) return fail("no directions");
  if (c.cuts.size() != s + 1) return fail("expected " + std::to_string(s + 1) + " cuts");
  if (c.cuts.front() != 0 || c.cuts.back() != 1) return fail("cuts must start at 0 and end at 1");
  for (std::size_t k = 0; k < s; ++k)
    if (!(c.cuts[k] < c.cuts[k + 1])) return fail("cuts not strictly increasing");
  for (const auto& nu : c.directions) {
    if (!order.window().contains(nu)) return fail("direction " + to_string(nu) + " is not in the orbit window");
    if (order.window().on_boundary(nu)) res.truncated = true;
  }
  for (std::size_t k = 0; k + 1 < s; ++k) {
    const Weight& hi = c.directions[k];
    const Weight& lo = c.directions[k + 1];
    if (hi == lo || !order.geq(hi, lo)) return fail("directions not strictly decreasing at link " + std::to_string(k), k);
    auto chain = order.has_a_chain(hi, lo, c.cuts[k + 1]);
    res.truncated = res.truncated || chain.truncated;
    if (!chain.found) {
      res.certificates.push_back(std::move(chain));
      return fail("no " + to_string(c.cuts[k + 1]) + "-chain at link " + std::to_string(k), k);
    }
    res.certificates.push_back(std::move(chain));
  }
  res.valid = true;
  return res;
}

Path to_path(const LSPath& ls) {
  std::vector<Segment> raw;
  for (std::size_t k = 0; k < ls.directions.size(); ++k)
    raw.push_back(Segment{ls.directions[k], ls.cuts[k + 1] - ls.cuts[k]});
  return Path::canonicalize(std::move(raw));
}

LSPath from_path(const Path& p) {
  LSPath ls;
  ls.cuts.push_back(0);
  for (const auto& s : p.segments()) {
    ls.directions.push_back(s.direction);
    ls.cuts.push_back(ls.cuts.back() + s.duration);
  }
  return ls;
}

std::vector<Path> generate_B_finite(const AffineData& data, const Weight& lambda, const IndexSet& sub,
                                    std::size_t cap) {
  for (Index j : sub) {
    const Rational& p = lambda.pairings.at(j);
    if (p < 0 || !is_integer(p))
      throw Error(Errc::NotDominant, to_string(lambda) + " is not dominant integral at index " + std::to_string(j));
  }
  std::set<Path> seen;
  std::deque<Path> queue;
  Path start = Path::straight(lambda);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Path cur = std::move(queue.front());
    queue.pop_front();
    for (Index j : sub) {
      auto next = f_op(data, cur, j);
      if (!next || seen.count(*next)) continue;
      if (seen.size() >= cap)
        throw Error(Errc::NotFiniteType, "f-closure exceeds " + std::to_string(cap) + " paths");
      seen.insert(*next);
      queue.push_back(std::move(*next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Path> generate_BS(const AffineData& data, const Weight& mu, const IndexSet& S, std::size_t cap) {
  return generate_B_finite(data, mu, S, cap);
}

OrbitOrder finite_order(const AffineData& data, const Weight& lambda, const IndexSet& S) {
  // W_S is finite, so the bound only guards against a non-finite S.
  const Rational bound(1000000);
  OrbitWindow win;
  try {
    win = orbit_window(data, lambda, bound, S);
  } catch (const Error& e) {
    if (e.code() == Errc::CapExceeded) throw Error(Errc::NotFiniteType, "W_S-orbit is not finite within the cap");
    throw;
  }
  if (!win.boundary.empty()) throw Error(Errc::NotFiniteType, "W_S-orbit does not close inside the bound");
  auto roots = real_roots_window(data, bound, S);
  return OrbitOrder(data, std::move(win), roots);
}

long max_pairing(const OrbitOrder& order, const Weight& lambda) {
  Rational m;
  for (const auto& r : order.roots()) m = std::max<Rational>(m, abs(r.pair(lambda)));
  return to_long(m);
}

LSEnumeration enumerate_B_window(const OrbitOrder& order, long denom_bound) {
  if (denom_bound < 1) throw Error(Errc::OutOfRange, "denominator bound must be at least 1");
  std::vector<Rational> candidates;
  for (long q = 2; q <= denom_bound; ++q)
    for (long p = 1; p < q; ++p) {
      Rational a{mpz_class(p), mpz_class(q)};
      a.canonicalize();
      if (a.get_den() == q) candidates.push_back(a);
    }
  std::sort(candidates.begin(), candidates.end());

  const auto& elems = order.window().elements;
  const std::size_t n = elems.size();
  LSEnumeration out;
  if (denom_bound < max_pairing(order, order.window().seed)) out.truncated = true;
  // below[u]: the elements strictly below u
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && order.geq(elems[u], elems[v])) below[u].push_back(v);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> chain_cache;
  auto chain_cuts = [&](std::size_t u, std::size_t v) -> const std::vector<Rational>& {
    auto key = std::make_pair(u, v);
    auto it = chain_cache.find(key);
    if (it != chain_cache.end()) return it->second;
    std::vector<Rational> ok;
    for (const auto& a : candidates) {
      auto r = order.has_a_chain(elems[u], elems[v], a);
      out.truncated = out.truncated || r.truncated;
      if (r.found) ok.push_back(a);
    }
    return chain_cache.emplace(key, std::move(ok)).first->second;
  };

  std::vector<std::size_t> seq;
  std::vector<Rational> cuts;
  std::function<void()> extend = [&]() {
    LSPath done;
    for (std::size_t u : seq) done.directions.push_back(elems[u]);
    done.cuts = cuts;
    done.cuts.push_back(1);
    out.paths.push_back(std::move(done));
    const std::size_t u = seq.back();
    for (std::size_t v : below[u]) {
      for (const auto& a : chain_cuts(u, v)) {
        if (!(cuts.back() < a)) continue;
        seq.push_back(v);
        cuts.push_back(a);
        extend();
        seq.pop_back();
        cuts.pop_back();
      }
    }
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (order.window().on_boundary(elems[u])) out.truncated = true;
    seq = {u};
    cuts = {Rational(0)};
    extend();
  }
  std::sort(out.paths.begin(), out.paths.end(), [](const LSPath& x, const LSPath& y) {
    return to_path(x) < to_path(y);
  });
  return out;
}

}  // namespace lzp
