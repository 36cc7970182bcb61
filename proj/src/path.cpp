#include "lzpath/path.hpp"

#include <algorithm>
#include <sstream>

#include "lzpath/error.hpp"

namespace lzp {

Path make_canonical(std::vector<Segment> raw) {
  if (raw.empty()) throw Error(Errc::BadInput, "path has no segments");
  const std::size_t rank = raw.front().direction.rank();
  std::vector<Segment> kept;
  Rational total, full;
  for (auto& s : raw) {
    if (s.duration <= 0) throw Error(Errc::ZeroDuration, "segment duration must be positive");
    full += s.duration;
    if (s.direction.is_zero()) continue;
    total += s.duration;
    kept.push_back(std::move(s));
  }
  Path p;
  if (kept.empty()) {
    p.segs_.push_back(Segment{Weight(rank), Rational(1)});
    return p;
  }
  // dropping pauses: rescale time so that displacements are preserved
  if (total != full) {
    Rational f = full / total;
    for (auto& s : kept) {
      s.duration *= f;
      s.direction *= 1 / f;
    }
  }
  for (auto& s : kept) {
    if (!p.segs_.empty() && positively_collinear(s.direction, p.segs_.back().direction)) {
      Segment& last = p.segs_.back();
      Rational d = last.duration + s.duration;
      Weight disp = last.duration * last.direction + s.duration * s.direction;
      last.direction = (1 / d) * std::move(disp);
      last.duration = d;
    } else {
      p.segs_.push_back(std::move(s));
    }
  }
  return p;
}

Path Path::canonicalize(std::vector<Segment> raw) {
  Rational total;
  for (const auto& s : raw) {
    if (s.duration <= 0) throw Error(Errc::ZeroDuration, "segment duration must be positive");
    total += s.duration;
  }
  if (total != 1) throw Error(Errc::BadTotal, "durations sum to " + to_string(total) + ", expected 1");
  return make_canonical(std::move(raw));
}

Path Path::straight(Weight lambda) {
  std::vector<Segment> raw;
  raw.push_back(Segment{std::move(lambda), Rational(1)});
  return make_canonical(std::move(raw));
}

Weight Path::endpoint() const {
  Weight w(rank());
  for (const auto& s : segs_) w += s.duration * s.direction;
  return w;
}

std::vector<Rational> Path::breakpoints() const {
  std::vector<Rational> t{Rational(0)};
  for (const auto& s : segs_) t.push_back(t.back() + s.duration);
  return t;
}

std::vector<Weight> Path::breakpoint_values() const {
  std::vector<Weight> v{Weight(rank())};
  for (const auto& s : segs_) v.push_back(v.back() + s.duration * s.direction);
  return v;
}

bool operator<(const Path& a, const Path& b) {
  const std::size_t n = std::min(a.segs_.size(), b.segs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Segment& x = a.segs_[k];
    const Segment& y = b.segs_[k];
    if (x.direction < y.direction) return true;
    if (y.direction < x.direction) return false;
    if (x.duration != y.duration) return x.duration < y.duration;
  }
  return a.segs_.size() < b.segs_.size();
}

std::string to_string(const Path& p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& s : p.segments()) {
    os << (first ? "" : ", ") << to_string(s.direction) << 'x' << to_string(s.duration);
    first = false;
  }
  os << ']';
  return os.str();
}

Weight evaluate(const Path& p, const Rational& t) {
  if (t < 0 || t > 1) throw Error(Errc::OutOfRange, "t = " + to_string(t) + " outside [0,1]");
  Weight w(p.rank());
  Rational elapsed;
  for (const auto& s : p.segments()) {
    if (elapsed + s.duration >= t) {
      w += (t - elapsed) * s.direction;
      return w;
    }
    w += s.duration * s.direction;
    elapsed += s.duration;
  }
  return w;
}

Path concat_all(std::span<const Path> parts) {
  if (parts.empty()) throw Error(Errc::BadInput, "empty concatenation");
  const Rational m(static_cast<long>(parts.size()));
  std::vector<Segment> raw;
  for (const auto& part : parts)
    for (const auto& s : part.segments()) raw.push_back(Segment{m * s.direction, s.duration / m});
  return make_canonical(std::move(raw));
}

Path concat(const Path& a, const Path& b) {
  const Path parts[] = {a, b};
  return concat_all(parts);
}

Path scale(long m, const Path& p) {
  if (m < 1) throw Error(Errc::OutOfRange, "scale factor must be positive");
  std::vector<Segment> raw;
  for (const auto& s : p.segments()) raw.push_back(Segment{Rational(m) * s.direction, s.duration});
  return make_canonical(std::move(raw));
}

std::vector<Path> split_scaled(long m, const Path& p) {
  if (m < 1) throw Error(Errc::OutOfRange, "scale factor must be positive");
  std::vector<Path> pieces;
  std::vector<Segment> current;
  Rational start, piece_end(mpz_class(1), mpz_class(m));
  for (const auto& s : p.segments()) {
    Rational seg_start = start, seg_end = start + s.duration;
    while (seg_start < seg_end) {
      Rational stop = std::min(seg_end, piece_end);
      current.push_back(Segment{s.direction, Rational(m) * (stop - seg_start)});
      seg_start = stop;
      if (stop == piece_end) {
        pieces.push_back(make_canonical(std::move(current)));
        current.clear();
        piece_end += Rational(mpz_class(1), mpz_class(m));
      }
    }
    start = seg_end;
  }
  return pieces;
}

HProfile h_profile(const Path& p, Index i) {
  HProfile h;
  h.breakpoints.push_back(0);
  h.values.push_back(0);
  for (const auto& s : p.segments()) {
    h.breakpoints.push_back(h.breakpoints.back() + s.duration);
    h.values.push_back(h.values.back() + s.duration * s.direction.pairings[i]);
  }
  return h;
}

namespace {

struct Extremes {
  Rational min;
  Rational end;
};

Extremes integral_extremes(const HProfile& h, Index i) {
  Extremes x{*std::min_element(h.values.begin(), h.values.end()), h.values.back()};
  if (!is_integer(x.min) || !is_integer(x.end))
    throw Error(Errc::NonIntegralPath, "h_" + std::to_string(i) + " has min " + to_string(x.min) + " and end " +
                                           to_string(x.end) + "; root operators need integers");
  return x;
}

}  // namespace

long eps(const Path& p, Index i) {
  auto x = integral_extremes(h_profile(p, i), i);
  return -to_long(x.min);
}

long phi(const Path& p, Index i) {
  auto x = integral_extremes(h_profile(p, i), i);
  return to_long(x.end - x.min);
}

std::optional<Path> f_op(const AffineData& data, const Path& p, Index i) {
  const HProfile h = h_profile(p, i);
  const auto [m, end] = integral_extremes(h, i);
  if (end - m < 1) return std::nullopt;
  std::size_t k1 = 0;
  for (std::size_t k = 0; k < h.values.size(); ++k)
    if (h.values[k] == m) k1 = k;
  const Rational target = m + 1;
  const auto& segs = p.segments();
  std::vector<Segment> out(segs.begin(), segs.begin() + k1);
  std::size_t k = k1;
  for (; k < segs.size(); ++k) {
    const Segment& s = segs[k];
    if (h.values[k + 1] < target) {
      out.push_back(Segment{reflect(data, s.direction, i), s.duration});
      continue;
    }
    Rational dt = (target - h.values[k]) / s.direction.pairings[i];
    out.push_back(Segment{reflect(data, s.direction, i), dt});
    if (dt < s.duration) out.push_back(Segment{s.direction, s.duration - dt});
    ++k;
    break;
  }
  out.insert(out.end(), segs.begin() + k, segs.end());
  return make_canonical(std::move(out));
}

std::optional<Path> e_op(const AffineData& data, const Path& p, Index i) {
  const HProfile h = h_profile(p, i);
  const auto [m, end] = integral_extremes(h, i);
  (void)end;
  if (m > -1) return std::nullopt;
  std::size_t k2 = 0;
  while (h.values[k2] != m) ++k2;
  const Rational target = m + 1;
  const auto& segs = p.segments();
  std::vector<Segment> tail;  // built backwards
  std::size_t k = k2;
  while (k > 0) {
    --k;
    const Segment& s = segs[k];
    if (h.values[k] < target) {
      tail.push_back(Segment{reflect(data, s.direction, i), s.duration});
      continue;
    }
    Rational dt = (target - h.values[k]) / s.direction.pairings[i];
    tail.push_back(Segment{reflect(data, s.direction, i), s.duration - dt});
    if (dt > 0) tail.push_back(Segment{s.direction, dt});
    break;
  }
  std::vector<Segment> out(segs.begin(), segs.begin() + k);
  out.insert(out.end(), tail.rbegin(), tail.rend());
  out.insert(out.end(), segs.begin() + k2, segs.end());
  return make_canonical(std::move(out));
}

Path weyl_act(const AffineData& data, const WeylWord& w, Path p) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const Index i = *it;
    Rational n = p.endpoint().pairings[i];
    if (!is_integer(n)) throw Error(Errc::NonIntegralPath, "non-integral weight pairing in Weyl action");
    long steps = to_long(n);
    for (long s = 0; s < std::labs(steps); ++s) {
      auto next = steps > 0 ? f_op(data, p, i) : e_op(data, p, i);
      if (!next) throw Error(Errc::NonIntegralPath, "root operator string shorter than the weight pairing");
      p = std::move(*next);
    }
  }
  return p;
}

std::string to_string(const OpLetter& l) { return (l.raise ? "e" : "f") + std::to_string(l.index); }

std::string to_string(const OperatorWord& w) {
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : " ") + to_string(l);
  return s;
}

OpLetter parse_letter(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f') ||
      !std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(Errc::BadInput, "bad operator letter '" + s + "'");
  return OpLetter{s[0] == 'e', std::stoi(s.substr(1))};
}

std::optional<Path> apply_operators(const AffineData& data, const OperatorWord& word, Path p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = it->raise ? e_op(data, p, it->index) : f_op(data, p, it->index);
    if (!next) return std::nullopt;
    p = std::move(*next);
  }
  return p;
}

bool is_dominant_S(const Path& p, std::span<const Index> S) {
  for (const auto& v : p.breakpoint_values())
    for (Index j : S)
      if (v.pairings[j] < 0) return false;
  return true;
}

bool is_lambda_dominant(const Path& p, const Weight& lambda) {
  for (const auto& v : p.breakpoint_values())
    for (std::size_t j = 0; j < v.pairings.size(); ++j)
      if (lambda.pairings[j] + v.pairings[j] < 0) return false;
  return true;
}

}  // namespace lzp
