#include "lzpath/rational.hpp"

#include <cctype>
#include <functional>

#include "lzpath/error.hpp"

namespace lzp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::BadInput: return "BadInput";
    case Errc::NotGCM: return "NotGCM";
    case Errc::NotAffine: return "NotAffine";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::UnsupportedWeight: return "UnsupportedWeight";
    case Errc::NotInH0Star: return "NotInH0Star";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ZeroDuration: return "ZeroDuration";
    case Errc::BadTotal: return "BadTotal";
    case Errc::NonIntegralPath: return "NonIntegralPath";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotUnique: return "NotUnique";
    case Errc::NotFound: return "NotFound";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::IncompleteWindow: return "IncompleteWindow";
    case Errc::TruncationWarning: return "TruncationWarning";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::BadInput, "not a rational: '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(Errc::BadInput, "zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

long to_long(const Rational& q) { return q.get_num().get_si(); }

std::size_t hash_value(const Rational& q) {
  std::size_t h = std::hash<std::string>{}(q.get_str(16));
  return h;
}

}  // namespace lzp
