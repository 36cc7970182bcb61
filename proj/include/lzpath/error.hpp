#pragma once

#include <stdexcept>
#include <string>

namespace lzp {

enum class Errc {
  BadInput,
  NotGCM,
  NotAffine,
  NotSymmetrizable,
  UnsupportedWeight,
  NotInH0Star,
  OutOfRange,
  ZeroDuration,
  BadTotal,
  NonIntegralPath,
  NotDominant,
  NotFiniteType,
  CapExceeded,
  NotUnique,
  NotFound,
  DepthMismatch,
  IncompleteWindow,
  TruncationWarning,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lzp
