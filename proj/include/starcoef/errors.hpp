#pragma once

#include <stdexcept>
#include <string>

namespace starcoef {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series_core
struct NonzeroConstantTerm : Error {
  using Error::Error;
};
struct NotUnitSeries : Error {
  using Error::Error;
};
struct OrderExhausted : Error {
  using Error::Error;
};
struct ZeroPower : Error {
  using Error::Error;
};
// Coefficient magnitude left the trustworthy range of double precision.
struct PrecisionErosion : Error {
  using Error::Error;
};

// bounds_engine / function_zoo
struct AlphaOutOfRange : Error {
  using Error::Error;
};
struct BadIndex : Error {
  using Error::Error;
};

// verifier
struct WrongRegime : Error {
  using Error::Error;
};

// report_cli
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace starcoef
