#include "rfi/error.hpp"

namespace rfi {

Error::Error(ErrorKind kind, std::string code, const std::string& detail)
    : std::runtime_error(code + ": " + detail), kind_(kind), code_(std::move(code)) {}

}  // namespace rfi
