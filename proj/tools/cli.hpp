#pragma once

#include <ostream>

namespace sparsesum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsesum::cli
