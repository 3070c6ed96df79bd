#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorkit::cli {

// Exit codes.
inline constexpr int kOk = 0;         // success, property true, verification pass
inline constexpr int kNegative = 1;   // property false, verification fail
inline constexpr int kError = 2;      // usage or input error
inline constexpr int kPartial = 3;    // mining stopped at its time budget

/// Default output directory comes from this environment variable.
inline constexpr const char* kOutDirEnv = "MINORKIT_OUT_DIR";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorkit::cli
