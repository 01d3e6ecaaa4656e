#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmv::tool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

/// Runs one tmvtool invocation. `args` excludes the program name. Reports
/// go to `out` unless redirected with -o; diagnostics and the summary go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Environment variable naming the default lexicon directory.
inline constexpr const char* kLexiconDirEnv = "TMV_LEXICON_DIR";

}  // namespace tmv::tool
