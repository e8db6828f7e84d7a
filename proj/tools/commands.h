#ifndef LRSCATTER_TOOLS_COMMANDS_H_
#define LRSCATTER_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace lrscatter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitMalformed = 2;

// args excludes the program name. Results go to out as one line of JSON;
// errors go to err as {"error":...}.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// LRSCATTER_MAX_RANK, or the library default.
int MaxRankFromEnv();

}  // namespace lrscatter::cli

#endif  // LRSCATTER_TOOLS_COMMANDS_H_
