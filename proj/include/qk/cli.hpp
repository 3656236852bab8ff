#ifndef QK_CLI_HPP_
#define QK_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qk::cli {

// Exit codes.
inline constexpr int kOk = 0;             // success / true
inline constexpr int kFalse = 1;          // false, not isomorphic, property absent
inline constexpr int kInputError = 2;
inline constexpr int kInternalFailure = 3;

// Runs one command; `args` excludes the program name. "-" as a FILE argument
// reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qk::cli

#endif  // QK_CLI_HPP_
