#ifndef QK_QND_FORMAT_HPP_
#define QK_QND_FORMAT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "qk/table.hpp"

namespace qk {

// .qnd text format: first non-comment line holds n, followed by n rows of n
// whitespace-separated entries; row i, column j holds i*j. '#' starts a
// comment that runs to end of line. Blank lines are ignored.
//
// Errors are kParse with a "line N: ..." message.
CayleyTable parse_table(std::string_view text);
CayleyTable read_table(std::istream& in);

// Canonical rendering: "n\n" then each row with single spaces and '\n'.
std::string serialize_table(const CayleyTable& table);

}  // namespace qk

#endif  // QK_QND_FORMAT_HPP_
