#ifndef HJUMP_PATTERN_IO_HPP
#define HJUMP_PATTERN_IO_HPP

#include <iosfwd>
#include <string>

#include "hjump/pattern.hpp"

namespace hjump {

// Text format: a header line `r=<int> n=<int>`, then one edge per line as
// expanded vertices ("1 2 2"). Blank lines and `#` comments are skipped.
// Parse errors mention the offending line number.
RPattern parse_pattern_text(std::istream& in);

// JSON mirror: {"r": 3, "n": 4, "edges": [[1,2,2], ...]}.
RPattern parse_pattern_json(const std::string& text);

// Sniffs the leading non-space character: '{' means JSON, anything else text.
RPattern parse_pattern_string(const std::string& text);

// Reads from a file, or stdin when path is "-".
RPattern load_pattern(const std::string& path);

std::string write_pattern_text(const RPattern& p);
std::string write_pattern_json(const RPattern& p);

void save_pattern(const RPattern& p, const std::string& path, bool json = false);

}  // namespace hjump

#endif
