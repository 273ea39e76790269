#ifndef CQDISCORD_CLI_STATE_FILE_HPP
#define CQDISCORD_CLI_STATE_FILE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "cqdiscord/qmat.hpp"

namespace cqd::cli {

// Unreadable file or text that is neither a cq-spec nor a 4x8 number table.
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two accepted layouts:
//
//   cq-spec (JSON):  {"bloch0": [x, y, z], "bloch1": [x, y, z]}
//   raw matrix:      4 rows of 8 numbers, re/im interleaved per entry;
//                    separators are whitespace or commas, '#' starts a comment.
//
// Throws StateFormatError on malformed input and InvalidStateError when the
// parsed matrix or Bloch vectors fail validation.
TwoQubit<double> parse_state(std::string_view text);

TwoQubit<double> read_state_file(const std::string& path);

}  // namespace cqd::cli

#endif  // CQDISCORD_CLI_STATE_FILE_HPP
