#pragma once

#include <string>

#include "kac/weights.hpp"

namespace kac::cli {

struct Request {
    std::string subcommand;       // factors | theta | codes | nqc | diagram | verify
    std::string weight_text;
    std::string notation = "shifted"; // shifted | partition
    std::string format = "text";      // text | json (diagram: text = ascii)
    Entry margin = -1;                // oracle / diagram margin; -1 = default
    std::string theta_text;           // "1,0,3,0"; empty = none
    bool verify_factors = false;      // factors --verify
    bool with_trace = false;          // factors --trace
};

struct Response {
    int exit_code = 0; // 0 ok, 1 parse/validation error, 2 verification failure
    std::string output;
};

Response run(const Request& request);

} // namespace kac::cli
