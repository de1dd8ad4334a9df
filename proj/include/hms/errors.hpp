#ifndef HMS_ERRORS_HPP
#define HMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hms {

// Malformed user input: bad dimensions, bad labels, unparsable text, bounds
// out of range, or a truncation too small to stabilize.  The CLI maps this
// to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hms

#endif
