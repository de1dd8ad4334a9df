#ifndef HMS_SPEC_IO_HPP
#define HMS_SPEC_IO_HPP

#include <string>

#include "hms/tropical.hpp"

namespace hms {

// JSON schema: {"n": int, "terms": [{"alpha": [int...], "rho": "p" or "p/q"
// or integer, "coeff": optional string}]}.  Validation as in validate_spec.
LaurentPolySpec parse_spec_json(const std::string& text);
LaurentPolySpec load_spec_file(const std::string& path);
std::string spec_to_json(const LaurentPolySpec& spec);

}  // namespace hms

#endif
