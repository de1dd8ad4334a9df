#ifndef HMS_VERSION_HPP
#define HMS_VERSION_HPP

namespace hms {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hms

#endif
