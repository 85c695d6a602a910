#ifndef EIGENROOT_VERSION_HPP
#define EIGENROOT_VERSION_HPP

namespace eigenroot {
inline constexpr const char* kToolVersion = "0.1.0";
}

#endif
