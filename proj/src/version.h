#ifndef ASRSCORE_VERSION_H_
#define ASRSCORE_VERSION_H_

namespace asrscore {

inline constexpr const char *kToolName = "asrscore";
inline constexpr const char *kToolVersion = "0.1.0";

}  // namespace asrscore

#endif  // ASRSCORE_VERSION_H_
