#ifndef LIECENSUS_VERSION_HPP
#define LIECENSUS_VERSION_HPP

namespace liecensus {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int output_schema_version = 1;

} // namespace liecensus

#endif
