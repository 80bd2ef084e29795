#ifndef GHAWKES_VERSION_HPP
#define GHAWKES_VERSION_HPP

namespace ghawkes {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

} // namespace ghawkes

#endif // GHAWKES_VERSION_HPP
