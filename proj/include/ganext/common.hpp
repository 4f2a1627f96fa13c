#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ganext {

// Error categories map 1:1 onto CLI exit codes (config=2, data=3, numeric=4).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline void strcat_impl(std::ostringstream&) {}
template <typename A, typename... Rest>
void strcat_impl(std::ostringstream& os, const A& a, const Rest&... rest) {
    os << a;
    strcat_impl(os, rest...);
}
}  // namespace detail

template <typename... Args>
std::string strcat(const Args&... args) {
    std::ostringstream os;
    detail::strcat_impl(os, args...);
    return os.str();
}

template <typename... Args>
[[noreturn]] void throw_config(const Args&... args) {
    throw ConfigError(strcat(args...));
}

template <typename... Args>
[[noreturn]] void throw_data(const Args&... args) {
    throw DataError(strcat(args...));
}

template <typename... Args>
[[noreturn]] void throw_numeric(const Args&... args) {
    throw NumericError(strcat(args...));
}

#define GANEXT_CHECK(cond, ...)                     \
    do {                                            \
        if (!(cond)) ::ganext::throw_data(__VA_ARGS__); \
    } while (0)

#define GANEXT_CHECK_CFG(cond, ...)                   \
    do {                                              \
        if (!(cond)) ::ganext::throw_config(__VA_ARGS__); \
    } while (0)

// FNV-1a, used for config digests and per-case seed derivation.
inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a64(s.data(), s.size(), h);
}

std::string hex_u64(std::uint64_t v);

}  // namespace ganext
