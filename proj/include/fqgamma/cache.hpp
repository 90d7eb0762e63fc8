#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fqgamma {

inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& s);

// Content-addressed result cache: one JSON file per canonical request key,
// named by the key's FNV-1a hash. Entries store the key, the value, a
// checksum of the value, and the tool version; a mismatch in any of them
// (hash collision, corruption, version bump) makes get() miss so the
// result is recomputed. Writes are write-temp-then-rename, so concurrent
// readers only ever see complete entries. IO problems degrade to a warning
// on stderr and an uncached computation, never to a failure.
class ResultCache {
  public:
    ResultCache() = default;  // disabled

    // Resolution order: explicit dir, then FQGAMMA_CACHE_DIR, then
    // ${XDG_CACHE_HOME:-$HOME/.cache}/fqgamma. `off` wins over everything.
    static ResultCache resolve(const std::string& explicit_dir, bool off);

    bool enabled() const { return enabled_; }
    const std::string& dir() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

  private:
    bool enabled_ = false;
    std::string dir_;
};

}  // namespace fqgamma
