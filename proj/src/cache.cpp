#include "fqgamma/cache.hpp"

#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fqgamma {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void warn(const std::string& what) { std::cerr << "cache warning: " << what << "\n"; }

}  // namespace

ResultCache ResultCache::resolve(const std::string& explicit_dir, bool off) {
    ResultCache c;
    if (off) return c;
    std::string dir = explicit_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("FQGAMMA_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) {
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            dir = std::string(xdg) + "/fqgamma";
        else if (const char* home = std::getenv("HOME"); home && *home)
            dir = std::string(home) + "/.cache/fqgamma";
    }
    if (dir.empty()) return c;  // nowhere to put it; stay disabled
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        warn("cannot create " + dir + " (" + ec.message() + "); caching disabled");
        return c;
    }
    c.enabled_ = true;
    c.dir_ = dir;
    return c;
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    const std::string path = dir_ + "/" + hex64(fnv1a64(key)) + ".json";
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json entry = nlohmann::json::parse(buf.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (!entry.contains("key") || !entry.contains("value") || !entry.contains("checksum") ||
        !entry.contains("version"))
        return std::nullopt;
    if (!entry["key"].is_string() || !entry["value"].is_string() ||
        !entry["checksum"].is_string() || !entry["version"].is_string())
        return std::nullopt;
    if (entry["key"].get<std::string>() != key) return std::nullopt;  // hash collision
    if (entry["version"].get<std::string>() != kToolVersion) return std::nullopt;
    const std::string value = entry["value"].get<std::string>();
    if (entry["checksum"].get<std::string>() != hex64(fnv1a64(value))) return std::nullopt;
    return value;
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    if (!enabled_) return;
    nlohmann::ordered_json entry;
    entry["key"] = key;
    entry["value"] = value;
    entry["checksum"] = hex64(fnv1a64(value));
    entry["version"] = kToolVersion;
    const std::string name = hex64(fnv1a64(key));
    const std::string path = dir_ + "/" + name + ".json";
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            warn("cannot write " + tmp);
            return;
        }
        out << entry.dump();
        if (!out.good()) {
            warn("short write to " + tmp);
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        warn("cannot rename " + tmp + " -> " + path + " (" + ec.message() + ")");
        std::filesystem::remove(tmp, ec);
    }
}

}  // namespace fqgamma
