#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace jl {

/// Content-addressed JSON result cache. Writes go to a temp file followed by
/// an atomic rename; unreadable or mismatched entries are treated as misses.
class Cache {
public:
    /// Resolution order: JACKLAURENT_CACHE_DIR, then the explicit dir, then
    /// $XDG_CACHE_HOME/jacklaurent or $HOME/.cache/jacklaurent.
    explicit Cache(const std::string& dir = "");

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
    bool enabled_ = false;
};

/// FNV-1a 64-bit, printed as hex; stable across runs and platforms.
std::string content_hash(const std::string& s);

}  // namespace jl
