#include "jacklaurent/cache.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace jl {

namespace fs = std::filesystem;

std::string content_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Cache::Cache(const std::string& dir) {
    const char* env = std::getenv("JACKLAURENT_CACHE_DIR");
    if (env && *env) {
        dir_ = env;
    } else if (!dir.empty()) {
        dir_ = dir;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        dir_ = fs::path(xdg) / "jacklaurent";
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        dir_ = fs::path(home) / ".cache" / "jacklaurent";
    } else {
        dir_ = fs::temp_directory_path() / "jacklaurent-cache";
    }
    std::error_code ec;
    fs::create_directories(dir_, ec);
    enabled_ = !ec && fs::is_directory(dir_);
    if (!enabled_) std::cerr << "warning: cache directory unavailable, caching disabled\n";
}

fs::path Cache::path_for(const std::string& key) const {
    return dir_ / (content_hash(key) + ".json");
}

std::optional<std::string> Cache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto j = nlohmann::json::parse(buf.str());
        if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
        return j.at("payload").get<std::string>();
    } catch (...) {
        return std::nullopt;  // corrupted entry: ignore, caller recomputes
    }
}

void Cache::put(const std::string& key, const std::string& payload) const {
    if (!enabled_) return;
    nlohmann::ordered_json j{{"key", key}, {"payload", payload}};
    fs::path final_path = path_for(key);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cache write failed, continuing uncached\n";
            return;
        }
        out << j.dump();
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        std::cerr << "warning: cache write failed, continuing uncached\n";
    }
}

}  // namespace jl
