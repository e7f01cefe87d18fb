#include "report/cache.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace fs = std::filesystem;

namespace flt {

namespace {

std::string utc_timestamp()
{
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string unique_suffix()
{
    static std::atomic<unsigned long> counter{0};
    std::ostringstream o;
    o << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
    return o.str();
}

} // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir))
{
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_, ec)) {
        warn("cache directory " + dir_ + " is not usable (" + ec.message() + "); cache disabled");
        return;
    }
    if (::access(dir_.c_str(), W_OK) != 0) {
        warn("cache directory " + dir_ + " is not writable; cache disabled");
        return;
    }
    enabled_ = true;
}

std::string ResultCache::default_dir()
{
    if (const char* d = std::getenv("FLT_CACHE_DIR")) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/flt";
    if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/flt";
    return "";
}

std::string ResultCache::hash_key(const std::string& key)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string ResultCache::make_key(const std::string& op, const std::string& subject, const std::string& mode)
{
    return std::to_string(kSchemaVersion) + "|" + op + "|" + subject + "|" + mode;
}

bool ResultCache::enabled() const
{
    std::lock_guard<std::mutex> lock(m_);
    return enabled_;
}

std::string ResultCache::path_for(const std::string& key) const
{
    std::string h = hash_key(key);
    return (fs::path(dir_) / h.substr(0, 2) / (h + ".json")).string();
}

std::optional<Json> ResultCache::get(const std::string& key)
{
    if (!enabled()) return std::nullopt;
    std::string path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    Json entry = Json::parse(buf.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("schema") || !entry.contains("tool_version") ||
        !entry.contains("key") || !entry.contains("value")) {
        warn("cache entry " + path + " is corrupt; ignored");
        return std::nullopt;
    }
    if (entry["schema"] != kSchemaVersion || entry["tool_version"] != kToolVersion || entry["key"] != key) return std::nullopt;
    return entry["value"];
}

void ResultCache::put(const std::string& key, const Json& value)
{
    if (!enabled()) return;
    fs::path final_path = path_for(key);
    std::error_code ec;
    if (fs::exists(final_path, ec)) {
        // a stale or corrupt entry is replaced; a current one is kept
        auto current = get(key);
        if (current) return;
    }
    fs::create_directories(final_path.parent_path(), ec);
    if (ec) {
        warn("cannot create " + final_path.parent_path().string() + " (" + ec.message() + "); cache disabled");
        std::lock_guard<std::mutex> lock(m_);
        enabled_ = false;
        return;
    }
    Json entry{{"schema", kSchemaVersion}, {"tool_version", kToolVersion}, {"key", key}, {"timestamp", utc_timestamp()}, {"value", value}};
    fs::path tmp = final_path;
    tmp += unique_suffix();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump() << '\n';
        if (!out) {
            warn("cannot write " + tmp.string() + "; cache disabled");
            fs::remove(tmp, ec);
            std::lock_guard<std::mutex> lock(m_);
            enabled_ = false;
            return;
        }
    }
    fs::rename(tmp, final_path, ec);
    if (ec) {
        warn("cannot publish cache entry " + final_path.string() + " (" + ec.message() + ")");
        fs::remove(tmp, ec);
    }
}

std::vector<std::string> ResultCache::warnings() const
{
    std::lock_guard<std::mutex> lock(m_);
    return warnings_;
}

void ResultCache::warn(const std::string& w)
{
    std::lock_guard<std::mutex> lock(m_);
    warnings_.push_back(w);
}

} // namespace flt
