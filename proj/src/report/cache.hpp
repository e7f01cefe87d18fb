#pragma once

#include "report/serialize.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace flt {

// On-disk cache of serialized results: one JSON document per key at
// <dir>/<h[0..1]>/<h>.json, h the FNV-1a hash of the key. Entries record the
// schema and tool version and are ignored when either differs. Writes go
// through a temporary file and an atomic rename, so concurrent writers in
// other processes are safe and readers never see partial files.
class ResultCache {
  public:
    // An empty dir disables the cache.
    explicit ResultCache(std::string dir);

    // FLT_CACHE_DIR, else $XDG_CACHE_HOME/flt, else $HOME/.cache/flt, else "".
    static std::string default_dir();
    static std::string hash_key(const std::string& key);
    // "<schema>|<op>|<canonical poly or argument>|<mode>"
    static std::string make_key(const std::string& op, const std::string& subject, const std::string& mode);

    bool enabled() const;
    const std::string& dir() const { return dir_; }
    std::string path_for(const std::string& key) const;

    std::optional<Json> get(const std::string& key);
    // The first successful write of a key wins; later puts are no-ops.
    void put(const std::string& key, const Json& value);

    std::vector<std::string> warnings() const;

  private:
    void warn(const std::string& w);
    std::string dir_;
    bool enabled_ = false;
    mutable std::mutex m_;
    std::vector<std::string> warnings_;
};

} // namespace flt
