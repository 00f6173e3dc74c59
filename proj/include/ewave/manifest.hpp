#pragma once

#include <chrono>
#include <fstream>
#include <string>

#include "ewave/config.hpp"
#include "ewave/version.hpp"

namespace ewave {

/// Run manifest: config echo plus versions, seeds, and timings, as key = value text.
class Manifest {
  public:
    explicit Manifest(const KeyValueConfig& config_echo) {
        kv_.set("manifest.version", "1");
        kv_.set("ewave.version", EWAVE_VERSION);
        for (const auto& [k, v] : config_echo.entries()) kv_.set("config." + k, v);
        start_ = std::chrono::steady_clock::now();
    }

    void note(const std::string& key, const std::string& value) { kv_.set(key, value); }
    void note_double(const std::string& key, double v) { kv_.set_double(key, v); }
    void note_int(const std::string& key, std::int64_t v) { kv_.set_int(key, v); }

    void finalize_and_save(const std::string& path) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        kv_.set_double("timing.wall_seconds", secs);
        kv_.save(path);
    }

  private:
    KeyValueConfig kv_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ewave
