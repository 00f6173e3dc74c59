#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "ewave/core.hpp"

namespace ewave {

/// Worker count: env override EWAVE_WORKERS, else the config value, else 1.
inline int resolve_worker_count(int configured) {
    if (const char* env = std::getenv("EWAVE_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return configured >= 1 ? configured : 1;
}

/**
 * Resumable job runner. Each job owns an id; the runner skips jobs whose
 * completion marker exists, runs the rest on a bounded worker pool, and drops
 * the marker only after the job body returned. Job bodies must write only
 * their own files, so interrupted sweeps resume by rerunning the un-marked
 * remainder.
 */
class JobRunner {
  public:
    JobRunner(std::filesystem::path marker_dir, int workers)
        : marker_dir_(std::move(marker_dir)), workers_(resolve_worker_count(workers)) {
        std::filesystem::create_directories(marker_dir_);
    }

    struct Job {
        std::string id;
        std::function<void()> body;
    };

    void add(std::string id, std::function<void()> body) {
        jobs_.push_back({std::move(id), std::move(body)});
    }

    std::filesystem::path marker_path(const std::string& id) const {
        return marker_dir_ / (id + ".done");
    }
    bool is_done(const std::string& id) const {
        return std::filesystem::exists(marker_path(id));
    }

    /// Returns the number of jobs actually executed (skipped jobs not counted).
    int run() {
        std::vector<const Job*> pending;
        for (const auto& j : jobs_)
            if (!is_done(j.id)) pending.push_back(&j);

        std::atomic<std::size_t> next{0};
        std::atomic<int> executed{0};
        std::mutex error_mutex;
        std::string first_error;

        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= pending.size()) return;
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error.empty()) return;
                }
                try {
                    pending[i]->body();
                    std::ofstream marker(marker_path(pending[i]->id));
                    marker << "done\n";
                    ++executed;
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error.empty())
                        first_error = pending[i]->id + ": " + e.what();
                }
            }
        };

        const int nw = std::min<int>(workers_, int(pending.size()));
        if (nw <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        require(first_error.empty(), "sweep job failed: " + first_error);
        return executed.load();
    }

    std::size_t total_jobs() const { return jobs_.size(); }

  private:
    std::filesystem::path marker_dir_;
    int workers_;
    std::vector<Job> jobs_;
};

}  // namespace ewave
