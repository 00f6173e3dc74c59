#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ewave/core.hpp"
#include "ewave/grid.hpp"
#include "ewave/lame.hpp"

namespace ewave {

/**
 * Flat key = value configuration. Lines starting with '#' are comments.
 * Values are written with enough digits to round-trip doubles exactly.
 */
class KeyValueConfig {
  public:
    static KeyValueConfig parse(std::istream& is) {
        KeyValueConfig cfg;
        std::string line;
        while (std::getline(is, line)) {
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto eq = line.find('=');
            require(eq != std::string::npos, "config: missing '=' in line: " + line);
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        return cfg;
    }
    static KeyValueConfig load(const std::string& path) {
        std::ifstream is(path);
        require(is.good(), "config: cannot open: " + path);
        return parse(is);
    }

    void save(const std::string& path) const {
        std::ofstream os(path);
        require(os.good(), "config: cannot write: " + path);
        os << serialize();
    }
    std::string serialize() const {
        std::ostringstream os;
        for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
        return os.str();
    }

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void set_double(const std::string& key, double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        kv_[key] = os.str();
    }
    void set_int(const std::string& key, std::int64_t v) { kv_[key] = std::to_string(v); }

    const std::string& get(const std::string& key) const {
        auto it = kv_.find(key);
        require(it != kv_.end(), "config: missing key '" + key + "'");
        return it->second;
    }
    std::string get_or(const std::string& key, const std::string& dflt) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? dflt : it->second;
    }
    double get_double(const std::string& key) const {
        const std::string& s = get(key);
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        require(pos == s.size(), "config: key '" + key + "' is not a number: " + s);
        return v;
    }
    double get_double_or(const std::string& key, double dflt) const {
        return has(key) ? get_double(key) : dflt;
    }
    std::int64_t get_int(const std::string& key) const {
        const std::string& s = get(key);
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(s, &pos);
        require(pos == s.size(), "config: key '" + key + "' is not an integer: " + s);
        return v;
    }
    std::int64_t get_int_or(const std::string& key, std::int64_t dflt) const {
        return has(key) ? get_int(key) : dflt;
    }

    const std::map<std::string, std::string>& entries() const { return kv_; }
    bool operator==(const KeyValueConfig& o) const { return kv_ == o.kv_; }

  private:
    static std::string trim(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
    }
    std::map<std::string, std::string> kv_;
};

/// Typed experiment parameters shared by the CLI drivers.
struct ExperimentConfig {
    double lambda = 2.0, mu = 1.0;
    double side = 1.0;
    int n = 64;
    double m = 3.0;
    Vec3 bump_center{0, 0, 0};
    double bump_radius = 0.22;
    double bump_amplitude = 1.0;
    std::uint64_t seed = 1;
    int realizations = 1;
    double Q = 120.0;
    int band_doublings = 1;
    int nodes_per_band = 128;
    int tau_count = 5;
    double tau_max = 4.0;
    int directions = 33;
    double solver_tol = 1e-8;
    int solver_max_iter = 400;
    std::string order_tags = "born-1";
    std::string output_dir = "out";

    static ExperimentConfig from(const KeyValueConfig& kv) {
        ExperimentConfig c;
        c.lambda = kv.get_double_or("lame.lambda", c.lambda);
        c.mu = kv.get_double_or("lame.mu", c.mu);
        c.side = kv.get_double_or("grid.side", c.side);
        c.n = int(kv.get_int_or("grid.n", c.n));
        c.m = kv.get_double_or("field.m", c.m);
        c.bump_center = {kv.get_double_or("strength.center.x", 0.0),
                         kv.get_double_or("strength.center.y", 0.0),
                         kv.get_double_or("strength.center.z", 0.0)};
        c.bump_radius = kv.get_double_or("strength.radius", c.bump_radius);
        c.bump_amplitude = kv.get_double_or("strength.amplitude", c.bump_amplitude);
        c.seed = std::uint64_t(kv.get_int_or("seed", std::int64_t(c.seed)));
        c.realizations = int(kv.get_int_or("realizations", c.realizations));
        c.Q = kv.get_double_or("band.Q", c.Q);
        c.band_doublings = int(kv.get_int_or("band.doublings", c.band_doublings));
        c.nodes_per_band = int(kv.get_int_or("band.nodes", c.nodes_per_band));
        c.tau_count = int(kv.get_int_or("tau.count", c.tau_count));
        c.tau_max = kv.get_double_or("tau.max", c.tau_max);
        c.directions = int(kv.get_int_or("directions", c.directions));
        c.solver_tol = kv.get_double_or("solver.tol", c.solver_tol);
        c.solver_max_iter = int(kv.get_int_or("solver.max_iter", c.solver_max_iter));
        c.order_tags = kv.get_or("order_tags", c.order_tags);
        c.output_dir = kv.get_or("output_dir", c.output_dir);
        c.validate();
        return c;
    }

    KeyValueConfig to_kv() const {
        KeyValueConfig kv;
        kv.set_double("lame.lambda", lambda);
        kv.set_double("lame.mu", mu);
        kv.set_double("grid.side", side);
        kv.set_int("grid.n", n);
        kv.set_double("field.m", m);
        kv.set_double("strength.center.x", bump_center.x);
        kv.set_double("strength.center.y", bump_center.y);
        kv.set_double("strength.center.z", bump_center.z);
        kv.set_double("strength.radius", bump_radius);
        kv.set_double("strength.amplitude", bump_amplitude);
        kv.set_int("seed", std::int64_t(seed));
        kv.set_int("realizations", realizations);
        kv.set_double("band.Q", Q);
        kv.set_int("band.doublings", band_doublings);
        kv.set_int("band.nodes", nodes_per_band);
        kv.set_int("tau.count", tau_count);
        kv.set_double("tau.max", tau_max);
        kv.set_int("directions", directions);
        kv.set_double("solver.tol", solver_tol);
        kv.set_int("solver.max_iter", solver_max_iter);
        kv.set("order_tags", order_tags);
        kv.set("output_dir", output_dir);
        return kv;
    }

    void validate() const {
        LameParameters lame(lambda, mu);  // throws on bad material
        (void)lame;
        Grid3::centered(side, n);         // throws on bad grid
        require(m > 2.0 && m <= 3.0, "config: field.m must lie in (2, 3]");
        require(bump_radius > 0 && bump_amplitude >= 0, "config: bad strength descriptor");
        require(realizations >= 1, "config: realizations must be >= 1");
        require(Q > 0 && nodes_per_band >= 64, "config: band needs Q > 0 and >= 64 nodes");
        require(band_doublings >= 1, "config: band.doublings must be >= 1");
        require(tau_count >= 1 && tau_max >= 0, "config: bad tau grid");
        require(directions >= 1, "config: directions must be >= 1");
        require(solver_tol > 0 && solver_max_iter > 0, "config: bad solver settings");
    }
};

}  // namespace ewave
