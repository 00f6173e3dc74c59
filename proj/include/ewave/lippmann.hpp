#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "ewave/fft.hpp"
#include "ewave/greens.hpp"
#include "ewave/planewave.hpp"
#include "ewave/randfield.hpp"

namespace ewave {

struct SolveReport {
    int iterations = 0;
    double final_residual = 0.0;
    std::optional<int> born_terms_used;
    double wall_time_s = 0.0;
    bool converged = false;
    bool diverged = false;  // born series: norm grew for 3 consecutive terms
};

inline double points_per_shear_wavelength(const Grid3& grid, double omega,
                                          const LameParameters& lame) {
    return 2.0 * M_PI / (lame.kappa_s(omega) * grid.h());
}

/**
 * Discretized volume operator (K_omega u)(x) = int G(x,z,omega) rho(z) u(z) dz.
 *
 * The Green tensor is tabulated once per (grid, omega) on the doubled box and
 * convolved by zero-padded FFT, which reproduces the linear (free-space)
 * convolution exactly since supp(rho u) fits in the original box. The singular
 * offset-zero entry is the analytic cell integral from green_self_cell.
 */
class LippmannOperator {
  public:
    LippmannOperator(const Grid3& grid, double omega, const LameParameters& lame)
        : grid_(grid), omega_(omega), lame_(lame), n_(grid.n), n2_(2 * grid.n) {
        require(omega > 0.0, "LippmannOperator: omega must be > 0");
        const double ppw = points_per_shear_wavelength(grid, omega, lame);
        require(ppw >= 6.0 - 1e-9,
                "LippmannOperator: grid under-resolves the shear wavelength: " +
                    std::to_string(ppw) + " points per wavelength (need >= 6)");
        tabulate();
    }

    const Grid3& grid() const { return grid_; }
    double omega() const { return omega_; }

    /// out = K_omega (rho u); linear in rho and in u.
    VectorField3C apply(const PotentialRealization& rho, const VectorField3C& u) const {
        require(rho.grid == grid_ && u.grid == grid_, "apply_K: grid mismatch");
        const std::size_t M = std::size_t(n2_) * n2_ * n2_;
        std::array<std::vector<cplx>, 3> shat;
        for (int c = 0; c < 3; ++c) {
            shat[c].assign(M, cplx{});
            std::size_t src = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    const std::size_t row = (std::size_t(i) * n2_ + j) * n2_;
                    for (int k = 0; k < n_; ++k, ++src)
                        shat[c][row + k] = rho.values[src] * u.comp[c][src];
                }
            fft3_forward(shat[c], n2_);
        }
        VectorField3C out(grid_);
        std::vector<cplx> acc(M);
        for (int i = 0; i < 3; ++i) {
            for (std::size_t p = 0; p < M; ++p)
                acc[p] = khat_[sym_index(i, 0)][p] * shat[0][p] +
                         khat_[sym_index(i, 1)][p] * shat[1][p] +
                         khat_[sym_index(i, 2)][p] * shat[2][p];
            fft3_backward_scaled(acc, n2_);
            std::size_t dst = 0;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) {
                    const std::size_t row = (std::size_t(a) * n2_ + b) * n2_;
                    for (int c = 0; c < n_; ++c, ++dst) out.comp[i][dst] = acc[row + c];
                }
        }
        return out;
    }

  private:
    static int sym_index(int i, int j) {
        // order: xx xy xz yy yz zz
        static const int map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
        return map[i][j];
    }

    void tabulate() {
        const double h = grid_.h();
        const double h3 = h * h * h;
        const std::size_t M = std::size_t(n2_) * n2_ * n2_;
        for (auto& k : khat_) k.assign(M, cplx{});
        const Mat3c self = green_self_cell(h, omega_, lame_) ;
        std::size_t p = 0;
        for (int i = 0; i < n2_; ++i) {
            const int oi = (i < n_) ? i : i - n2_;  // circulant offset
            for (int j = 0; j < n2_; ++j) {
                const int oj = (j < n_) ? j : j - n2_;
                for (int k = 0; k < n2_; ++k, ++p) {
                    const int ok = (k < n_) ? k : k - n2_;
                    // offsets with any component == -n are never reached by
                    // (x - z) with x, z in the original box; leave them zero
                    if (oi == -n_ || oj == -n_ || ok == -n_) continue;
                    if (oi == 0 && oj == 0 && ok == 0) {
                        khat_[0][p] = self(0, 0);
                        khat_[1][p] = self(0, 1);
                        khat_[2][p] = self(0, 2);
                        khat_[3][p] = self(1, 1);
                        khat_[4][p] = self(1, 2);
                        khat_[5][p] = self(2, 2);
                        continue;
                    }
                    const Vec3 d{oi * h, oj * h, ok * h};
                    const Mat3c G = green_tensor(d, Vec3{}, omega_, lame_);
                    khat_[0][p] = G(0, 0) * h3;
                    khat_[1][p] = G(0, 1) * h3;
                    khat_[2][p] = G(0, 2) * h3;
                    khat_[3][p] = G(1, 1) * h3;
                    khat_[4][p] = G(1, 2) * h3;
                    khat_[5][p] = G(2, 2) * h3;
                }
            }
        }
        for (auto& k : khat_) fft3_forward(k, n2_);
    }

    Grid3 grid_;
    double omega_;
    LameParameters lame_;
    int n_, n2_;
    std::array<std::vector<cplx>, 6> khat_;
};

inline VectorField3C apply_K(const PotentialRealization& rho, const VectorField3C& u,
                             double omega, const LameParameters& lame) {
    return LippmannOperator(rho.grid, omega, lame).apply(rho, u);
}

/**
 * Born sequence u_0 = u_inc, u_j = -K u_{j-1}. Stops once ||u_j||/||u_0|| < tol
 * or j reaches j_max. Growth over three consecutive terms is flagged as
 * divergence in the report; computed terms are returned either way.
 */
inline std::vector<VectorField3C> born_series(const PotentialRealization& rho,
                                              const PlaneWave& wave, int j_max, double tol,
                                              const LameParameters& lame, SolveReport* report) {
    const auto t0 = std::chrono::steady_clock::now();
    LippmannOperator op(rho.grid, wave.omega, lame);
    std::vector<VectorField3C> terms;
    terms.push_back(evaluate_incident(wave, rho.grid, lame));
    const double norm0 = terms[0].norm();
    double prev = norm0;
    int grow_streak = 0;
    bool diverged = false;
    for (int j = 1; j <= j_max; ++j) {
        VectorField3C next = op.apply(rho, terms.back());
        next.scale(-1.0);
        const double nn = next.norm();
        terms.push_back(std::move(next));
        if (nn > prev) {
            if (++grow_streak >= 3) {
                diverged = true;
                break;
            }
        } else {
            grow_streak = 0;
        }
        prev = nn;
        if (nn / norm0 < tol) break;
    }
    if (report) {
        report->born_terms_used = int(terms.size()) - 1;
        report->final_residual = prev / norm0;
        report->converged = !diverged && prev / norm0 < tol;
        report->diverged = diverged;
        report->wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return terms;
}

namespace detail {

/**
 * Restarted GMRES on C^N for the matrix-free system A x = b. Returns true on
 * convergence; x holds the best iterate either way.
 */
inline bool gmres(const std::function<void(const std::vector<cplx>&, std::vector<cplx>&)>& apply_A,
                  const std::vector<cplx>& b, std::vector<cplx>& x, double tol, int max_iter,
                  int restart, int& iterations, double& rel_residual) {
    const std::size_t N = b.size();
    const auto dot = [](const std::vector<cplx>& a, const std::vector<cplx>& c) {
        cplx s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * c[i];
        return s;
    };
    const auto nrm = [&](const std::vector<cplx>& a) { return std::sqrt(std::abs(dot(a, a))); };

    const double bnorm = nrm(b);
    if (bnorm == 0.0) {
        x.assign(N, cplx{});
        iterations = 0;
        rel_residual = 0.0;
        return true;
    }

    std::vector<cplx> r(N), w(N);
    iterations = 0;
    while (true) {
        apply_A(x, r);
        for (std::size_t i = 0; i < N; ++i) r[i] = b[i] - r[i];
        double beta = nrm(r);
        rel_residual = beta / bnorm;
        if (rel_residual <= tol) return true;
        if (iterations >= max_iter) return false;

        std::vector<std::vector<cplx>> V;
        V.emplace_back(N);
        for (std::size_t i = 0; i < N; ++i) V[0][i] = r[i] / beta;
        std::vector<std::vector<cplx>> H;  // H[j] holds column j (j+2 entries)
        std::vector<cplx> cs_rot, g;
        std::vector<double> sn_rot;
        g.assign(1, beta);

        int j = 0;
        for (; j < restart && iterations < max_iter; ++j, ++iterations) {
            apply_A(V[j], w);
            H.emplace_back(j + 2);
            for (int i = 0; i <= j; ++i) {
                H[j][i] = dot(V[i], w);
                for (std::size_t t = 0; t < N; ++t) w[t] -= H[j][i] * V[i][t];
            }
            const double hlast = nrm(w);
            H[j][j + 1] = hlast;
            // apply stored Givens rotations to the new column
            for (int i = 0; i < j; ++i) {
                const cplx t = H[j][i];
                H[j][i] = std::conj(cs_rot[i]) * t + sn_rot[i] * H[j][i + 1];
                H[j][i + 1] = -sn_rot[i] * t + cs_rot[i] * H[j][i + 1];
            }
            // new rotation annihilating H[j][j+1]
            const cplx a = H[j][j];
            const double denom = std::sqrt(std::norm(a) + hlast * hlast);
            cplx c_new;
            double s_new;
            if (denom == 0.0) {
                c_new = 1.0;
                s_new = 0.0;
            } else {
                c_new = a / denom;
                s_new = hlast / denom;
            }
            cs_rot.push_back(c_new);
            sn_rot.push_back(s_new);
            H[j][j] = std::conj(c_new) * a + s_new * hlast;
            H[j][j + 1] = 0.0;
            g.push_back(-s_new * g[j]);
            g[j] = std::conj(c_new) * g[j];

            rel_residual = std::abs(g[j + 1]) / bnorm;
            if (hlast > 0.0) {
                V.emplace_back(N);
                for (std::size_t t = 0; t < N; ++t) V[j + 1][t] = w[t] / hlast;
            }
            if (rel_residual <= tol || hlast == 0.0) {
                ++j;
                ++iterations;
                break;
            }
        }
        // back-substitute y from the triangularized system, update x
        std::vector<cplx> y(j);
        for (int i = j - 1; i >= 0; --i) {
            cplx s = g[i];
            for (int k = i + 1; k < j; ++k) s -= H[k][i] * y[k];
            y[i] = s / H[i][i];
        }
        for (int i = 0; i < j; ++i)
            for (std::size_t t = 0; t < N; ++t) x[t] += y[i] * V[i][t];
    }
}

}  // namespace detail

/**
 * Full solve of (I + K_omega) u = u_inc by restarted GMRES (restart 30) with
 * the incident field as initial guess, so rho == 0 converges in zero
 * iterations. The reported residual is the true relative residual of the
 * returned iterate.
 */
inline VectorField3C solve_full(const PotentialRealization& rho, const PlaneWave& wave,
                                double tol, int max_iter, const LameParameters& lame,
                                SolveReport* report) {
    const auto t0 = std::chrono::steady_clock::now();
    LippmannOperator op(rho.grid, wave.omega, lame);
    VectorField3C uinc = evaluate_incident(wave, rho.grid, lame);
    const std::size_t N = rho.grid.num_nodes();

    auto pack = [&](const VectorField3C& f, std::vector<cplx>& v) {
        v.resize(3 * N);
        for (int c = 0; c < 3; ++c)
            std::copy(f.comp[c].begin(), f.comp[c].end(), v.begin() + c * N);
    };
    auto unpack = [&](const std::vector<cplx>& v) {
        VectorField3C f(rho.grid);
        for (int c = 0; c < 3; ++c)
            std::copy(v.begin() + c * N, v.begin() + (c + 1) * N, f.comp[c].begin());
        return f;
    };

    std::vector<cplx> b, x;
    pack(uinc, b);
    x = b;  // initial guess u = u_inc
    auto apply_A = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
        VectorField3C f = unpack(in);
        VectorField3C Kf = op.apply(rho, f);
        out.resize(3 * N);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < N; ++i) out[c * N + i] = in[c * N + i] + Kf.comp[c][i];
    };

    int its = 0;
    double res = 0.0;
    const bool ok = detail::gmres(apply_A, b, x, tol, max_iter, 30, its, res);
    if (report) {
        report->iterations = its;
        report->final_residual = res;
        report->converged = ok;
        report->wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (!ok)
        throw EwaveError("solve_full: no convergence within " + std::to_string(max_iter) +
                         " iterations; best residual " + std::to_string(res));
    return unpack(x);
}

}  // namespace ewave
