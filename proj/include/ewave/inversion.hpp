#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ewave/farfield.hpp"
#include "ewave/sphere.hpp"

namespace ewave {

/// Recovery constants C_p = 2^{-m-4} pi^-2 cp^{4-m}, C_s likewise with cs.
struct InversionConstants {
    double C_p = 0.0;
    double C_s = 0.0;
};

inline InversionConstants inversion_constants(double m, const LameParameters& lame) {
    require(m > 14.0 / 5.0 && m <= 3.0,
            "inversion_constants: m must lie in (14/5, 3]");
    const double pref = std::pow(2.0, -m - 4.0) / (M_PI * M_PI);
    return {pref * std::pow(lame.cp(), 4.0 - m), pref * std::pow(lame.cs(), 4.0 - m)};
}

/**
 * Backscattered far-field records on a uniform frequency lattice at fixed
 * incidence theta (observation x_hat = -theta).
 */
struct FrequencySweep {
    Vec3 theta{0, 0, 1};
    std::vector<double> omegas;  // strictly increasing, uniform spacing
    std::vector<FarFieldRecord> records;
    OrderTag order_tag = OrderTag::Born1;

    double delta_omega() const {
        require(omegas.size() >= 2, "FrequencySweep: need at least two lattice nodes");
        return omegas[1] - omegas[0];
    }
    void validate_lattice() const {
        const double dw = delta_omega();
        require(dw > 0, "FrequencySweep: omegas must increase");
        for (std::size_t i = 1; i < omegas.size(); ++i)
            require(std::abs(omegas[i] - omegas[i - 1] - dw) <= 1e-9 * dw,
                    "FrequencySweep: lattice must be uniform");
    }
    void validate() const {
        require(omegas.size() == records.size(), "FrequencySweep: record count mismatch");
        validate_lattice();
    }
};

/// Backscatter polarization amplitude of one record: the P pattern is parallel
/// to theta, the S pattern lies in theta's orthogonal plane; either way the
/// squared magnitude and products reduce through the complex 3-vector.
inline CVec3 record_component(const FarFieldRecord& rec, WaveKind kind) {
    return kind == WaveKind::P ? rec.uinf_p : rec.uinf_s;
}

/**
 * Single-band frequency-correlation estimator:
 *   (1/Q) int_Q^{2Q} omega^m  u_inf(-theta, omega) . conj(u_inf(-theta, omega+tau)) domega
 * by trapezoidal quadrature on the sweep lattice, Q = omegas.front().
 * tau must be a lattice multiple and covered by the sweep.
 */
inline cplx correlation_estimate(const FrequencySweep& sweep, double tau, double m,
                                 WaveKind kind) {
    sweep.validate();
    const double dw = sweep.delta_omega();
    const double Q = sweep.omegas.front();
    require(tau >= 0.0, "correlation_estimate: tau must be >= 0");
    const double lat = tau / dw;
    const long shift = std::lround(lat);
    require(std::abs(lat - double(shift)) <= 1e-6,
            "correlation_estimate: tau is not representable on the omega lattice");

    // nodes spanning [Q, 2Q]
    const double span = Q / dw;
    const long nband = std::lround(span);
    require(std::abs(span - double(nband)) <= 1e-6 && nband >= 1,
            "correlation_estimate: band edge 2Q off the lattice");
    require(std::size_t(nband + shift) < sweep.omegas.size(),
            "correlation_estimate: sweep does not cover [Q, 2Q + tau]");

    cplx acc = 0.0;
    for (long i = 0; i <= nband; ++i) {
        const double om = sweep.omegas[i];
        const CVec3 a = record_component(sweep.records[i], kind);
        const CVec3 b = record_component(sweep.records[i + shift], kind);
        const double w = (i == 0 || i == nband) ? 0.5 * dw : dw;
        acc += w * std::pow(om, m) * a.dotc(b);
    }
    return acc / Q;
}

struct CorrelationCurve {
    WaveKind kind = WaveKind::P;
    Vec3 theta{};
    double Q = 0.0;
    double m = 3.0;
    std::vector<double> taus;
    std::vector<cplx> values;
    std::vector<double> stderrs;  // optional, empty if unknown
};

// ---------------------------------------------------------------------------
// Born-1 fast path: at backscatter the first-order pattern needs only the
// Fourier transform of rho along the incidence ray,
//   u1_p_inf(-theta,omega,theta) = -(cp^2/4pi) rho_hat(-2 kp theta) theta,
//   u1_s_inf(-theta,omega,theta) = -(cs^2/4pi) rho_hat(-2 ks theta) theta_perp,
// so a sweep costs one pass over supp(rho) per direction.
// ---------------------------------------------------------------------------

struct SupportNodes {
    std::vector<Vec3> coords;
    std::vector<double> values;
    double h3 = 0.0;
};

inline SupportNodes collect_support(const PotentialRealization& rho) {
    SupportNodes s;
    const Grid3& g = rho.grid;
    s.h3 = std::pow(g.h(), 3);
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx)
                if (rho.values[idx] != 0.0) {
                    s.coords.push_back(g.coord(i, j, k));
                    s.values.push_back(rho.values[idx]);
                }
    return s;
}

/// rho_hat(-s theta) = h^3 sum_z rho(z) e^{+i s theta.z} for the uniform
/// lattice s_j = s0 + j ds, evaluated by recursive phase accumulation.
inline std::vector<cplx> ray_transform(const SupportNodes& nodes, const Vec3& theta,
                                       double s0, double ds, std::size_t count) {
    std::vector<cplx> out(count, cplx{});
    const std::size_t nn = nodes.coords.size();
    std::vector<cplx> cur(nn), step(nn);
    for (std::size_t p = 0; p < nn; ++p) {
        const double t = theta.dot(nodes.coords[p]);
        cur[p] = nodes.values[p] * std::exp(I * s0 * t);
        step[p] = std::exp(I * ds * t);
    }
    for (std::size_t j = 0; j < count; ++j) {
        cplx acc = 0.0;
        for (std::size_t p = 0; p < nn; ++p) {
            acc += cur[p];
            cur[p] *= step[p];
        }
        out[j] = acc * nodes.h3;
    }
    return out;
}

/// Unit vector orthogonal to theta (deterministic choice).
inline Vec3 orthogonal_unit(const Vec3& theta) {
    const Vec3 trial = std::abs(theta.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 perp = trial - theta * trial.dot(theta);
    return perp.normalized();
}

inline FrequencySweep born1_backscatter_sweep(const PotentialRealization& rho,
                                              const Vec3& theta,
                                              const std::vector<double>& omegas,
                                              const LameParameters& lame) {
    require(std::abs(theta.norm() - 1.0) <= 1e-12, "born1 sweep: theta must be unit");
    FrequencySweep sw;
    sw.theta = theta;
    sw.omegas = omegas;
    sw.order_tag = OrderTag::Born1;
    sw.validate_lattice();
    const double dw = omegas[1] - omegas[0];

    const SupportNodes nodes = collect_support(rho);
    const double cp = lame.cp(), cs = lame.cs();
    const auto rp = ray_transform(nodes, theta, 2.0 * cp * omegas.front(), 2.0 * cp * dw,
                                  omegas.size());
    const auto rs = ray_transform(nodes, theta, 2.0 * cs * omegas.front(), 2.0 * cs * dw,
                                  omegas.size());
    const Vec3 perp = orthogonal_unit(theta);
    sw.records.resize(omegas.size());
    for (std::size_t j = 0; j < omegas.size(); ++j) {
        FarFieldRecord& rec = sw.records[j];
        rec.theta = theta;
        rec.x_hat = -theta;
        rec.omega = omegas[j];
        rec.order_tag = OrderTag::Born1;
        rec.uinf_p = CVec3::from(theta) * (-(cp * cp / (4.0 * M_PI)) * rp[j]);
        rec.uinf_s = CVec3::from(perp) * (-(cs * cs / (4.0 * M_PI)) * rs[j]);
    }
    return sw;
}

/// Monte-Carlo estimate of E[u1_inf(-theta,omega) . conj(u1_inf(-theta,omega+tau))]
/// over N realizations, with leave-one-out jackknife standard error.
struct McEstimate {
    cplx estimate{};
    double stderr = 0.0;
    int n = 0;
};

inline McEstimate expectation_correlation_mc(const RandomFieldSpec& base_spec,
                                             const Vec3& theta, double omega, double tau,
                                             const LameParameters& lame, int N,
                                             WaveKind kind, OrderTag order_tag) {
    require(order_tag == OrderTag::Born1,
            "expectation_correlation_mc: only the born-1 fast path is supported");
    require(N >= 2, "expectation_correlation_mc: need N >= 2");
    const double c = (kind == WaveKind::P) ? lame.cp() : lame.cs();
    const double amp = c * c / (4.0 * M_PI);

    std::vector<cplx> samples(N);
    RandomFieldSpec spec = base_spec;
    for (int r = 0; r < N; ++r) {
        spec.realization_index = base_spec.realization_index + std::uint32_t(r);
        const PotentialRealization rho = sample_potential(spec);
        const SupportNodes nodes = collect_support(rho);
        cplx v1{}, v2{};
        for (std::size_t p = 0; p < nodes.coords.size(); ++p) {
            const double t = theta.dot(nodes.coords[p]);
            v1 += nodes.values[p] * std::exp(I * 2.0 * c * omega * t);
            v2 += nodes.values[p] * std::exp(I * 2.0 * c * (omega + tau) * t);
        }
        v1 *= nodes.h3 * -amp;
        v2 *= nodes.h3 * -amp;
        samples[r] = v1 * std::conj(v2);
    }
    cplx mean = 0.0;
    for (const auto& s : samples) mean += s;
    mean /= double(N);

    // jackknife over leave-one-out means
    cplx jbar = 0.0;
    std::vector<cplx> loo(N);
    for (int r = 0; r < N; ++r) {
        loo[r] = (double(N) * mean - samples[r]) / double(N - 1);
        jbar += loo[r];
    }
    jbar /= double(N);
    double var = 0.0;
    for (int r = 0; r < N; ++r) var += std::norm(loo[r] - jbar);
    var *= double(N - 1) / double(N);
    return {mean, std::sqrt(var), N};
}

// ---------------------------------------------------------------------------
// Negligibility diagnostics
// ---------------------------------------------------------------------------

/// A_j(Q) = (1/Q) int_Q^{2Q} omega^m |u_j_inf|^2 domega for one tagged sweep.
inline double band_energy(const FrequencySweep& sweep, double m, WaveKind kind) {
    const cplx v = correlation_estimate(sweep, 0.0, m, kind);
    return v.real();
}

struct NegligibilityBand {
    double Q = 0.0;
    double A1 = 0.0, A2 = 0.0, Atail = 0.0;
};

struct NegligibilityReport {
    std::vector<NegligibilityBand> bands;  // ordered by Q
    bool a2_ratio_decreasing = false;
    bool tail_ratio_decreasing = false;
};

inline NegligibilityReport negligibility_diagnostics(
    const std::vector<std::array<FrequencySweep, 3>>& band_sweeps, double m, WaveKind kind) {
    require(band_sweeps.size() >= 2, "negligibility_diagnostics: need >= 2 bands");
    NegligibilityReport rep;
    for (const auto& trio : band_sweeps) {
        require(trio[0].order_tag == OrderTag::Born1 && trio[1].order_tag == OrderTag::Born2 &&
                    trio[2].order_tag == OrderTag::BornTail,
                "negligibility_diagnostics: sweeps must carry tags born-1, born-2, born-tail");
        NegligibilityBand band;
        band.Q = trio[0].omegas.front();
        band.A1 = band_energy(trio[0], m, kind);
        band.A2 = band_energy(trio[1], m, kind);
        band.Atail = band_energy(trio[2], m, kind);
        rep.bands.push_back(band);
    }
    std::sort(rep.bands.begin(), rep.bands.end(),
              [](const auto& a, const auto& b) { return a.Q < b.Q; });
    rep.a2_ratio_decreasing = true;
    rep.tail_ratio_decreasing = true;
    for (std::size_t i = 1; i < rep.bands.size(); ++i) {
        const auto& a = rep.bands[i - 1];
        const auto& b = rep.bands[i];
        if (!(b.A2 / b.A1 < a.A2 / a.A1)) rep.a2_ratio_decreasing = false;
        if (!(b.Atail / b.A1 < a.Atail / a.A1)) rep.tail_ratio_decreasing = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Recovery of phi_hat samples and reconstruction of the strength
// ---------------------------------------------------------------------------

/// phi_hat samples on polar rays xi = r_j theta_d (hemisphere directions;
/// the opposite hemisphere is implied by phi_hat(-xi) = conj(phi_hat(xi))).
struct StrengthEstimate {
    WaveKind kind = WaveKind::P;
    double m = 3.0;
    double wave_slowness = 0.0;  // c used in xi = 2 c tau theta
    std::vector<Vec3> directions;
    std::vector<double> radii;                // r_j = 2 c tau_j, shared across rays
    std::vector<std::vector<cplx>> samples;   // [direction][radial]
};

inline StrengthEstimate recover_phi_hat(const std::vector<CorrelationCurve>& curves,
                                        const LameParameters& lame, double m) {
    require(!curves.empty(), "recover_phi_hat: no curves");
    const auto consts = inversion_constants(m, lame);
    StrengthEstimate est;
    est.kind = curves.front().kind;
    est.m = m;
    est.wave_slowness = (est.kind == WaveKind::P) ? lame.cp() : lame.cs();
    const double C = (est.kind == WaveKind::P) ? consts.C_p : consts.C_s;
    for (const auto& curve : curves) {
        require(curve.kind == est.kind, "recover_phi_hat: mixed polarization kinds");
        require(curve.m == m, "recover_phi_hat: curve weight m mismatch");
        require(curve.taus.size() == curve.values.size(), "recover_phi_hat: curve size mismatch");
        std::vector<double> radii(curve.taus.size());
        for (std::size_t j = 0; j < curve.taus.size(); ++j)
            radii[j] = 2.0 * est.wave_slowness * curve.taus[j];
        if (est.radii.empty())
            est.radii = radii;
        else
            require(radii == est.radii, "recover_phi_hat: tau grids differ between rays");
        est.directions.push_back(curve.theta);
        std::vector<cplx> vals(curve.values.size());
        for (std::size_t j = 0; j < curve.values.size(); ++j) vals[j] = curve.values[j] / C;
        est.samples.push_back(std::move(vals));
    }
    return est;
}

struct ReconstructionResult {
    ScalarField field;          // reconstructed phi (may carry negative values)
    double imag_ratio = 0.0;    // max |imag| / max |real| before discarding
    double min_value = 0.0;     // most negative reconstructed value
    std::size_t negative_nodes = 0;
};

/**
 * phi(x) ~ (2pi)^-3 sum_k phi_hat(xi_k) e^{i xi_k.x} w_k over the polar grid:
 * radial trapezoid weights times r^2, equal-area direction weights 4pi/(2 D),
 * hemisphere rays mirrored through phi_hat(-xi) = conj(phi_hat(xi)). The
 * imaginary residue is verified small, then discarded; negative values are
 * reported, never clipped.
 */
inline ReconstructionResult reconstruct_strength(const StrengthEstimate& est,
                                                 const Grid3& target_grid) {
    require(est.directions.size() >= 16, "reconstruct_strength: need >= 16 hemisphere rays");
    require(est.radii.size() >= 2, "reconstruct_strength: need >= 2 radial nodes");
    const std::size_t D = est.directions.size();
    const std::size_t J = est.radii.size();
    const double dr = est.radii[1] - est.radii[0];
    std::vector<double> wr(J, dr);
    wr.front() *= 0.5;
    wr.back() *= 0.5;
    const double wdir = 4.0 * M_PI / double(2 * D);

    ReconstructionResult res;
    res.field = ScalarField(target_grid);
    const int n = target_grid.n;
    double max_re = 0.0, max_im = 0.0;

    std::vector<double> scale(J);
    for (std::size_t j = 0; j < J; ++j)
        scale[j] = wr[j] * est.radii[j] * est.radii[j] * wdir / std::pow(2.0 * M_PI, 3);

    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            for (int k = 0; k < n; ++k, ++idx) {
                const Vec3 x = target_grid.coord(i, jj, k);
                cplx acc = 0.0;
                for (std::size_t d = 0; d < D; ++d) {
                    const double t = est.directions[d].dot(x);
                    // +theta ray and its Hermitian mirror combine into 2 Re(.)
                    cplx ray = 0.0;
                    for (std::size_t j = 0; j < J; ++j)
                        ray += scale[j] * est.samples[d][j] * std::exp(I * est.radii[j] * t);
                    acc += ray + std::conj(ray);
                }
                res.field.values[idx] = acc.real();
                max_re = std::max(max_re, std::abs(acc.real()));
                max_im = std::max(max_im, std::abs(acc.imag()));
            }
    res.imag_ratio = (max_re > 0) ? max_im / max_re : 0.0;
    require(res.imag_ratio <= 0.10,
            "reconstruct_strength: imaginary residue exceeds 10% of the real part");
    res.min_value = 0.0;
    for (double v : res.field.values) {
        if (v < res.min_value) res.min_value = v;
        if (v < 0.0) ++res.negative_nodes;
    }
    return res;
}

}  // namespace ewave
