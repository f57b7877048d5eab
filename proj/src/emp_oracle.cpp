#include "qcc/emp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcc {

namespace {

// One RK4 leg over [0, span] at constant per-mode lambda. b and v (= bdot)
// are updated in place; the mode loop is the hot path and stays branch-free
// so it vectorizes.
void rk4_leg(std::vector<double>& b, std::vector<double>& v, const std::vector<double>& lam,
             const std::vector<double>& lam0, double span, double step) {
    if (span <= 0)
        return;
    const auto n_steps = std::max<long>(1, static_cast<long>(std::ceil(span / step - 1e-9)));
    const double h = span / static_cast<double>(n_steps);
    const size_t n = b.size();
    for (long s = 0; s < n_steps; ++s) {
        for (size_t j = 0; j < n; ++j) {
            const double L = lam[j], L0 = lam0[j];
            const double b0 = b[j], v0 = v[j];

            const double k1b = v0;
            const double k1v = -L * b0 + L0 / (b0 * b0 * b0);
            const double b1 = b0 + 0.5 * h * k1b;
            const double v1 = v0 + 0.5 * h * k1v;

            const double k2b = v1;
            const double k2v = -L * b1 + L0 / (b1 * b1 * b1);
            const double b2 = b0 + 0.5 * h * k2b;
            const double v2 = v0 + 0.5 * h * k2v;

            const double k3b = v2;
            const double k3v = -L * b2 + L0 / (b2 * b2 * b2);
            const double b3 = b0 + h * k3b;
            const double v3 = v0 + h * k3v;

            const double k4b = v3;
            const double k4v = -L * b3 + L0 / (b3 * b3 * b3);

            b[j] = b0 + h / 6.0 * (k1b + 2.0 * (k2b + k3b) + k4b);
            v[j] = v0 + h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v);
        }
        for (size_t j = 0; j < n; ++j)
            if (!(b[j] > 0))
                throw InstabilityError("emp oracle: b reached zero; reduce the step size");
    }
}

std::vector<std::vector<AuxiliaryState>> integrate_modes(const QuenchSchedule& schedule,
                                                         const std::vector<int>& modes,
                                                         const std::vector<double>& times,
                                                         double step) {
    if (!(step > 0))
        throw std::invalid_argument("emp oracle: step must be > 0");
    for (size_t k = 0; k < times.size(); ++k) {
        if (times[k] < 0 || (k > 0 && times[k] < times[k - 1]))
            throw std::invalid_argument("emp oracle: record times must be ascending and >= 0");
    }
    if (!times.empty() && times.back() >= schedule.end_time() &&
        times.back() > schedule.boundary_times.back())
        throw std::out_of_range("emp oracle: record time beyond a finite schedule");

    const int n = schedule.spec.n_oscillators;
    const ModeSpectrum pre = mode_eigenvalues(schedule.spec.omega0, schedule.spec.coupling0, n);
    const size_t m = modes.size();
    std::vector<double> b(m, 1.0), v(m, 0.0), lam(m, 0.0), lam0(m);
    for (size_t j = 0; j < m; ++j)
        lam0[j] = pre.lambda(modes[j]);

    std::vector<std::vector<AuxiliaryState>> out;
    out.reserve(times.size());

    double t = 0.0;
    size_t k = 0;
    // record times at t = 0 before any stepping
    while (k < times.size() && times[k] <= 0.0) {
        std::vector<AuxiliaryState> row(m);
        for (size_t j = 0; j < m; ++j)
            row[j] = {b[j], v[j]};
        out.push_back(std::move(row));
        ++k;
    }

    const auto& bt = schedule.boundary_times;
    for (size_t seg = 0; seg < schedule.segments.size() && k < times.size(); ++seg) {
        const QuenchSegment& s = schedule.segments[seg];
        const ModeSpectrum sp = mode_eigenvalues(s.omega, s.coupling, n);
        for (size_t j = 0; j < m; ++j)
            lam[j] = sp.lambda(modes[j]);
        const double seg_end =
            s.duration ? bt[seg + 1] : std::numeric_limits<double>::infinity();

        // advance through record times inside this segment, then to its end
        while (k < times.size() && times[k] < seg_end) {
            rk4_leg(b, v, lam, lam0, times[k] - t, step);
            t = times[k];
            std::vector<AuxiliaryState> row(m);
            for (size_t j = 0; j < m; ++j)
                row[j] = {b[j], v[j]};
            out.push_back(std::move(row));
            ++k;
        }
        if (k < times.size()) {
            rk4_leg(b, v, lam, lam0, seg_end - t, step);
            t = seg_end;
        }
    }
    return out;
}

}

AuxiliaryState integrate_emp_oracle(const QuenchSchedule& schedule, int j, double t_end,
                                    double step) {
    if (t_end < 0)
        throw std::invalid_argument("integrate_emp_oracle: t_end must be >= 0");
    const auto states = integrate_modes(schedule, {j}, {t_end}, step);
    return states.at(0).at(0);
}

std::vector<std::vector<AuxiliaryState>> integrate_emp_oracle_grid(
    const QuenchSchedule& schedule, const std::vector<double>& times, double step) {
    std::vector<int> modes(static_cast<size_t>(schedule.spec.n_oscillators));
    for (size_t j = 0; j < modes.size(); ++j)
        modes[j] = static_cast<int>(j) + 1;
    return integrate_modes(schedule, modes, times, step);
}

}
