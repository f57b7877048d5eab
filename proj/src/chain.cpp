#include "qcc/chain.hpp"

#include <cmath>
#include <limits>

namespace qcc {

ModeSpectrum mode_eigenvalues(double omega, double coupling, int n) {
    if (n < 1)
        throw std::invalid_argument("mode_eigenvalues: n must be >= 1");
    if (omega < 0 || coupling < 0)
        throw std::invalid_argument("mode_eigenvalues: omega and coupling must be >= 0");

    constexpr double two_pi = 6.283185307179586476925286766559;
    ModeSpectrum spectrum;
    spectrum.lambdas.resize(static_cast<size_t>(n));
    const double w2 = omega * omega;
    for (int j = 1; j <= n; ++j) {
        // fold to the shorter arc so lambda_j == lambda_{N-j} bit-exactly
        const int jf = std::min(j, n - j);
        const double c = std::cos(two_pi * static_cast<double>(jf) / static_cast<double>(n));
        spectrum.lambdas[static_cast<size_t>(j) - 1] = w2 + 2.0 * coupling * (1.0 - c);
    }
    return spectrum;
}

QuenchSchedule QuenchSchedule::make(ChainSpec spec, std::vector<QuenchSegment> segments) {
    if (spec.n_oscillators < 1)
        throw std::invalid_argument("QuenchSchedule: n_oscillators must be >= 1");
    if (spec.omega0 < 0 || spec.coupling0 < 0)
        throw std::invalid_argument("QuenchSchedule: omega0 and coupling0 must be >= 0");
    if (spec.omega0 == 0 && spec.coupling0 == 0)
        throw std::invalid_argument("QuenchSchedule: omega0 and coupling0 cannot both be zero");
    if (spec.omega0 * spec.omega0 <= lambda_epsilon)
        throw std::invalid_argument(
            "QuenchSchedule: pre-quench zero mode lambda_N = omega0^2 must be positive");
    if (segments.empty())
        throw std::invalid_argument("QuenchSchedule: at least one segment required");

    QuenchSchedule schedule;
    schedule.spec = spec;
    schedule.boundary_times.push_back(0.0);
    double t = 0.0;
    for (size_t i = 0; i < segments.size(); ++i) {
        const QuenchSegment& seg = segments[i];
        if (seg.omega < 0 || seg.coupling < 0)
            throw std::invalid_argument("QuenchSchedule: segment omega and coupling must be >= 0");
        if (seg.duration.has_value()) {
            if (!(*seg.duration > 0))
                throw std::invalid_argument("QuenchSchedule: segment duration must be positive");
            t += *seg.duration;
            schedule.boundary_times.push_back(t);
        } else if (i + 1 != segments.size()) {
            throw std::invalid_argument("QuenchSchedule: only the last segment may be open-ended");
        }
    }
    schedule.segments = std::move(segments);
    return schedule;
}

double QuenchSchedule::end_time() const {
    if (open_ended())
        return std::numeric_limits<double>::infinity();
    return boundary_times.back();
}

SegmentLocation segment_at(const QuenchSchedule& schedule, double t) {
    if (t < 0)
        throw std::out_of_range("segment_at: t must be >= 0");
    if (t >= schedule.end_time())
        throw std::out_of_range("segment_at: t beyond the end of a finite schedule");

    // boundary instants belong to the later segment
    const auto& bt = schedule.boundary_times;
    int i = static_cast<int>(schedule.segments.size());
    for (size_t k = 1; k < bt.size(); ++k) {
        if (t < bt[k]) {
            i = static_cast<int>(k);
            break;
        }
    }
    SegmentLocation loc;
    loc.index = i;
    loc.segment = schedule.segments[static_cast<size_t>(i) - 1];
    loc.local_time = t - bt[static_cast<size_t>(i) - 1];
    return loc;
}

bool is_critical(const QuenchSegment& segment) {
    return segment.omega * segment.omega <= lambda_epsilon;
}

}
