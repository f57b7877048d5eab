#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcc {

// Eigenvalues at or below this threshold (units 1/time^2) are treated as
// exactly zero and routed to the massless (polynomial) auxiliary branch.
inline constexpr double lambda_epsilon = 1e-12;

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pre-quench chain: N oscillators on a ring with frequency omega0 and
// nearest-neighbour coupling coupling0.
struct ChainSpec {
    int n_oscillators = 1;
    double omega0 = 0.0;
    double coupling0 = 0.0;
};

// One piecewise-constant stretch of the protocol. A segment without a
// duration is open-ended and may only appear last.
struct QuenchSegment {
    double omega = 0.0;
    double coupling = 0.0;
    std::optional<double> duration;
};

struct ModeSpectrum {
    std::vector<double> lambdas;   // lambda_j, j = 1..N

    int size() const { return static_cast<int>(lambdas.size()); }
    double lambda(int j) const { return lambdas.at(static_cast<size_t>(j) - 1); }
};

// lambda_j = omega^2 + 2k [1 - cos(2 pi j / N)], j = 1..N.
// The cosine argument is folded to min(j, N-j) so the j <-> N-j degeneracy
// is exact in floating point and lambda_N == omega^2 exactly.
ModeSpectrum mode_eigenvalues(double omega, double coupling, int n);

struct QuenchSchedule {
    ChainSpec spec;
    std::vector<QuenchSegment> segments;
    // Cumulative boundary instants t_0 = 0 < t_1 < ...; the end of an
    // open-ended final segment is not listed.
    std::vector<double> boundary_times;

    static QuenchSchedule make(ChainSpec spec, std::vector<QuenchSegment> segments);

    int n_segments() const { return static_cast<int>(segments.size()); }
    bool open_ended() const { return !segments.back().duration.has_value(); }
    // One past the covered range; +inf when open-ended.
    double end_time() const;
    // Start instant t_{i-1} of segment i (1-based).
    double segment_start(int i) const { return boundary_times.at(static_cast<size_t>(i) - 1); }
};

struct SegmentLocation {
    int index = 1;          // 1-based segment index
    QuenchSegment segment;
    double local_time = 0;  // t - t_{index-1}, in [0, duration)
};

// Locates t within the schedule. Segment i covers [t_{i-1}, t_i); a boundary
// instant belongs to the later segment.
SegmentLocation segment_at(const QuenchSchedule& schedule, double t);

// True when the segment's zero mode lambda_N = omega^2 vanishes (is at or
// below lambda_epsilon).
bool is_critical(const QuenchSegment& segment);

}
