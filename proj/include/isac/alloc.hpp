#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isac/refsig.hpp"

namespace isac::alloc {

/// Split of m_max PRBs and n_max slots between PDSCH (index 0) and K sensing
/// targets (indices 1..K).
struct Problem {
    std::size_t m_max = 2;
    std::size_t n_max = 2;
    std::size_t k = 1;
    double alpha0 = 1.0;
    /// Range and Doppler resolution weights, one per target.
    std::vector<double> gamma_range{1.0};
    std::vector<double> gamma_doppler{1.0};
    /// PDSCH bits per PRB-slot; only scales the reported throughput.
    double r0_bits = 1.0;

    void validate() const;
};

struct Solution {
    std::vector<std::size_t> m;
    std::vector<std::size_t> n;
    double f_value = 0.0;

    std::size_t comm_prbs() const { return m.front(); }
    std::size_t comm_slots() const { return n.front(); }
};

/// Candidate points above this are rejected by solve().
inline constexpr std::uint64_t kMaxCandidates = 100'000'000;

/// (168 - DMRS REs) * bits_per_symbol * code_rate.
double throughput_per_prb_slot(std::size_t dmrs_res_per_prb_slot, int bits_per_symbol, double code_rate);
double throughput_per_prb_slot(const DmrsConfig& dmrs, int bits_per_symbol, double code_rate);

/// F = alpha0 m0 n0 / (M_max N_max) - sum_k (gamma_range_k / m_k + gamma_doppler_k / n_k).
/// Throws std::invalid_argument when the allocation breaks a constraint.
double objective(const Problem& p, std::span<const std::size_t> m, std::span<const std::size_t> n);

/// Number of feasible (m, n) points: C(M_max-1, K) * C(N_max-1, K), saturating.
std::uint64_t candidate_count(const Problem& p);

/// Exact maximizer by exhaustive enumeration. Ties go to larger m0, then larger n0.
Solution solve(const Problem& p);

struct SurfacePoint {
    std::size_t m1;
    std::size_t n1;
    double f;
};

/// F over every (m1, n1) for a single-target problem, m1-major.
std::vector<SurfacePoint> objective_surface(const Problem& p);

}  // namespace isac::alloc
