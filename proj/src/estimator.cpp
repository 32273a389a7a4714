#include "isac/estimator.hpp"

#include <algorithm>
#include <stdexcept>

#include "isac/fft.hpp"

namespace isac {

namespace {

DivGrid divide(const ComplexGrid& y, const ResourceGrid& v, const ReKind* only) {
    if (y.rows() != v.subcarriers() || y.cols() != v.symbols()) {
        throw std::invalid_argument("pointwise_divide: received and transmitted grids differ in shape");
    }
    DivGrid out{v.numerology(), ComplexGrid(y.rows(), y.cols()), std::vector<std::uint8_t>(y.rows() * y.cols(), 0)};
    for (std::size_t m = 0; m < y.rows(); ++m) {
        for (std::size_t n = 0; n < y.cols(); ++n) {
            const cplx tx = v.value(m, n);
            if (tx == cplx{}) continue;
            if (only && v.kind(m, n) != *only) continue;
            out.g(m, n) = y(m, n) / tx;
            out.support[m * y.cols() + n] = 1;
        }
    }
    return out;
}

std::vector<double> scaled(std::vector<double> v, double s) {
    for (auto& x : v) x *= s;
    return v;
}

Estimates estimate(const Profile& p, Axis expected, std::size_t k, std::size_t guard) {
    if (p.axis != expected) throw std::invalid_argument("estimate: profile has the wrong axis");
    Estimates e;
    const auto peaks = pick_peaks(p.values, k, guard);
    for (const auto& pk : peaks.peaks) {
        e.bins.push_back(pk.bin);
        e.magnitudes.push_back(pk.magnitude);
        e.values.push_back(p.physical(pk.bin));
    }
    if (peaks.incomplete) {
        e.warnings.push_back("requested " + std::to_string(k) + " peaks, found " +
                             std::to_string(peaks.peaks.size()));
    }
    return e;
}

}  // namespace

bool DivGrid::row_empty(std::size_t m) const {
    const auto first = support.begin() + static_cast<std::ptrdiff_t>(m * g.cols());
    return std::none_of(first, first + static_cast<std::ptrdiff_t>(g.cols()), [](std::uint8_t s) { return s != 0; });
}

DivGrid pointwise_divide(const ComplexGrid& y, const ResourceGrid& v) { return divide(y, v, nullptr); }

DivGrid pointwise_divide(const ComplexGrid& y, const ResourceGrid& v, ReKind only) { return divide(y, v, &only); }

const char* to_string(Axis axis) { return axis == Axis::Range ? "range" : "doppler"; }

void PairwiseAccumulator::add(std::vector<double> term) {
    if (term.size() != length_) throw std::invalid_argument("PairwiseAccumulator: length mismatch");
    ++count_;
    Partial cur{1, std::move(term)};
    while (!stack_.empty() && stack_.back().weight == cur.weight) {
        auto& top = stack_.back().values;
        for (std::size_t i = 0; i < length_; ++i) top[i] += cur.values[i];
        cur.weight *= 2;
        cur.values = std::move(top);
        stack_.pop_back();
    }
    stack_.push_back(std::move(cur));
}

std::vector<double> PairwiseAccumulator::sum() const {
    std::vector<double> out(length_, 0.0);
    if (stack_.empty()) return out;
    // Fold the smaller trailing partials first.
    out = stack_.back().values;
    for (auto it = stack_.rbegin() + 1; it != stack_.rend(); ++it) {
        for (std::size_t i = 0; i < length_; ++i) out[i] = it->values[i] + out[i];
    }
    return out;
}

Profile range_profile(const DivGrid& g, std::size_t m_a) {
    if (m_a == 0) throw std::invalid_argument("range_profile: m_a must be >= 1");
    const std::size_t M = g.rows();
    const std::size_t N = g.cols();
    const std::size_t L = m_a * M;
    Profile p{std::vector<double>(L, 0.0), Axis::Range, 0.0, m_a};
    if (M == 0 || N == 0) return p;
    p.bin_width = kSpeedOfLight / (static_cast<double>(m_a) * g.num.scs_hz() * static_cast<double>(M));

    Dft idft(L, Dft::Direction::Inverse);
    std::vector<cplx> col(M);
    std::vector<cplx> spec(L);
    PairwiseAccumulator acc(L);
    for (std::size_t n = 0; n < N; ++n) {
        bool any = false;
        for (std::size_t m = 0; m < M; ++m) {
            col[m] = g.g(m, n);
            any = any || g.supported(m, n);
        }
        if (!any) continue;
        idft.run(col, spec);
        std::vector<double> mag(L);
        for (std::size_t l = 0; l < L; ++l) mag[l] = std::abs(spec[l]);
        acc.add(std::move(mag));
    }
    p.values = scaled(acc.sum(), 1.0 / static_cast<double>(N));
    return p;
}

Profile doppler_profile(const DivGrid& g, std::size_t n_a) {
    if (n_a == 0) throw std::invalid_argument("doppler_profile: n_a must be >= 1");
    const std::size_t M = g.rows();
    const std::size_t N = g.cols();
    const std::size_t L = n_a * N;
    Profile p{std::vector<double>(L, 0.0), Axis::Doppler, 0.0, n_a};
    if (M == 0 || N == 0) return p;
    p.bin_width = 1.0 / (g.num.total_symbol_s() * static_cast<double>(L));

    Dft dft(L, Dft::Direction::Forward);
    std::vector<cplx> spec(L);
    PairwiseAccumulator acc(L);
    for (std::size_t m = 0; m < M; ++m) {
        if (g.row_empty(m)) continue;
        dft.run(g.g.row(m), spec);
        std::vector<double> mag(L);
        for (std::size_t d = 0; d < L; ++d) mag[d] = std::abs(spec[d]);
        acc.add(std::move(mag));
    }
    p.values = scaled(acc.sum(), 1.0 / static_cast<double>(M));
    return p;
}

Estimates estimate_range(const Profile& p, std::size_t k, std::size_t guard) {
    return estimate(p, Axis::Range, k, guard);
}

Estimates estimate_doppler(const Profile& p, std::size_t k, std::size_t guard) {
    return estimate(p, Axis::Doppler, k, guard);
}

}  // namespace isac
