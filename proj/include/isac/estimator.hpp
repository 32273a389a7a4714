#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isac/complex_grid.hpp"
#include "isac/grid.hpp"
#include "isac/numerology.hpp"
#include "isac/peaks.hpp"

namespace isac {

/// Received symbols divided by transmitted symbols on the support of v.
struct DivGrid {
    Numerology num;
    ComplexGrid g;
    std::vector<std::uint8_t> support;

    std::size_t rows() const { return g.rows(); }
    std::size_t cols() const { return g.cols(); }
    bool supported(std::size_t m, std::size_t n) const { return support[m * g.cols() + n] != 0; }
    bool row_empty(std::size_t m) const;
};

/// g = y / v where v != 0, else 0.
DivGrid pointwise_divide(const ComplexGrid& y, const ResourceGrid& v);
/// As above, restricted to REs of one kind (e.g. the PRS or DMRS part of a mixed grid).
DivGrid pointwise_divide(const ComplexGrid& y, const ResourceGrid& v, ReKind only);

enum class Axis { Range, Doppler };

const char* to_string(Axis axis);

/// Averaged periodogram slice with its bin -> metres/Hz mapping.
struct Profile {
    std::vector<double> values;
    Axis axis = Axis::Range;
    /// Physical value of bin b is b * bin_width.
    double bin_width = 0.0;
    std::size_t oversample = 1;

    double physical(std::size_t bin) const { return static_cast<double>(bin) * bin_width; }
};

/// Column-wise (m_a * M)-point IDFT magnitudes averaged over the N columns.
Profile range_profile(const DivGrid& g, std::size_t m_a = 1);

/// Row-wise (n_a * N)-point DFT magnitudes averaged over the M rows.
Profile doppler_profile(const DivGrid& g, std::size_t n_a = 1);

struct Estimates {
    std::vector<double> values;
    std::vector<std::size_t> bins;
    std::vector<double> magnitudes;
    std::vector<std::string> warnings;
};

/// Top-k range peaks mapped through R = l c / (m_a scs M).
Estimates estimate_range(const Profile& p, std::size_t k, std::size_t guard = 1);

/// Top-k Doppler peaks mapped through f = d / (T_0 N n_a).
Estimates estimate_doppler(const Profile& p, std::size_t k, std::size_t guard = 1);

/// Streaming element-wise pairwise summation of equal-length vectors.
///
/// Partial sums are merged like a binary counter, so the result matches a
/// balanced reduction tree over the insertion order with O(log n) storage.
class PairwiseAccumulator {
public:
    explicit PairwiseAccumulator(std::size_t length) : length_(length) {}

    void add(std::vector<double> term);
    /// Sum of everything added so far (zeros if nothing was added).
    std::vector<double> sum() const;
    std::size_t count() const { return count_; }

private:
    struct Partial {
        std::size_t weight;
        std::vector<double> values;
    };
    std::size_t length_;
    std::size_t count_ = 0;
    std::vector<Partial> stack_;
};

}  // namespace isac
