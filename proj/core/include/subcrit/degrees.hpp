#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subcrit/random.hpp"

namespace subcrit {

/// A finite degree sequence (d_1, ..., d_n) with cached sums, so the mean
/// degree and the offspring mean come out of exact integer accumulators.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<std::uint32_t> degrees);

    std::size_t size() const noexcept { return degrees_.size(); }
    const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
    std::uint32_t operator[](std::size_t i) const { return degrees_[i]; }

    std::uint64_t degree_sum() const noexcept { return sum_; }
    std::uint32_t max_degree() const noexcept { return max_; }
    /// Half-edges pair up only when the total degree is even.
    bool pairing_eligible() const noexcept { return sum_ % 2 == 0; }

private:
    std::vector<std::uint32_t> degrees_;
    std::uint64_t sum_ = 0;
    unsigned __int128 sum_dd1_ = 0;  // sum d_i (d_i - 1)
    std::uint32_t max_ = 0;

    friend double nu(const DegreeSequence&);
};

/// Mean degree, n >= 1.
double mu(const DegreeSequence& seq);

/// Offspring mean sum d(d-1) / sum d. Throws std::invalid_argument when the
/// mean degree is zero (undefined).
double nu(const DegreeSequence& seq);

/// The j largest degrees, descending. Ties keep the lower vertex index first.
std::vector<std::uint32_t> top_degrees(const DegreeSequence& seq, std::uint32_t j);

/// Vertex ids of the j largest degrees, same order/tie rule as top_degrees.
std::vector<std::uint32_t> top_vertices(const DegreeSequence& seq, std::uint32_t j);

/// sup over k in [1, max_degree] of k^(gamma-1) * |{i : d_i >= k}| / n.
/// The sup is attained at a realized degree value, so only those are scanned.
double tail_constant(const DegreeSequence& seq, double gamma);

/// Distribution of the degree at the far end of a uniformly random half-edge.
struct SizeBiasedPmf {
    std::map<std::uint32_t, double> pmf;  // k >= 1 only
    double nu = 0.0;                      // sum (k-1) p*_k
};

SizeBiasedPmf size_biased(const DegreeSequence& seq);

/// Riemann zeta for gamma > 1: direct summation until the integral tail bound
/// drops below 1e-14 (capped at 2e7 terms), plus the midpoint remainder.
double zeta_value(double gamma);

enum class Parity { require_even, allow_any };

/// Degree distribution: either an arbitrary finite pmf or the analytic zeta
/// family p_k = k^-gamma / zeta(gamma), k >= 1. Sampling inverts the
/// precomputed tail P(D >= k), which keeps deep-tail draws accurate.
class DegreeDistribution {
public:
    static DegreeDistribution zeta(double gamma);
    static DegreeDistribution from_pmf(const std::map<std::uint32_t, double>& pmf);

    double pmf(std::uint32_t k) const;
    double mean() const noexcept { return mean_; }
    std::optional<double> gamma() const noexcept { return gamma_; }
    /// a1 with P(D >= k) ~ a1 k^(1-gamma); set for the zeta family.
    std::optional<double> tail_constant() const noexcept { return tail_constant_; }

    std::uint32_t sample(Rng& rng) const;

    /// 0 = support holds both parities, 1 = all odd, 2 = all even.
    int forced_parity() const noexcept { return forced_parity_; }

    /// Round-trippable spec string ("zeta:gamma=4" / "pmf:0=0.5,2=0.5").
    std::string spec() const;

private:
    DegreeDistribution() = default;

    bool is_zeta_ = false;
    std::map<std::uint32_t, double> pmf_;  // finite form only
    std::optional<double> gamma_;
    std::optional<double> tail_constant_;
    double mean_ = 0.0;
    double zeta_norm_ = 0.0;  // backward-summed normalizer of the zeta form

    // tail_[k] = P(D >= k), non-increasing, tail_[0] = 1.
    std::vector<double> tail_;
    // Analytic continuation T(x) = cont_a_ * x^(1-gamma) past the table end.
    double cont_a_ = 0.0;

    // parity of the support: 0 = mixed, 1 = all odd, 2 = all even
    int forced_parity_ = 0;

    void build_finite_tail();
    friend DegreeDistribution parse_distribution_spec(const std::string&);
};

/// Parse "zeta:gamma=4.0" or "pmf:0=0.5,1=0.3,2=0.2".
DegreeDistribution parse_distribution_spec(const std::string& spec);

/// n i.i.d. draws; under require_even the whole sequence is redrawn until the
/// sum is even (exact conditioning). Throws std::runtime_error if conditioning
/// is impossible (all-odd support with odd n) or the 1e6-attempt cap is hit.
DegreeSequence sample_iid_sequence(const DegreeDistribution& dist, std::size_t n,
                                   Parity parity, Rng& rng);

/// File format: one nonnegative decimal integer per line.
DegreeSequence load_sequence(const std::string& path);
void save_sequence(const DegreeSequence& seq, const std::string& path);

}  // namespace subcrit
