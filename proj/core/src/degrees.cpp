#include "subcrit/degrees.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "subcrit/io.hpp"

namespace subcrit {

DegreeSequence::DegreeSequence(std::vector<std::uint32_t> degrees)
    : degrees_(std::move(degrees)) {
    if (degrees_.empty()) {
        throw std::invalid_argument("degree sequence must have at least one vertex");
    }
    for (const std::uint32_t d : degrees_) {
        sum_ += d;
        sum_dd1_ += static_cast<std::uint64_t>(d) * (d > 0 ? d - 1u : 0u);
        max_ = std::max(max_, d);
    }
}

double mu(const DegreeSequence& seq) {
    return static_cast<double>(seq.degree_sum()) / static_cast<double>(seq.size());
}

double nu(const DegreeSequence& seq) {
    if (seq.degree_sum() == 0) {
        throw std::invalid_argument("nu is undefined: mean degree is zero");
    }
    // nu = sum d(d-1) / (n mu) and n mu = sum d, both exact integers.
    return static_cast<double>(seq.sum_dd1_) / static_cast<double>(seq.degree_sum());
}

std::vector<std::uint32_t> top_vertices(const DegreeSequence& seq, std::uint32_t j) {
    if (j > seq.size()) {
        throw std::invalid_argument("top_vertices: j exceeds the vertex count");
    }
    const auto& d = seq.degrees();
    std::vector<std::uint32_t> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::partial_sort(idx.begin(), idx.begin() + j, idx.end(),
                      [&d](std::uint32_t a, std::uint32_t b) {
                          if (d[a] != d[b]) return d[a] > d[b];
                          return a < b;
                      });
    idx.resize(j);
    return idx;
}

std::vector<std::uint32_t> top_degrees(const DegreeSequence& seq, std::uint32_t j) {
    if (j > seq.size()) {
        throw std::invalid_argument("top_degrees: j exceeds the vertex count");
    }
    std::vector<std::uint32_t> out = top_vertices(seq, j);
    for (auto& v : out) v = seq[v];
    return out;
}

double tail_constant(const DegreeSequence& seq, double gamma) {
    if (!(gamma > 1.0)) {
        throw std::invalid_argument("tail_constant requires gamma > 1");
    }
    // k^(gamma-1) grows in k while |{i: d_i >= k}| is constant between
    // consecutive realized degree values, so the sup sits at realized values.
    std::vector<std::uint32_t> sorted = seq.degrees();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double n = static_cast<double>(seq.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] == 0) break;
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        const double term =
            std::pow(static_cast<double>(sorted[i]), gamma - 1.0) *
            static_cast<double>(i + 1) / n;
        sup = std::max(sup, term);
    }
    return sup;
}

SizeBiasedPmf size_biased(const DegreeSequence& seq) {
    if (seq.degree_sum() == 0) {
        throw std::invalid_argument("size_biased is undefined: mean degree is zero");
    }
    std::map<std::uint32_t, std::uint64_t> counts;
    for (const std::uint32_t d : seq.degrees()) {
        if (d > 0) ++counts[d];
    }
    SizeBiasedPmf out;
    const double total = static_cast<double>(seq.degree_sum());
    for (const auto& [k, nk] : counts) {
        const double pk = static_cast<double>(static_cast<std::uint64_t>(k) * nk) / total;
        out.pmf.emplace(k, pk);
        out.nu += (k - 1.0) * pk;
    }
    return out;
}

double zeta_value(double gamma) {
    if (!(gamma > 1.0)) {
        throw std::invalid_argument("zeta_value requires gamma > 1");
    }
    constexpr double kTailBound = 1e-14;
    constexpr std::uint64_t kMaxTerms = 20'000'000;
    // Kahan compensation: plain forward summation of up to 2e7 decreasing
    // terms would drift past the promised 1e-14.
    double sum = 0.0, comp = 0.0;
    std::uint64_t k = 0;
    while (true) {
        ++k;
        const double term = std::pow(static_cast<double>(k), -gamma) - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
        const double bound = std::pow(static_cast<double>(k), 1.0 - gamma) / (gamma - 1.0);
        if (bound < kTailBound || k >= kMaxTerms) break;
    }
    // Midpoint-rule remainder for everything past k.
    sum += std::pow(static_cast<double>(k) + 0.5, 1.0 - gamma) / (gamma - 1.0);
    return sum;
}

DegreeDistribution DegreeDistribution::zeta(double gamma) {
    if (!(gamma > 2.0)) {
        throw std::invalid_argument("zeta degree family requires gamma > 2 (finite mean)");
    }
    DegreeDistribution d;
    d.is_zeta_ = true;
    d.gamma_ = gamma;

    // Table depth: tail ~ k^(1-gamma)/((gamma-1) zeta) down to the 53-bit
    // uniform resolution, capped; below the table the analytic tail takes over.
    const double zeta_est = zeta_value(gamma);
    double need = std::pow((gamma - 1.0) * zeta_est * 0x1.0p53, 1.0 / (gamma - 1.0));
    std::size_t kmax = 64;
    if (need > 64.0) {
        kmax = (need > 4e6) ? static_cast<std::size_t>(4e6)
                            : static_cast<std::size_t>(std::ceil(need));
    }

    // Backward summation keeps the deep tail accurate.
    std::vector<double> suffix(kmax + 1, 0.0);
    double run = std::pow(static_cast<double>(kmax) + 0.5, 1.0 - gamma) / (gamma - 1.0);
    for (std::size_t k = kmax; k >= 1; --k) {
        run += std::pow(static_cast<double>(k), -gamma);
        suffix[k] = run;
    }
    d.zeta_norm_ = suffix[1];
    d.tail_.assign(kmax + 1, 0.0);
    d.tail_[0] = 1.0;
    for (std::size_t k = 1; k <= kmax; ++k) d.tail_[k] = suffix[k] / d.zeta_norm_;
    d.cont_a_ = d.tail_[kmax] * std::pow(static_cast<double>(kmax), gamma - 1.0);

    d.tail_constant_ = 1.0 / ((gamma - 1.0) * d.zeta_norm_);
    d.mean_ = zeta_value(gamma - 1.0) / d.zeta_norm_;
    d.forced_parity_ = 0;  // support holds both 1 and 2
    return d;
}

DegreeDistribution DegreeDistribution::from_pmf(
    const std::map<std::uint32_t, double>& pmf) {
    if (pmf.empty()) {
        throw std::invalid_argument("pmf must have at least one entry");
    }
    double total = 0.0;
    for (const auto& [k, p] : pmf) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("pmf probabilities must be finite and nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("pmf probabilities must sum to 1 within 1e-12");
    }
    DegreeDistribution d;
    d.pmf_ = pmf;
    for (auto& [k, p] : d.pmf_) p /= total;
    d.build_finite_tail();
    return d;
}

void DegreeDistribution::build_finite_tail() {
    bool any_odd = false, any_even = false;
    std::uint32_t kmax = 0;
    mean_ = 0.0;
    for (const auto& [k, p] : pmf_) {
        if (p > 0.0) {
            kmax = std::max(kmax, k);
            (k % 2 ? any_odd : any_even) = true;
            mean_ += static_cast<double>(k) * p;
        }
    }
    forced_parity_ = (any_odd && any_even) ? 0 : (any_odd ? 1 : 2);

    // Backward suffix sums; gaps between support points carry the suffix of
    // the next support point above them.
    tail_.assign(static_cast<std::size_t>(kmax) + 2, 0.0);
    double run = 0.0;
    std::uint32_t next_k = kmax + 1;
    for (auto it = pmf_.rbegin(); it != pmf_.rend(); ++it) {
        const std::uint32_t k = it->first;
        if (k > kmax) continue;  // zero-probability entries above the support
        for (std::uint32_t j = next_k; j-- > k + 1;) tail_[j] = run;
        run += it->second;
        tail_[k] = run;
        next_k = k;
    }
    for (std::uint32_t j = next_k; j-- > 1;) tail_[j] = run;
    tail_[0] = 1.0;
    cont_a_ = 0.0;
}

double DegreeDistribution::pmf(std::uint32_t k) const {
    if (is_zeta_) {
        if (k == 0) return 0.0;
        return std::pow(static_cast<double>(k), -*gamma_) / zeta_norm_;
    }
    const auto it = pmf_.find(k);
    return it == pmf_.end() ? 0.0 : it->second;
}

std::uint32_t DegreeDistribution::sample(Rng& rng) const {
    double v = uniform01(rng);
    // smallest k with P(D >= k+1) <= v, i.e. the last index whose tail exceeds v
    const auto it = std::partition_point(tail_.begin(), tail_.end(),
                                         [v](double t) { return t > v; });
    if (it != tail_.end()) {
        if (it == tail_.begin()) return 0;  // unreachable: tail_[0] = 1 > v
        return static_cast<std::uint32_t>((it - tail_.begin()) - 1);
    }
    // Past the table: invert T(x) = cont_a_ x^(1-gamma). Finite pmfs end in an
    // exact 0 entry and never get here.
    if (!is_zeta_) return static_cast<std::uint32_t>(tail_.size() - 2);
    if (v <= 0.0) v = 0x1.0p-54;
    const double gamma = *gamma_;
    const double x = std::pow(cont_a_ / v, 1.0 / (gamma - 1.0));
    double k = std::ceil(x) - 1.0;
    k = std::max(k, static_cast<double>(tail_.size() - 1));
    constexpr double kMaxDegree = 4294967295.0;
    return static_cast<std::uint32_t>(std::min(k, kMaxDegree));
}

std::string DegreeDistribution::spec() const {
    if (is_zeta_) return "zeta:gamma=" + format_double(*gamma_);
    std::string out = "pmf:";
    bool first = true;
    for (const auto& [k, p] : pmf_) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(k) + "=" + format_double(p);
    }
    return out;
}

namespace {

double parse_double_or_throw(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + ": '" + text + "'");
    }
}

}  // namespace

DegreeDistribution parse_distribution_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "zeta") {
        if (rest.rfind("gamma=", 0) != 0) {
            throw std::invalid_argument("zeta spec must be 'zeta:gamma=<value>', got '" +
                                        spec + "'");
        }
        return DegreeDistribution::zeta(parse_double_or_throw(rest.substr(6), "gamma"));
    }
    if (head == "pmf") {
        std::map<std::uint32_t, double> pmf;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("pmf entry must be k=p, got '" + item + "'");
            }
            const std::string kstr = item.substr(0, eq);
            std::uint32_t k = 0;
            const auto res = std::from_chars(kstr.data(), kstr.data() + kstr.size(), k);
            if (res.ec != std::errc() || res.ptr != kstr.data() + kstr.size()) {
                throw std::invalid_argument("invalid pmf degree '" + kstr + "'");
            }
            pmf[k] = parse_double_or_throw(item.substr(eq + 1), "pmf probability");
        }
        if (pmf.empty()) throw std::invalid_argument("pmf spec has no entries");
        return DegreeDistribution::from_pmf(pmf);
    }
    throw std::invalid_argument("unknown distribution spec '" + spec +
                                "' (expected zeta:... or pmf:...)");
}

DegreeSequence sample_iid_sequence(const DegreeDistribution& dist, std::size_t n,
                                   Parity parity, Rng& rng) {
    if (n == 0) throw std::invalid_argument("sample_iid_sequence: n must be >= 1");
    constexpr std::uint64_t kMaxAttempts = 1'000'000;
    std::vector<std::uint32_t> draws(n);
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            draws[i] = dist.sample(rng);
            sum += draws[i];
        }
        if (parity == Parity::allow_any || sum % 2 == 0) {
            return DegreeSequence(std::move(draws));
        }
        // An odd sum with single-parity support can never become even.
        if (dist.forced_parity() != 0) {
            throw std::runtime_error(
                "conditioning on an even degree sum is impossible for this "
                "distribution/n combination");
        }
    }
    throw std::runtime_error("even-sum conditioning failed after 1e6 attempts");
}

DegreeSequence load_sequence(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::vector<std::uint32_t> degrees;
    degrees.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& text = lines[i];
        const std::string where = "'" + path + "' line " + std::to_string(i + 1);
        if (text.empty()) {
            throw std::runtime_error("parse error at " + where + ": empty line");
        }
        if (text[0] == '-') {
            throw std::runtime_error("negative degree at " + where + ": '" + text + "'");
        }
        std::uint64_t value = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            throw std::runtime_error("parse error at " + where + ": '" + text + "'");
        }
        if (value > 0xffffffffull) {
            throw std::runtime_error("degree too large at " + where + ": '" + text + "'");
        }
        degrees.push_back(static_cast<std::uint32_t>(value));
    }
    return DegreeSequence(std::move(degrees));
}

void save_sequence(const DegreeSequence& seq, const std::string& path) {
    std::string out;
    out.reserve(seq.size() * 4);
    for (const std::uint32_t d : seq.degrees()) {
        out += std::to_string(d);
        out += '\n';
    }
    atomic_write_text(path, out);
}

}  // namespace subcrit
