#include "bowtie/verify.hpp"

#include <algorithm>
#include <string>

#include "bowtie/characterize.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/graph.hpp"

namespace bowtie {

namespace {

// Nonincreasing sequences with terms in [1, n-1], largest first.
bool descend(std::vector<int>& terms, std::size_t pos, int cap, std::int64_t sum,
             const std::function<bool(const DegreeSequence&)>& visit) {
    if (pos == terms.size()) {
        if (sum % 2 != 0) return true;
        DegreeSequence seq(terms);
        if (!is_graphic(seq)) return true;
        return visit(seq);
    }
    for (int d = cap; d >= 1; --d) {
        terms[pos] = d;
        if (!descend(terms, pos + 1, d, sum + d, visit)) return false;
    }
    return true;
}

void check_range(int n, const VerifyOptions& options) {
    const int hi = std::min(options.max_n, kMaxEnumerationVertices);
    if (n < 5 || n > hi)
        throw DomainError("n must lie in [5, " + std::to_string(hi) + "], got " + std::to_string(n));
}

} // namespace

void enumerate_graphic_sequences(int n, const std::function<bool(const DegreeSequence&)>& visit) {
    if (n < 2) return;
    std::vector<int> terms(static_cast<std::size_t>(n));
    descend(terms, 0, n - 1, 0, visit);
}

std::vector<DegreeSequence> enumerate_graphic_sequences(int n) {
    std::vector<DegreeSequence> out;
    enumerate_graphic_sequences(n, [&](const DegreeSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

VerificationSummary verify_characterization(int n, const VerifyOptions& options) {
    check_range(n, options);
    VerificationSummary summary;
    summary.n = n;
    enumerate_graphic_sequences(n, [&](const DegreeSequence& seq) {
        ++summary.sequences_tested;
        const bool checker = check_potentially(seq).potentially;
        const bool oracle = oracle_has_bowtie_realization(seq);
        if (checker) ++summary.potentially_count;
        if (checker != oracle) summary.mismatches.push_back({seq, checker, oracle});
        return true;
    });
    return summary;
}

SigmaReport sigma_empirical(int n, const VerifyOptions& options) {
    check_range(n, options);

    const auto all = enumerate_graphic_sequences(n);
    std::int64_t max_rejected = -1;
    for (const auto& seq : all) {
        if (!check_potentially(seq).potentially) max_rejected = std::max(max_rejected, sigma(seq));
    }

    SigmaReport report;
    report.n = n;
    // every graphic sum is even, so the smallest even s above all rejected
    // sums is max_rejected + 2
    report.bound = max_rejected + 2;
    report.oracle_confirmed = true;
    bool have_witness = false;
    for (const auto& seq : all) {
        const auto s = sigma(seq);
        if (s != report.bound - 2 && s != report.bound) continue;
        const bool checker = check_potentially(seq).potentially;
        if (checker != oracle_has_bowtie_realization(seq)) report.oracle_confirmed = false;
        if (!checker && !have_witness && s == report.bound - 2) {
            report.witness = seq;
            have_witness = true;
        }
    }
    return report;
}

} // namespace bowtie
