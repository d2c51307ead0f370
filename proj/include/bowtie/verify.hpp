#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bowtie/sequence.hpp"

namespace bowtie {

/// Visits every graphic sequence of n positive terms (each <= n - 1) in
/// decreasing lexicographic order. The visitor returns false to stop.
void enumerate_graphic_sequences(int n, const std::function<bool(const DegreeSequence&)>& visit);

std::vector<DegreeSequence> enumerate_graphic_sequences(int n);

struct Mismatch {
    DegreeSequence sequence;
    bool checker = false;
    bool oracle = false;
};

struct VerificationSummary {
    int n = 0;
    std::size_t sequences_tested = 0;
    std::size_t potentially_count = 0; // per the checker
    std::vector<Mismatch> mismatches;
};

struct VerifyOptions {
    // Upper bound accepted for n. The oracle gets expensive quickly beyond 8.
    int max_n = 8;
};

/// Compares check_potentially with the enumeration oracle on every graphic
/// sequence of length n. Throws DomainError unless 5 <= n <= max_n (<= 10).
VerificationSummary verify_characterization(int n, const VerifyOptions& options = {});

struct SigmaReport {
    int n = 0;
    std::int64_t bound = 0;
    DegreeSequence witness;
    // Every sequence with sum bound - 2 or bound was also classified by the
    // oracle and agreed with the checker.
    bool oracle_confirmed = false;
};

/// Smallest even s such that every graphic length-n sequence with sum >= s is
/// accepted. The witness is the first rejected sequence (in enumeration order)
/// with sum s - 2. Throws DomainError unless 5 <= n <= max_n (<= 10).
SigmaReport sigma_empirical(int n, const VerifyOptions& options = {});

} // namespace bowtie
