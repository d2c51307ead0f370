#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bowtie/sequence.hpp"

namespace bowtie {

/// Which condition of the characterization rejected a sequence.
enum class Failure {
    None,
    NotGraphic,
    TooShort, // n < 5
    Cond1,    // d_1 < 4
    Cond2,    // d_5 < 2
    Cond3,    // ((n-2)^2, 2^(n-2)), n >= 6
    Cond4,    // (n-k, k+i, 2^i, 1^(n-i-2))
    Cond5,    // (4, 2^5)
    Cond6,    // (4, 2^6)
};

struct Cond4Match {
    int k = 0;
    int i = 0;
    friend bool operator==(const Cond4Match&, const Cond4Match&) = default;
};

struct CheckReport {
    bool graphic = false;
    bool potentially = false;
    Failure failure = Failure::None;
    std::optional<Cond4Match> cond4; // set iff failure == Cond4
};

/// Short stable name, e.g. "condition4" or "not-graphic".
std::string failure_name(Failure failure);

/// True iff n >= 6 and seq == ((n-2)^2, 2^(n-2)).
bool matches_cond3(const DegreeSequence& seq);

/// The lexicographically first (k, i) with seq == (n-k, k+i, 2^i, 1^(n-i-2)),
/// k in 1..floor((n-1)/2)-1, i in 3..n-2k.
std::optional<Cond4Match> matches_cond4(const DegreeSequence& seq);

/// Decides whether a sequence is potentially (K5 - C4)-graphic. Conditions are
/// tested in the order graphic, length, 1, 2, 3, 4, 5, 6 and the first failure
/// is reported.
CheckReport check_potentially(const DegreeSequence& seq);

/// 4n - 4; throws DomainError for n < 5.
std::int64_t sigma_closed_form(int n);

/// ((n-1)^2, 2^(n-2)): graphic, sum 4n - 6, never potentially. n >= 5.
DegreeSequence sigma_witness(int n);

} // namespace bowtie
