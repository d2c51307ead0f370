#include "bowtie/characterize.hpp"

#include <algorithm>

#include "bowtie/errors.hpp"

namespace bowtie {

namespace {

bool equals_pattern(const DegreeSequence& seq, std::initializer_list<std::pair<int, int>> runs) {
    std::size_t pos = 0;
    for (const auto& [value, count] : runs) {
        for (int c = 0; c < count; ++c, ++pos) {
            if (pos >= seq.size() || seq[pos] != value) return false;
        }
    }
    return pos == seq.size();
}

} // namespace

std::string failure_name(Failure failure) {
    switch (failure) {
    case Failure::None: return "none";
    case Failure::NotGraphic: return "not-graphic";
    case Failure::TooShort: return "too-short";
    case Failure::Cond1: return "condition1";
    case Failure::Cond2: return "condition2";
    case Failure::Cond3: return "condition3";
    case Failure::Cond4: return "condition4";
    case Failure::Cond5: return "condition5";
    case Failure::Cond6: return "condition6";
    }
    return "unknown";
}

bool matches_cond3(const DegreeSequence& seq) {
    const int n = static_cast<int>(seq.size());
    if (n < 6) return false;
    return equals_pattern(seq, {{n - 2, 2}, {2, n - 2}});
}

std::optional<Cond4Match> matches_cond4(const DegreeSequence& seq) {
    const int n = static_cast<int>(seq.size());
    const int k_max = (n - 1) / 2 - 1;
    for (int k = 1; k <= k_max; ++k) {
        for (int i = 3; i <= n - 2 * k; ++i) {
            // (n-k, k+i, 2^i, 1^(n-i-2))
            if (equals_pattern(seq, {{n - k, 1}, {k + i, 1}, {2, i}, {1, n - i - 2}})) return Cond4Match{k, i};
        }
    }
    return std::nullopt;
}

CheckReport check_potentially(const DegreeSequence& seq) {
    CheckReport report;
    report.graphic = is_graphic(seq);

    const auto fail = [&](Failure f) {
        report.failure = f;
        return report;
    };

    if (!report.graphic) return fail(Failure::NotGraphic);
    const auto n = seq.size();
    if (n < 5) return fail(Failure::TooShort);
    if (seq[0] < 4) return fail(Failure::Cond1);
    if (seq[4] < 2) return fail(Failure::Cond2);
    if (matches_cond3(seq)) return fail(Failure::Cond3);
    if (auto m = matches_cond4(seq)) {
        report.cond4 = m;
        return fail(Failure::Cond4);
    }
    if (n == 6 && equals_pattern(seq, {{4, 1}, {2, 5}})) return fail(Failure::Cond5);
    if (n == 7 && equals_pattern(seq, {{4, 1}, {2, 6}})) return fail(Failure::Cond6);

    report.potentially = true;
    return report;
}

std::int64_t sigma_closed_form(int n) {
    if (n < 5) throw DomainError("sigma(K5 - C4, n) is defined for n >= 5, got n = " + std::to_string(n));
    return 4 * static_cast<std::int64_t>(n) - 4;
}

DegreeSequence sigma_witness(int n) {
    if (n < 5) throw DomainError("witness is defined for n >= 5, got n = " + std::to_string(n));
    std::vector<int> terms(static_cast<std::size_t>(n), 2);
    terms[0] = terms[1] = n - 1;
    return DegreeSequence(std::move(terms));
}

} // namespace bowtie
