#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bowtie {

/// A nonincreasing sequence of positive degrees.
///
/// Terms are sorted on construction. Zero or negative terms are rejected;
/// terms larger than n - 1 are accepted here and rejected later by
/// is_graphic(). The empty sequence is a valid value (it is what laying off
/// (1,1) leaves behind) but parse_sequence() never produces it.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> terms);

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    int operator[](std::size_t i) const { return terms_[i]; }
    int front() const { return terms_.front(); }
    int back() const { return terms_.back(); }
    std::span<const int> terms() const noexcept { return terms_; }

    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
};

/// Result of laying off the last term d_n of a sequence.
struct LayoffTrace {
    DegreeSequence parent;
    int removed_degree = 0;
    // Indices into the parent with its last term removed; always [0, d_n).
    std::vector<std::size_t> decremented_positions;
    DegreeSequence child;
};

/// Parses the run-length grammar `item (',' item)*`, item := INT | INT '^' INT.
/// Whitespace around items is tolerated. Throws ParseError.
DegreeSequence parse_sequence(std::string_view text);

/// Canonical run-length form, e.g. (4,3,3,3,3) -> "4,3^4".
std::string format_sequence(const DegreeSequence& seq);

/// Sum of the terms.
std::int64_t sigma(const DegreeSequence& seq);

/// Removes d_n and decrements the first d_n remaining terms, then re-sorts and
/// drops zeros. Throws LayoffImpossible when d_n > n - 1 (or n < 2).
LayoffTrace lay_off(const DegreeSequence& seq);

/// Graphicality by repeated lay-off.
bool is_graphic(const DegreeSequence& seq);

} // namespace bowtie
