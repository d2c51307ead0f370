#include "bowtie/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "bowtie/errors.hpp"

namespace bowtie {

namespace {

constexpr std::size_t kMaxTerms = 1'000'000;

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view token, std::string_view item) {
    token = trim(token);
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("malformed item '" + std::string(item) + "'");
    if (value < 1)
        throw ParseError("item '" + std::string(item) + "' must be a positive integer");
    return value;
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int d : terms_) {
        if (d < 1) throw DomainError("degree sequence terms must be positive, got " + std::to_string(d));
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence parse_sequence(std::string_view text) {
    if (trim(text).empty()) throw ParseError("empty sequence");

    std::vector<int> terms;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto trimmed = trim(item);
        if (trimmed.empty()) throw ParseError("empty item in sequence");

        const auto caret = trimmed.find('^');
        if (caret == std::string_view::npos) {
            terms.push_back(parse_positive(trimmed, trimmed));
        } else {
            const int degree = parse_positive(trimmed.substr(0, caret), trimmed);
            const int count = parse_positive(trimmed.substr(caret + 1), trimmed);
            if (terms.size() + static_cast<std::size_t>(count) > kMaxTerms)
                throw ParseError("sequence longer than " + std::to_string(kMaxTerms) + " terms");
            terms.insert(terms.end(), static_cast<std::size_t>(count), degree);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return DegreeSequence(std::move(terms));
}

std::string format_sequence(const DegreeSequence& seq) {
    std::ostringstream out;
    const auto terms = seq.terms();
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if (i != 0) out << ',';
        out << terms[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::int64_t sigma(const DegreeSequence& seq) {
    return std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
}

LayoffTrace lay_off(const DegreeSequence& seq) {
    const std::size_t n = seq.size();
    if (n < 2) throw LayoffImpossible("cannot lay off from a sequence with fewer than 2 terms");
    const int last = seq.back();
    if (static_cast<std::size_t>(last) > n - 1)
        throw LayoffImpossible("last term " + std::to_string(last) + " exceeds n - 1 = " + std::to_string(n - 1));

    LayoffTrace trace;
    trace.parent = seq;
    trace.removed_degree = last;
    trace.decremented_positions.resize(static_cast<std::size_t>(last));
    std::iota(trace.decremented_positions.begin(), trace.decremented_positions.end(), std::size_t{0});

    std::vector<int> child;
    child.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int d = i < static_cast<std::size_t>(last) ? seq[i] - 1 : seq[i];
        if (d > 0) child.push_back(d);
    }
    trace.child = DegreeSequence(std::move(child));
    return trace;
}

bool is_graphic(const DegreeSequence& seq) {
    if (seq.empty()) return true;
    if (sigma(seq) % 2 != 0) return false;
    if (static_cast<std::size_t>(seq.front()) >= seq.size()) return false;

    DegreeSequence current = seq;
    while (!current.empty()) {
        if (current.size() < 2 || static_cast<std::size_t>(current.back()) > current.size() - 1) return false;
        current = lay_off(current).child;
    }
    return true;
}

} // namespace bowtie
