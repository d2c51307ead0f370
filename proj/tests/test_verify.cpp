#include <doctest.h>

#include <algorithm>
#include <set>

#include "bowtie/characterize.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/verify.hpp"
#include "brute_force.hpp"

using namespace bowtie;

namespace {
DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }
} // namespace

TEST_CASE("enumerate_graphic_sequences small n") {
    CHECK(enumerate_graphic_sequences(0).empty());
    CHECK(enumerate_graphic_sequences(1).empty());
    CHECK(enumerate_graphic_sequences(2) == std::vector<DegreeSequence>{seq({1, 1})});
    CHECK(enumerate_graphic_sequences(3) == std::vector<DegreeSequence>{seq({2, 2, 2}), seq({2, 1, 1})});
}

TEST_CASE("enumerate_graphic_sequences is strictly decreasing and stops on request") {
    for (int n = 2; n <= 9; ++n) {
        const auto all = enumerate_graphic_sequences(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(static_cast<int>(all[i].size()) == n);
            CHECK(sigma(all[i]) % 2 == 0);
            CHECK(all[i].front() <= n - 1);
            CHECK(is_graphic(all[i]));
            if (i > 0) CHECK(all[i] < all[i - 1]);
        }
    }
    int visited = 0;
    enumerate_graphic_sequences(7, [&](const DegreeSequence&) { return ++visited < 3; });
    CHECK(visited == 3);
}

TEST_CASE("enumerate_graphic_sequences equals the brute-force set for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> got;
        for (const auto& s : enumerate_graphic_sequences(n)) got.insert({s.begin(), s.end()});
        CHECK(got == testing::brute_graphic_sequences(n));
    }
}

TEST_CASE("the accepted set at n = 5 is exactly six sequences") {
    const std::set<DegreeSequence> expected = {seq({4, 4, 4, 4, 4}), seq({4, 4, 4, 3, 3}), seq({4, 4, 3, 3, 2}),
                                               seq({4, 3, 3, 3, 3}), seq({4, 3, 3, 2, 2}), seq({4, 2, 2, 2, 2})};
    std::set<DegreeSequence> accepted;
    for (const auto& s : enumerate_graphic_sequences(5))
        if (check_potentially(s).potentially) accepted.insert(s);
    CHECK(accepted == expected);

    std::set<DegreeSequence> brute;
    for (const auto& v : testing::brute_potentially_sequences(5)) brute.insert(DegreeSequence(v));
    CHECK(brute == expected);
}

TEST_CASE("verify_characterization finds no mismatch for n = 5..8") {
    for (int n = 5; n <= 8; ++n) {
        const auto s = verify_characterization(n);
        CAPTURE(n);
        CHECK(s.n == n);
        CHECK(s.sequences_tested == enumerate_graphic_sequences(n).size());
        CHECK(s.mismatches.empty());
        if (n == 5) CHECK(s.potentially_count == 6);
    }
    CHECK(verify_characterization(7).sequences_tested == 240);
    CHECK(verify_characterization(8).sequences_tested == 871);
    CHECK(check_potentially(seq({4, 2, 2, 2, 2, 2, 2})).failure == Failure::Cond6);
}

TEST_CASE("verify_characterization at n = 9 when allowed") {
    const auto s = verify_characterization(9, VerifyOptions{9});
    CHECK(s.sequences_tested == 3148);
    CHECK(s.mismatches.empty());
}

TEST_CASE("verify and sigma reject out-of-range n") {
    CHECK_THROWS_AS(verify_characterization(4), DomainError);
    CHECK_THROWS_AS(verify_characterization(9), DomainError);
    CHECK_THROWS_AS(verify_characterization(11, VerifyOptions{11}), DomainError);
    CHECK_THROWS_AS(sigma_empirical(4), DomainError);
    CHECK_THROWS_AS(sigma_empirical(9), DomainError);
}

TEST_CASE("sigma_empirical equals 4n - 4 for n = 5..8") {
    for (int n = 5; n <= 8; ++n) {
        const auto r = sigma_empirical(n);
        CAPTURE(n);
        CHECK(r.n == n);
        CHECK(r.bound == 4 * n - 4);
        CHECK(r.bound == sigma_closed_form(n));
        CHECK(sigma(r.witness) == r.bound - 2);
        CHECK_FALSE(check_potentially(r.witness).potentially);
        CHECK(r.oracle_confirmed);
    }
    CHECK(sigma_empirical(5).witness == seq({4, 4, 2, 2, 2}));
}
