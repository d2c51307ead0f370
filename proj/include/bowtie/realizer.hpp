#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bowtie/graph.hpp"
#include "bowtie/sequence.hpp"

namespace bowtie {

/// Terminal families of the sufficiency induction: accepted sequences whose
/// lay-off child is rejected, so they need a direct construction.
enum class Family {
    F1_433,   // (4^3, 3^(n-3)), n odd >= 5
    F2_43,    // (4^2, 3^(n-2)), n even >= 6
    F3_4,     // (4, 3^(n-1)), n odd >= 5
    F4_432,   // (4^2, 3^a, 2^b), a even >= 2, b >= 1
    F7_432,   // (4, 3^a, 2^b), a even >= 2, b >= 1, n >= 5
    F11_4321, // (4, 3^a, 2^b, 1^c), a, b, c >= 1, a + b >= 4, a + c even
    F18_431,  // (4, 3^a, 1^c), a >= 4, c >= 1, a + c even
    C3_TAIL,  // (n-2, n-3, 2^(n-3), 1), n >= 6
    SQ_42,    // (4^2, 2^(n-2)), n >= 7
    S_42,     // (4, 2^(n-1)), n == 5 or n >= 8
    S_4221,   // (4, 2^a, 1^c), a >= 4, c >= 2 even
};

inline constexpr Family kAllFamilies[] = {
    Family::F1_433,  Family::F2_43,   Family::F3_4,  Family::F4_432, Family::F7_432, Family::F11_4321,
    Family::F18_431, Family::C3_TAIL, Family::SQ_42, Family::S_42,   Family::S_4221,
};

std::string family_name(Family family);

/// A family plus its parameters. a, b, c count the 3s, 2s and 1s after the
/// leading 4s where the family has them; unused parameters stay 0.
struct FamilyPattern {
    Family id = Family::S_42;
    int n = 0;
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const FamilyPattern&, const FamilyPattern&) = default;
};

/// Throws BadParams when the parameters are out of range, have the wrong
/// parity, or do not add up to n.
void validate(const FamilyPattern& p);

/// The degree sequence the pattern describes. Throws BadParams.
DegreeSequence family_sequence(const FamilyPattern& p);

/// Recognizes a sequence as a member of one of the families.
std::optional<FamilyPattern> match_family(const DegreeSequence& seq);

/// Builds a realization of family_sequence(p) containing a bowtie on
/// vertices 0..4 (center 0, wings (1,2) and (3,4)). The output is checked
/// before it is returned. Throws BadParams.
SimpleGraph construct_family(const FamilyPattern& p);

/// Adds one vertex joined to existing vertices whose degrees are the
/// decremented parent degrees, turning a realization of trace.child into one
/// of trace.parent. The lowest-index vertex of each required degree is used.
/// Throws TraceMismatch if g does not realize trace.child.
SimpleGraph reattach(const SimpleGraph& g, const LayoffTrace& trace);

enum class Route {
    Oracle,    // small n: first bowtie realization found by enumeration
    Family,    // direct construction
    Recursion, // realize the lay-off child, then reattach
};

struct RealizeOptions {
    // Sequences with n at or below this go straight to the enumeration oracle.
    int oracle_max_n = kMaxEnumerationVertices;
};

struct Realization {
    SimpleGraph graph;
    BowtieWitness witness;
    Route route = Route::Oracle;  // route taken at the top level
    int depth = 0;                // number of reattach steps
    std::optional<FamilyPattern> family; // family used at the bottom, if any
};

/// Realization of an accepted sequence that contains K5 - C4.
/// Throws NotPotentially if the characterization rejects seq, and
/// InternalExhaustion if no route applies.
Realization realize_with_bowtie_traced(const DegreeSequence& seq, const RealizeOptions& options = {});

SimpleGraph realize_with_bowtie(const DegreeSequence& seq, const RealizeOptions& options = {});

} // namespace bowtie
