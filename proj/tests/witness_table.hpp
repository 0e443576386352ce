#pragma once

// Rows of the table of unit witnesses t for the family vectors with i = 1.
// A row covers the j with fr(j/2ap) in one of its open intervals and, when
// `modulus` is set, j = residue mod modulus.

#include "delsarte/exact.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using delsarte::Rational;

struct WitnessRow {
    std::vector<std::pair<Rational, Rational>> intervals;
    long modulus = 0;
    long residue = 0;
    std::function<long(long p, long a)> t;
};

struct WitnessCase {
    std::string label;  ///< "4|a", "2|a", "9|a", "a=3, p=1 mod 3", "a=3, p=2 mod 3"
    std::vector<WitnessRow> rows;
};

/// The table case that applies to (p, a): 4 | a, 2 | a, 9 | a or a = 3.
/// Throws std::invalid_argument otherwise.
WitnessCase witness_case(long p, long a);

struct WitnessTally {
    long covered = 0;  ///< (j, row) pairs with j inside the row
    long failed = 0;   ///< pairs where t is not a unit or gives sum 2
    std::vector<std::size_t> failing_rows;  ///< 0-based, sorted
};

/// Evaluates every row on every j with gcd(a, j) = 1 and a nonzero last entry.
WitnessTally check_witnesses(long p, long a);

}  // namespace testing
