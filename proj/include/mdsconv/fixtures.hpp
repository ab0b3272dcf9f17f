#pragma once

// The eleven worked F_8 codes, with their parity matrices transcribed once
// as integer encodings (theta = 2, theta^2 = 4 under x^3 + x + 1).

#include <string>
#include <vector>

#include "mdsconv/constructions.hpp"

namespace mdsconv {

struct ExampleFixture {
    int id = 0;
    Family family = Family::Sec3;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    std::size_t tau = 0;
    /// Uses the extension overrides: modulus t^2 + theta t + 1 and the
    /// primitive element alpha = theta^2 + (1 + theta^2) e with alpha^7 = e.
    bool extension = false;
    ConvParams conv;
    std::size_t dfree = 0;
    /// Verdicts the worked example claims.
    ExpectedFlags claimed;
    std::vector<std::vector<Elem>> g0;  // constant coefficient, row by row
    std::vector<std::vector<Elem>> g1;  // coefficient of D

    FieldSetup setup() const;
    FamilySpec spec() const;
    PolyMatrix parity() const;
    /// "(7,4,2)_8".
    std::string label() const;
};

const std::vector<ExampleFixture>& example_fixtures();
/// Throws InvalidParams for an unknown id.
const ExampleFixture& example_fixture(int id);

/// x^3 + x + 1 over F_2.
inline const std::vector<unsigned> kF8Modulus{1, 1, 0, 1};
/// {c0, c1} of t^2 + theta t + 1 over F_8.
inline constexpr std::array<Elem, 2> kF64Modulus{1, 2};
/// theta^2 + (1 + theta^2) e, encoded a + 8 b.
inline constexpr Elem kAlpha = 4 + 8 * 5;

}  // namespace mdsconv
