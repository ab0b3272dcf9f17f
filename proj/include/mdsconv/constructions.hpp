#pragma once

// The unit-memory construction families. Each builder returns the block
// code, its split (H0, H1), the parity PolyMatrix H0~ + H1~ D and the
// verdicts guaranteed for the parameters.
//
// Family parameters (k, delta) are those of the underlying block-code split:
//   sec3, sec4      -> convolutional code (n, k + delta, delta)
//   sec5c1, sec5p2  -> (q + 1, k + 2 delta, 2 delta)
//   sec5c2 (tau)    -> (q + 1, q - tau, tau); stored as k = q - 2 tau,
//                      delta = tau so the (n, k + delta, delta) form holds.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdsconv/blockcode.hpp"
#include "mdsconv/convcode.hpp"
#include "mdsconv/galois.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv {

enum class Family { Sec3, Sec4, Sec5ConstructionOne, Sec5ConstructionTwo, Sec5Part2 };

/// "sec3", "sec4", "sec5c1", "sec5c2", "sec5p2".
std::string_view to_string(Family f);
/// Throws InvalidParams on an unknown name.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct FamilySpec {
    Family family = Family::Sec3;
    unsigned q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    /// Rows of H0 on the F_{q^2} side (sec5) or over F_q (sec3/sec4); 0 for sec5c2.
    std::size_t gamma = 0;
    /// Largest root index; 0 for sec3/sec4.
    std::size_t tau = 0;
    /// Even / odd root counts; sec5c2 only.
    std::size_t r = 0;
    std::size_t s = 0;

    auto operator<=>(const FamilySpec&) const = default;
};

/// Validates the family invariants and fills the derived fields. `n` is
/// read for sec3 only; `tau` for sec5c2 only. Throws InvalidParams,
/// ParityConditionViolated, OddFieldSize.
FamilySpec make_spec(Family family, unsigned q, std::size_t n, std::size_t k, std::size_t delta,
                     std::size_t tau = 0);

struct ExpectedFlags {
    bool mds = false;
    bool smds = false;
    bool mdp = false;

    bool operator==(const ExpectedFlags&) const = default;
};

/// Verdicts the family guarantees for these parameters.
ExpectedFlags expected_flags(const FamilySpec& spec);

/// (n, k, delta) of the convolutional code the family produces.
struct ConvParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;

    bool operator==(const ConvParams&) const = default;
};
ConvParams conv_params(const FamilySpec& spec);

/// Field overrides; unset members take the defaults.
struct FieldSetup {
    std::optional<std::vector<unsigned>> modulus;
    std::optional<std::array<Elem, 2>> ext_modulus;
    std::optional<Elem> theta_ext;

    bool operator==(const FieldSetup&) const = default;
};

struct Bundle {
    FamilySpec spec;
    FieldSetup setup;
    FieldPtr field;
    ExtFieldPtr ext;  // null for sec3 / sec4
    BlockCode block;
    Matrix h0;  // H0~
    Matrix h1;  // H1 before zero padding
    PolyMatrix parity;
    ConvCodeDesc desc;
    ExpectedFlags expected;
};

Bundle sec3_code(unsigned q, std::size_t n, std::size_t k, std::size_t delta, const FieldSetup& setup = {});
Bundle sec4_code(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup = {});
Bundle sec5_construction_one(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup = {});
Bundle sec5_construction_two(unsigned q, std::size_t tau, const FieldSetup& setup = {});
Bundle sec5_part2_code(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup = {});

/// Dispatches on spec.family.
Bundle build(const FamilySpec& spec, const FieldSetup& setup = {});

/// Every tuple inside the chosen families' guarantee ranges, sorted by
/// (family, n, k, delta).
std::vector<FamilySpec> admissible_parameters(unsigned q, const std::vector<Family>& families);

/// Row-omission exploration for even q: from Construction two with
/// tau = delta + k - 1, drop k - 1 degree-1 rows of a minimal generator and
/// return the parity of the resulting subcode, expected to have parameters
/// (q + 1, q + 2 - 2k - delta, delta).
struct OmissionResult {
    PolyMatrix generator;  // minimal generator of the Construction two code
    PolyMatrix reduced;    // after omission
    PolyMatrix parity;     // minimal parity of the reduced code
    std::vector<std::size_t> omitted;
    ConvParams target;
};

/// Throws InvalidParams outside q even, k >= 1, delta >= 1, delta + k <= (q + 1) / 2.
OmissionResult omission_exploration(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup = {});

}  // namespace mdsconv
