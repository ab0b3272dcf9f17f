#pragma once

// Block codes given by parity-check matrices: root and evaluation
// constructions, realification of F_{q^2} rows, and exact minimum distance.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mdsconv/galois.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv {

/// base_point * step^i for i in [d1, d2]. Throws InvalidParams on an empty
/// range.
template <FieldLike F>
std::vector<Elem> geometric_roots(const F& f, Elem base_point, Elem step, std::int64_t d1, std::int64_t d2) {
    require(d1 <= d2, ErrorCode::InvalidParams, "empty root range");
    std::vector<Elem> roots;
    for (std::int64_t i = d1; i <= d2; ++i) roots.push_back(f.mul(base_point, f.pow(step, i)));
    return roots;
}

/// Monic prod (x - r). Throws DuplicateRoots.
template <FieldLike F>
Poly generator_from_roots(const F& f, const std::vector<Elem>& roots) {
    require(!roots.empty(), ErrorCode::InvalidParams, "empty root list");
    std::vector<Elem> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::DuplicateRoots,
            "root list has repeated entries");
    return poly::from_roots(f, roots);
}

/// Whether the generator built from `roots` has all coefficients in the
/// base field. Checks Frobenius closure of the root set and the expanded
/// coefficients; throws InternalInvariant if the two disagree.
bool base_field_closure_check(const ExtField& ext, const std::vector<Elem>& roots);

/// Entry (j, i) = roots[j]^i.
template <FieldLike F>
Matrix root_parity_matrix(const F& f, const std::vector<Elem>& roots, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidParams, "length must be >= 1");
    Matrix h(roots.size(), n);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        Elem x = 1;
        for (std::size_t i = 0; i < n; ++i) {
            h(j, i) = x;
            x = f.mul(x, roots[j]);
        }
    }
    return h;
}

/// Entry (j, i) = multipliers[i] * points[i]^j with 0^0 = 1.
/// Throws DuplicatePoints, ZeroMultiplier.
template <FieldLike F>
Matrix evaluation_parity_matrix(const F& f, const std::vector<Elem>& points, std::size_t num_rows,
                                const std::vector<Elem>& multipliers) {
    require(num_rows >= 1, ErrorCode::InvalidParams, "need at least one row");
    require(points.size() == multipliers.size(), ErrorCode::InvalidParams, "points and multipliers differ in length");
    std::vector<Elem> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::DuplicatePoints,
            "evaluation points are not distinct");
    for (Elem u : multipliers) require(u != 0, ErrorCode::ZeroMultiplier, "column multiplier is zero");
    Matrix h(num_rows, points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Elem x = multipliers[i];
        for (std::size_t j = 0; j < num_rows; ++j) {
            h(j, i) = x;
            x = f.mul(x, points[i]);
        }
    }
    return h;
}

/// Splits each row h = h1 + e*h2 into (h1; h2) over the base field and
/// drops all-zero rows.
Matrix realify(const ExtField& ext, const Matrix& m);

struct BlockCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix parity;
    std::size_t d = 0;
    bool is_mds = false;
    std::optional<Poly> generator_poly;
    std::optional<Poly> modulus_poly;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000;  // column reductions
    /// Cross-check against codeword enumeration when q^k is at most this.
    std::uint64_t enumeration_limit = 1u << 20;
};

/// Computes k, d and the MDS flag. Throws InvalidParams when k = 0.
BlockCode make_block_code(FieldPtr field, Matrix parity, std::optional<Poly> generator = std::nullopt,
                          std::optional<Poly> modulus = std::nullopt, SearchOptions options = {});

/// Smallest number of linearly dependent parity columns. Throws
/// SearchBudgetExceeded, InvalidParams when the kernel is trivial.
std::size_t min_distance_circuits(const Field& f, const Matrix& parity, std::uint64_t budget = 10'000'000);

/// A minimum-weight nonzero kernel vector found by the circuit search;
/// nullopt when the kernel is trivial.
std::optional<Vec> min_weight_vector(const Field& f, const Matrix& parity, std::uint64_t budget = 10'000'000);

/// Minimum weight over all nonzero kernel vectors, by enumeration.
std::size_t min_distance_enumerate(const Field& f, const Matrix& parity);

/// Circuit search, cross-checked against enumeration when small enough;
/// disagreement throws InternalInvariant.
std::size_t min_distance(const Field& f, const Matrix& parity, SearchOptions options = {});

struct MdsCheck {
    bool mds = false;
    /// A dependent set of n-k columns when not MDS.
    std::optional<std::vector<std::size_t>> violating;
};

MdsCheck is_mds_block(const Field& f, const Matrix& parity);

/// Calls fn on every w-subset of {0..n-1} in lexicographic order; stops
/// early when fn returns false. Returns false if stopped.
bool for_each_combination(std::size_t n, std::size_t w, const std::function<bool(const std::vector<std::size_t>&)>& fn);

}  // namespace mdsconv
