#pragma once

// Convolutional codes given by a polynomial parity-check matrix
// P(D) = sum_t P_t D^t over F_q: sliding matrices, column distances,
// free-distance bounds and MDS / strongly-MDS / MDP classification.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdsconv/blockcode.hpp"
#include "mdsconv/galois.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv {

class PolyMatrix {
public:
    PolyMatrix() = default;
    /// coeffs[t] is the coefficient of D^t; trailing zero matrices are
    /// trimmed. Throws InvalidParams on shape mismatch.
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Matrix> coeffs);
    /// Entry-wise polynomial form; entries[r][c] is ascending in D.
    static PolyMatrix from_entries(std::size_t rows, std::size_t cols, const std::vector<std::vector<Poly>>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    /// Highest power with a nonzero coefficient; 0 for the zero matrix.
    std::size_t memory() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of D^t, zero beyond the memory.
    Matrix coeff(std::size_t t) const;
    Poly entry(std::size_t r, std::size_t c) const;
    /// -1 for a zero row.
    int row_degree(std::size_t r) const;
    std::vector<int> row_degrees() const;
    PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;

    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Matrix> coeffs_;
};

/// H0 + D * H1', where H1' is H1 with rows(H0) - rows(H1) zero rows on top.
/// Throws RankDeficient, RowCountExceeded.
PolyMatrix unit_memory_parity(const Field& f, const Matrix& h0, const Matrix& h1);

/// Block lower-triangular (j+1)kappa x (j+1)n matrix, block (r, c) = P_{r-c}.
Matrix sliding_matrix(const PolyMatrix& p, std::size_t j);

/// Sliding matrix with memory() extra block rows: its kernel is the set of
/// codewords of degree <= j.
Matrix terminated_matrix(const PolyMatrix& p, std::size_t j);

struct SingletonIndices {
    std::size_t bound = 0;
    std::size_t M = 0;
    std::size_t L = 0;
};

/// Throws InvalidParams unless 1 <= k <= n-1.
SingletonIndices singleton_and_indices(std::size_t n, std::size_t k, std::size_t delta);

/// (n-k)(j+1)+1.
inline std::size_t column_distance_cap(std::size_t n, std::size_t k, std::size_t j) { return (n - k) * (j + 1) + 1; }

struct Minimality {
    bool row_reduced = false;
    bool basic = false;
    std::vector<int> row_degrees;
    std::size_t degree = 0;  // sum of row degrees
};

/// Throws RankDeficient when every full-size minor vanishes.
Minimality minimality_check(const Field& f, const PolyMatrix& p);

/// Determinant over F_q[D] by fraction-free elimination.
Poly poly_determinant(const Field& f, std::vector<std::vector<Poly>> m);

struct ConvCodeDesc {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    std::size_t nu = 0;
    PolyMatrix parity;
    std::vector<int> row_degrees;
};

/// k = n - rows, delta = sum of row degrees. Throws InvalidParams when
/// k = 0 or k = n, RankDeficient on a zero row.
ConvCodeDesc describe(const PolyMatrix& parity);

struct ColumnDistance {
    std::size_t value = 0;  // exact, or a lower bound when !exact
    bool exact = true;
    Vec witness;  // empty unless exact
    std::uint64_t steps = 0;
};

struct SearchLimits {
    std::uint64_t budget = 10'000'000;  // column reductions per search
    unsigned jobs = 1;
};

/// Minimum weight of a kernel vector of the stacked coefficient matrices
/// (constant codewords); nullopt when the stack has full column rank.
struct StackedCode {
    std::optional<std::size_t> d;
    Vec witness;
};

StackedCode stacked_code(const Field& f, const PolyMatrix& p, std::uint64_t budget = 10'000'000);

/// Column distances d_0^c, d_1^c, ... with caching. Results are independent
/// of `jobs`.
class ColumnDistanceEngine {
public:
    ColumnDistanceEngine(const Field& f, PolyMatrix parity, SearchLimits limits = {});

    const ColumnDistance& at(std::size_t j);
    std::size_t computed() const noexcept { return results_.size(); }
    std::optional<std::size_t> stacked_distance() const noexcept { return stacked_.d; }

    /// Minimum weight of a codeword of degree <= j with nonzero constant
    /// term, searched only below `below`. nullopt if none is lighter.
    std::optional<ColumnDistance> terminated_below(std::size_t j, std::size_t below);

private:
    const Field& f_;
    PolyMatrix parity_;
    ConvCodeDesc desc_;
    SearchLimits limits_;
    StackedCode stacked_;
    std::vector<ColumnDistance> results_;
};

/// Distance of the minimum-weight sliding-kernel vector with nonzero first
/// block among supports of exactly weight w; used by the engine and by
/// tests. Returns the witness or nullopt. Sets *exhausted on budget.
std::optional<Vec> search_weight(const Field& f, const Matrix& sliding, std::size_t n, std::size_t w,
                                 const std::vector<std::size_t>& prefix_lower, std::size_t kappa,
                                 const SearchLimits& limits, std::uint64_t* steps, bool* exhausted);

struct BlockSplit {
    bool applicable = false;
    std::string reason;  // why not applicable
    std::size_t d_stack = 0;
    std::size_t d0 = 0;
    std::size_t dm = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
};

struct DfreeBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

DfreeBounds dfree_bounds(const ConvCodeDesc& desc, std::size_t block_d, std::size_t d0, std::size_t dm);

/// Splitting certificate for a unit-memory parity P0 + P1 D: distances of
/// ker P0, ker (nonzero rows of P1) and ker [P0; P1].
BlockSplit block_split_certificate(const Field& f, const ConvCodeDesc& desc, SearchOptions options = {});

enum class Verdict { Confirmed, Refuted, Inconclusive };
std::string_view to_string(Verdict v);

struct Certificate {
    std::string route;  // "block-split", "column-distance", "stacked-code", "terminated"
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::string detail;
};

struct ConvReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    std::size_t nu = 0;
    SingletonIndices indices;
    std::map<std::size_t, ColumnDistance> column_distances;
    std::size_t dfree_lower = 0;
    std::size_t dfree_upper = 0;
    Verdict mds = Verdict::Inconclusive;
    Verdict smds = Verdict::Inconclusive;
    Verdict mdp = Verdict::Inconclusive;
    std::vector<Certificate> certificates;
    bool budget_exhausted = false;
    /// j values where d_j^c hit its cap but some earlier d_i^c did not.
    std::vector<std::size_t> cascade_counterexamples;
};

struct ClassifyOptions {
    std::size_t jmax = 4;
    SearchLimits limits;
    bool use_block_split = true;
};

/// Throws PropertyViolation if a computed value contradicts the cap.
ConvReport classify(const Field& f, const PolyMatrix& parity, ClassifyOptions options = {});

/// Deletes rows of maximal degree. Throws NotMaximalDegreeRow,
/// IndexOutOfRange.
PolyMatrix omit_rows(const PolyMatrix& p, const std::vector<std::size_t>& which);

/// Minimal polynomial basis of {h : P(D) h(D) = 0}, returned as rows, built
/// greedily by increasing degree. Throws SearchBudgetExceeded when the
/// degree exceeds `max_degree`.
PolyMatrix minimal_right_kernel(const Field& f, const PolyMatrix& p, std::size_t max_degree = 16);

}  // namespace mdsconv
