#include "mdsconv/blockcode.hpp"

#include <algorithm>

namespace mdsconv {

bool base_field_closure_check(const ExtField& ext, const std::vector<Elem>& roots) {
    std::vector<Elem> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    bool closed = true;
    for (Elem r : roots)
        if (!std::binary_search(sorted.begin(), sorted.end(), ext.conj(r))) closed = false;

    const Poly g = generator_from_roots(ext, roots);
    bool base_coeffs = true;
    for (Elem c : g)
        if (!ext.in_base(c)) base_coeffs = false;

    require(closed == base_coeffs, ErrorCode::InternalInvariant,
            "Frobenius closure and coefficient test disagree on a root set");
    return closed;
}

Matrix realify(const ExtField& ext, const Matrix& m) {
    Matrix out(2 * m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto [a, b] = ext.decompose(m(r, c));
            out(2 * r, c) = a;
            out(2 * r + 1, c) = b;
        }
    return drop_zero_rows(out);
}

bool for_each_combination(std::size_t n, std::size_t w,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (w > n) return true;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

namespace {

struct CircuitSearch {
    const Field& f;
    const Matrix& cols;  // transpose of the parity: row i is column i
    std::size_t n;
    std::uint64_t budget;
    std::uint64_t used = 0;
    EchelonStack<Field> stack;
    std::vector<std::size_t> chosen;

    CircuitSearch(const Field& field, const Matrix& t, std::uint64_t b)
        : f(field), cols(t), n(t.rows()), budget(b), stack(field, t.cols()) {}

    void charge() {
        if (++used > budget)
            fail(ErrorCode::SearchBudgetExceeded, "min-distance search exceeded " + std::to_string(budget) + " steps");
    }

    // Extends an independent prefix of size depth to size w, last element
    // dependent on the rest.
    bool extend(std::size_t next, std::size_t depth, std::size_t w) {
        if (depth + 1 == w) {
            for (std::size_t c = next; c < n; ++c) {
                charge();
                if (stack.in_span(cols.row(c))) {
                    chosen.push_back(c);
                    return true;
                }
            }
            return false;
        }
        for (std::size_t c = next; c + (w - depth) <= n; ++c) {
            charge();
            if (!stack.push(cols.row(c))) continue;
            chosen.push_back(c);
            const bool found = extend(c + 1, depth + 1, w);
            if (found) return true;
            chosen.pop_back();
            stack.pop();
        }
        return false;
    }
};

}  // namespace

std::size_t min_distance_circuits(const Field& f, const Matrix& parity, std::uint64_t budget) {
    const std::size_t n = parity.cols();
    const std::size_t r = rank(f, parity);
    require(r < n, ErrorCode::InvalidParams, "code has dimension 0");
    const Matrix t = transpose(parity);
    CircuitSearch search(f, t, budget);
    for (std::size_t w = 1; w <= r + 1; ++w)
        if (search.extend(0, 0, w)) return w;
    fail(ErrorCode::InternalInvariant, "no dependent column set of size rank+1");
}

std::optional<Vec> min_weight_vector(const Field& f, const Matrix& parity, std::uint64_t budget) {
    const std::size_t n = parity.cols();
    const std::size_t r = rank(f, parity);
    if (r == n) return std::nullopt;
    const Matrix t = transpose(parity);
    CircuitSearch search(f, t, budget);
    for (std::size_t w = 1; w <= r + 1; ++w)
        if (search.extend(0, 0, w)) {
            auto v = solve_on_support(f, parity, search.chosen);
            require(v.has_value() && weight(*v) == w, ErrorCode::InternalInvariant, "circuit without full-support kernel vector");
            return v;
        }
    fail(ErrorCode::InternalInvariant, "no dependent column set of size rank+1");
}

std::size_t min_distance_enumerate(const Field& f, const Matrix& parity) {
    const auto basis = nullspace(f, parity);
    require(!basis.empty(), ErrorCode::InvalidParams, "code has dimension 0");
    const std::size_t n = parity.cols();
    const std::size_t k = basis.size();
    const Elem q = f.q();
    std::vector<Elem> digits(k, 0);
    Vec word(n, 0);
    std::size_t best = n + 1;
    while (true) {
        std::size_t i = 0;
        while (i < k && digits[i] == q - 1) {
            for (std::size_t c = 0; c < n; ++c) word[c] = f.sub(word[c], f.mul(q - 1, basis[i][c]));
            digits[i] = 0;
            ++i;
        }
        if (i == k) break;
        const Elem delta = f.sub(digits[i] + 1, digits[i]);
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(delta, basis[i][c]));
        ++digits[i];
        best = std::min(best, weight(word));
    }
    return best;
}

std::size_t min_distance(const Field& f, const Matrix& parity, SearchOptions options) {
    const std::size_t d = min_distance_circuits(f, parity, options.budget);
    const std::size_t k = parity.cols() - rank(f, parity);
    std::uint64_t size = 1;
    bool small = true;
    for (std::size_t i = 0; i < k && small; ++i) {
        size *= f.q();
        if (size > options.enumeration_limit) small = false;
    }
    if (small) {
        const std::size_t d2 = min_distance_enumerate(f, parity);
        require(d == d2, ErrorCode::InternalInvariant,
                "min-distance algorithms disagree: circuits " + std::to_string(d) + ", enumeration " + std::to_string(d2));
    }
    return d;
}

MdsCheck is_mds_block(const Field& f, const Matrix& parity) {
    const std::size_t n = parity.cols();
    const std::size_t r = rank(f, parity);
    require(r < n, ErrorCode::InvalidParams, "code has dimension 0");
    MdsCheck out;
    out.mds = true;
    for_each_combination(n, r, [&](const std::vector<std::size_t>& subset) {
        if (columns_independent(f, parity, subset)) return true;
        out.mds = false;
        out.violating = subset;
        return false;
    });
    return out;
}

BlockCode make_block_code(FieldPtr field, Matrix parity, std::optional<Poly> generator, std::optional<Poly> modulus,
                          SearchOptions options) {
    BlockCode code;
    code.field = field;
    code.n = parity.cols();
    code.k = code.n - rank(*field, parity);
    require(code.k >= 1, ErrorCode::InvalidParams, "code has dimension 0");
    code.d = min_distance(*field, parity, options);
    code.is_mds = code.d == code.n - code.k + 1;
    code.parity = std::move(parity);
    code.generator_poly = std::move(generator);
    code.modulus_poly = std::move(modulus);
    return code;
}

}  // namespace mdsconv
