#include "mdsconv/convcode.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace mdsconv {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Matrix> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        require(c.rows() == rows && c.cols() == cols, ErrorCode::InvalidParams, "coefficient matrix shape mismatch");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols, const std::vector<std::vector<Poly>>& entries) {
    require(entries.size() == rows, ErrorCode::InvalidParams, "entry row count mismatch");
    std::size_t len = 0;
    for (const auto& row : entries) {
        require(row.size() == cols, ErrorCode::InvalidParams, "entry column count mismatch");
        for (const auto& p : row) len = std::max(len, p.size());
    }
    std::vector<Matrix> coeffs(len, Matrix(rows, cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t t = 0; t < entries[r][c].size(); ++t) coeffs[t](r, c) = entries[r][c][t];
    return PolyMatrix(rows, cols, std::move(coeffs));
}

Matrix PolyMatrix::coeff(std::size_t t) const {
    if (t < coeffs_.size()) return coeffs_[t];
    return Matrix(rows_, cols_);
}

Poly PolyMatrix::entry(std::size_t r, std::size_t c) const {
    Poly p(coeffs_.size());
    for (std::size_t t = 0; t < coeffs_.size(); ++t) p[t] = coeffs_[t](r, c);
    poly::trim(p);
    return p;
}

int PolyMatrix::row_degree(std::size_t r) const {
    for (std::size_t t = coeffs_.size(); t-- > 0;)
        if (!coeffs_[t].row_is_zero(r)) return static_cast<int>(t);
    return -1;
}

std::vector<int> PolyMatrix::row_degrees() const {
    std::vector<int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = row_degree(r);
    return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    std::vector<Matrix> coeffs;
    for (const auto& c : coeffs_) {
        Matrix m = mdsconv::select_rows(c, idx);
        if (idx.empty()) m = Matrix(0, cols_);
        coeffs.push_back(std::move(m));
    }
    return PolyMatrix(idx.size(), cols_, std::move(coeffs));
}

PolyMatrix unit_memory_parity(const Field& f, const Matrix& h0, const Matrix& h1) {
    require(h0.cols() == h1.cols(), ErrorCode::InvalidParams, "H0 and H1 differ in column count");
    require(h1.rows() <= h0.rows(), ErrorCode::RowCountExceeded,
            "H1 has " + std::to_string(h1.rows()) + " rows, more than H0's " + std::to_string(h0.rows()));
    require(rank(f, h0) == h0.rows(), ErrorCode::RankDeficient, "H0 does not have full row rank");
    require(rank(f, h1) == h1.rows(), ErrorCode::RankDeficient, "H1 does not have full row rank");
    const Matrix padded = vstack(Matrix(h0.rows() - h1.rows(), h0.cols()), h1);
    return PolyMatrix(h0.rows(), h0.cols(), {h0, padded});
}

Matrix sliding_matrix(const PolyMatrix& p, std::size_t j) {
    const std::size_t kap = p.rows(), n = p.cols();
    Matrix s((j + 1) * kap, (j + 1) * n);
    for (std::size_t r = 0; r <= j; ++r)
        for (std::size_t c = 0; c <= r; ++c) {
            if (r - c >= p.coeffs().size()) continue;
            const Matrix& blk = p.coeffs()[r - c];
            for (std::size_t a = 0; a < kap; ++a)
                for (std::size_t b = 0; b < n; ++b) s(r * kap + a, c * n + b) = blk(a, b);
        }
    return s;
}

Matrix terminated_matrix(const PolyMatrix& p, std::size_t j) {
    const std::size_t kap = p.rows(), n = p.cols(), nu = p.memory();
    Matrix s((j + 1 + nu) * kap, (j + 1) * n);
    for (std::size_t r = 0; r <= j + nu; ++r)
        for (std::size_t c = 0; c <= std::min(r, j); ++c) {
            if (r - c >= p.coeffs().size()) continue;
            const Matrix& blk = p.coeffs()[r - c];
            for (std::size_t a = 0; a < kap; ++a)
                for (std::size_t b = 0; b < n; ++b) s(r * kap + a, c * n + b) = blk(a, b);
        }
    return s;
}

SingletonIndices singleton_and_indices(std::size_t n, std::size_t k, std::size_t delta) {
    require(k >= 1 && k < n, ErrorCode::InvalidParams,
            "need 1 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    SingletonIndices out;
    const std::size_t r = n - k;
    out.bound = r * (delta / k + 1) + delta + 1;
    out.M = delta / k + (delta + r - 1) / r;
    out.L = delta / k + delta / r;
    return out;
}

// ---------------------------------------------------------------------------
// Minimality

Poly poly_determinant(const Field& f, std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly{1};
    Poly prev{1};
    bool negate = false;  // each row swap flips the sign
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && poly::degree(m[piv][k]) < 0) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                const Poly num = poly::sub(f, poly::mul(f, m[k][k], m[i][j]), poly::mul(f, m[i][k], m[k][j]));
                auto [quot, rem] = poly::divmod(f, num, prev);
                require(rem.empty(), ErrorCode::InternalInvariant, "inexact division in fraction-free elimination");
                m[i][j] = std::move(quot);
            }
        prev = m[k][k];
    }
    return negate ? poly::sub(f, Poly{}, m[n - 1][n - 1]) : m[n - 1][n - 1];
}

Minimality minimality_check(const Field& f, const PolyMatrix& p) {
    Minimality out;
    out.row_degrees = p.row_degrees();
    for (int d : out.row_degrees) {
        require(d >= 0, ErrorCode::RankDeficient, "zero row in polynomial matrix");
        out.degree += static_cast<std::size_t>(d);
    }
    const std::size_t kap = p.rows(), n = p.cols();
    require(kap <= n, ErrorCode::RankDeficient, "more rows than columns");

    Matrix lead(kap, n);
    for (std::size_t r = 0; r < kap; ++r)
        for (std::size_t c = 0; c < n; ++c) lead(r, c) = p.coeffs()[out.row_degrees[r]](r, c);
    out.row_reduced = rank(f, lead) == kap;

    std::vector<std::vector<Poly>> entries(kap, std::vector<Poly>(n));
    for (std::size_t r = 0; r < kap; ++r)
        for (std::size_t c = 0; c < n; ++c) entries[r][c] = p.entry(r, c);
    Poly g;
    for_each_combination(n, kap, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Poly>> sub(kap, std::vector<Poly>(kap));
        for (std::size_t r = 0; r < kap; ++r)
            for (std::size_t i = 0; i < kap; ++i) sub[r][i] = entries[r][cols[i]];
        g = poly::gcd(f, g, poly_determinant(f, std::move(sub)));
        return poly::degree(g) != 0;  // a unit gcd cannot shrink further
    });
    require(!g.empty(), ErrorCode::RankDeficient, "all full-size minors vanish");
    out.basic = poly::degree(g) == 0;
    return out;
}

ConvCodeDesc describe(const PolyMatrix& parity) {
    ConvCodeDesc d;
    d.n = parity.cols();
    require(parity.rows() >= 1 && parity.rows() < d.n, ErrorCode::InvalidParams,
            "parity must have between 1 and n-1 rows");
    d.k = d.n - parity.rows();
    d.row_degrees = parity.row_degrees();
    for (int r : d.row_degrees) {
        require(r >= 0, ErrorCode::RankDeficient, "zero row in parity matrix");
        d.delta += static_cast<std::size_t>(r);
    }
    d.nu = parity.memory();
    d.parity = parity;
    return d;
}

// ---------------------------------------------------------------------------
// Column-distance search

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// DFS over sorted supports of one weight with a fixed first column.
class SupportSearch {
public:
    SupportSearch(const Field& f, const Matrix& sliding, const Matrix& cols, std::size_t n, std::size_t kappa,
                  std::size_t w, const std::vector<std::size_t>& lower, std::uint64_t budget,
                  std::atomic<std::uint64_t>& steps, std::atomic<bool>& exhausted)
        : f_(f),
          sliding_(sliding),
          cols_(cols),
          n_(n),
          kappa_(kappa),
          w_(w),
          lower_(lower),
          budget_(budget),
          steps_(steps),
          exhausted_(exhausted),
          stack_(f, cols.cols()) {}

    std::optional<Vec> run(std::size_t first) {
        if (!charge()) return std::nullopt;
        if (w_ == 1) {
            if (sliding_.cols() > 0 && is_zero_col(first)) {
                Vec v(cols_.rows(), 0);
                v[first] = 1;
                return v;
            }
            return std::nullopt;
        }
        if (!stack_.push(cols_.row(first))) return std::nullopt;
        chosen_.push_back(first);
        return extend(first + 1);
    }

private:
    bool charge() {
        if (exhausted_.load(std::memory_order_relaxed)) return false;
        if (steps_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
            exhausted_.store(true);
            return false;
        }
        return true;
    }

    bool is_zero_col(std::size_t c) const {
        for (Elem x : cols_.row(c))
            if (x != 0) return false;
        return true;
    }

    std::size_t block_of(std::size_t c) const { return c / n_; }

    // Minimum number of support elements required in blocks <= l.
    std::size_t lower_at(std::size_t l) const { return l < lower_.size() ? lower_[l] : 0; }

    // The chosen columns, restricted to the first (l+1)kappa rows, admit a
    // kernel vector nonzero on block 0.
    bool closes_at(std::size_t l) {
        const std::size_t rows = (l + 1) * kappa_;
        Matrix sub(rows, chosen_.size());
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            for (std::size_t r = 0; r < rows; ++r) sub(r, i) = sliding_(r, chosen_[i]);
        for (const auto& v : nullspace(f_, sub))
            for (std::size_t i = 0; i < chosen_.size() && chosen_[i] < n_; ++i)
                if (v[i] != 0) return true;
        return false;
    }

    // Whether the current prefix may continue with a column in block b.
    bool may_enter(std::size_t b) {
        const std::size_t last = block_of(chosen_.back());
        if (b == last) return true;
        if (chosen_.size() < lower_at(b - 1)) return false;
        return closes_at(b - 1);
    }

    std::optional<Vec> extend(std::size_t next) {
        const std::size_t depth = chosen_.size();
        const std::size_t total = cols_.rows();
        std::size_t checked_block = block_of(chosen_.back());
        if (depth + 1 == w_) {
            Vec relation;
            for (std::size_t c = next; c < total; ++c) {
                const std::size_t b = block_of(c);
                if (b > checked_block) {
                    if (!may_enter(b)) break;
                    checked_block = b;
                }
                if (!charge()) return std::nullopt;
                if (stack_.push(cols_.row(c), &relation)) {
                    stack_.pop();
                    continue;
                }
                Vec v(total, 0);
                v[c] = 1;
                bool first_block = false;
                for (std::size_t i = 0; i < depth; ++i) {
                    v[chosen_[i]] = f_.neg(relation[i]);
                    if (chosen_[i] < n_ && relation[i] != 0) first_block = true;
                }
                if (first_block) return v;
            }
            return std::nullopt;
        }
        for (std::size_t c = next; c + (w_ - depth) <= total; ++c) {
            const std::size_t b = block_of(c);
            if (b > checked_block) {
                if (!may_enter(b)) break;
                checked_block = b;
            }
            if (!charge()) return std::nullopt;
            if (!stack_.push(cols_.row(c))) continue;
            chosen_.push_back(c);
            auto found = extend(c + 1);
            chosen_.pop_back();
            stack_.pop();
            if (found) return found;
            if (exhausted_.load(std::memory_order_relaxed)) return std::nullopt;
        }
        return std::nullopt;
    }

    const Field& f_;
    const Matrix& sliding_;
    const Matrix& cols_;
    std::size_t n_;
    std::size_t kappa_;
    std::size_t w_;
    const std::vector<std::size_t>& lower_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& steps_;
    std::atomic<bool>& exhausted_;
    EchelonStack<Field> stack_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<Vec> search_weight(const Field& f, const Matrix& sliding, std::size_t n, std::size_t w,
                                 const std::vector<std::size_t>& prefix_lower, std::size_t kappa,
                                 const SearchLimits& limits, std::uint64_t* steps, bool* exhausted) {
    require(w >= 1, ErrorCode::InvalidParams, "weight must be positive");
    const Matrix cols = transpose(sliding);
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> out_of_budget{false};
    const std::size_t firsts = std::min(n, cols.rows());
    std::vector<std::optional<Vec>> found(firsts);

    auto work = [&](std::size_t c0) {
        SupportSearch s(f, sliding, cols, n, kappa, w, prefix_lower, limits.budget, used, out_of_budget);
        found[c0] = s.run(c0);
    };

    if (limits.jobs <= 1) {
        for (std::size_t c0 = 0; c0 < firsts; ++c0) {
            work(c0);
            if (found[c0] || out_of_budget) break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{kInf};
        auto worker = [&] {
            for (;;) {
                const std::size_t c0 = next.fetch_add(1);
                if (c0 >= firsts || out_of_budget) return;
                if (c0 > best.load()) continue;
                work(c0);
                if (found[c0]) {
                    std::size_t cur = best.load();
                    while (c0 < cur && !best.compare_exchange_weak(cur, c0)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < limits.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (steps) *steps += used.load();
    for (auto& v : found)
        if (v) {
            if (exhausted) *exhausted = false;
            return v;
        }
    if (exhausted) *exhausted = out_of_budget.load();
    return std::nullopt;
}

StackedCode stacked_code(const Field& f, const PolyMatrix& p, std::uint64_t budget) {
    Matrix stack(0, p.cols());
    for (const auto& c : p.coeffs()) stack = vstack(stack, c);
    StackedCode out;
    auto v = min_weight_vector(f, stack, budget);
    if (v) {
        out.d = weight(*v);
        out.witness = std::move(*v);
    }
    return out;
}

ColumnDistanceEngine::ColumnDistanceEngine(const Field& f, PolyMatrix parity, SearchLimits limits)
    : f_(f), parity_(std::move(parity)), desc_(describe(parity_)), limits_(limits) {
    stacked_ = stacked_code(f_, parity_, limits_.budget);
}

const ColumnDistance& ColumnDistanceEngine::at(std::size_t j) {
    const std::size_t n = desc_.n, k = desc_.k, kap = parity_.rows();
    while (results_.size() <= j) {
        const std::size_t jj = results_.size();
        const std::size_t cap = column_distance_cap(n, k, jj);
        const std::size_t s = stacked_.d.value_or(kInf);
        const std::size_t upper = std::min(s, cap);
        std::vector<std::size_t> lower;
        for (const auto& r : results_) lower.push_back(r.value);
        const std::size_t lo = jj == 0 ? 1 : results_.back().value;
        const Matrix sliding = sliding_matrix(parity_, jj);

        ColumnDistance res;
        bool done = false;
        for (std::size_t w = lo; w < upper && !done; ++w) {
            bool exhausted = false;
            auto v = search_weight(f_, sliding, n, w, lower, kap, limits_, &res.steps, &exhausted);
            if (v) {
                res.value = w;
                res.witness = std::move(*v);
                done = true;
            } else if (exhausted) {
                res.value = w;
                res.exact = false;
                done = true;
            }
        }
        if (!done) {
            if (s <= cap) {
                res.value = s;
                res.witness.assign((jj + 1) * n, 0);
                std::copy(stacked_.witness.begin(), stacked_.witness.end(), res.witness.begin());
            } else {
                bool exhausted = false;
                auto v = search_weight(f_, sliding, n, cap, lower, kap, limits_, &res.steps, &exhausted);
                if (v) {
                    res.value = cap;
                    res.witness = std::move(*v);
                } else if (exhausted) {
                    res.value = cap;
                    res.exact = false;
                } else {
                    fail(ErrorCode::PropertyViolation,
                         "no sliding-kernel vector of weight <= " + std::to_string(cap) + " at j=" + std::to_string(jj));
                }
            }
        }
        results_.push_back(std::move(res));
    }
    return results_[j];
}

std::optional<ColumnDistance> ColumnDistanceEngine::terminated_below(std::size_t j, std::size_t below) {
    const std::size_t from = at(j).value;
    std::vector<std::size_t> lower;
    for (std::size_t l = 0; l < j; ++l) lower.push_back(results_[l].value);
    const Matrix term = terminated_matrix(parity_, j);
    ColumnDistance res;
    for (std::size_t w = std::max<std::size_t>(from, 1); w < below; ++w) {
        bool exhausted = false;
        auto v = search_weight(f_, term, desc_.n, w, lower, parity_.rows(), limits_, &res.steps, &exhausted);
        if (v) {
            res.value = w;
            res.witness = std::move(*v);
            return res;
        }
        if (exhausted) {
            res.value = w;
            res.exact = false;
            return res;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Free distance and classification

DfreeBounds dfree_bounds(const ConvCodeDesc& desc, std::size_t block_d, std::size_t d0, std::size_t dm) {
    const auto idx = singleton_and_indices(desc.n, desc.k, desc.delta);
    return {std::min(d0 + dm, block_d), std::min(block_d, idx.bound)};
}

BlockSplit block_split_certificate(const Field& f, const ConvCodeDesc& desc, SearchOptions options) {
    BlockSplit out;
    const PolyMatrix& p = desc.parity;
    if (p.memory() != 1) {
        out.reason = "memory is not 1";
        return out;
    }
    const Matrix& g0 = p.coeffs()[0];
    const Matrix g1 = drop_zero_rows(p.coeffs()[1]);
    const Matrix stack = vstack(g0, g1);
    const std::size_t n = desc.n;
    const std::size_t rs = rank(f, stack);
    if (rank(f, g0) != g0.rows()) {
        out.reason = "P0 is rank deficient";
        return out;
    }
    if (rs != stack.rows()) {
        out.reason = "stacked rows are dependent";
        return out;
    }
    if (rs < 2 || rs >= n) {
        out.reason = "stacked block code dimension outside [1, n-2]";
        return out;
    }
    out.d_stack = min_distance(f, stack, options);
    out.d0 = min_distance(f, g0, options);
    out.dm = min_distance(f, g1, options);
    const auto b = dfree_bounds(desc, out.d_stack, out.d0, out.dm);
    out.lower = b.lower;
    out.upper = b.upper;
    out.applicable = true;
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Refuted: return "Refuted";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

ConvReport classify(const Field& f, const PolyMatrix& parity, ClassifyOptions options) {
    const ConvCodeDesc desc = describe(parity);
    ConvReport rep;
    rep.n = desc.n;
    rep.k = desc.k;
    rep.delta = desc.delta;
    rep.nu = desc.nu;
    rep.indices = singleton_and_indices(desc.n, desc.k, desc.delta);
    const std::size_t bound = rep.indices.bound;

    ColumnDistanceEngine engine(f, parity, options.limits);
    std::size_t lower = 0;
    std::size_t upper = bound;
    if (auto s = engine.stacked_distance()) {
        upper = std::min(upper, *s);
        rep.certificates.push_back({"stacked-code", 0, *s, "constant codeword of weight " + std::to_string(*s)});
    }

    if (options.use_block_split && desc.nu == 1 && desc.delta > 0) {
        SearchOptions so;
        so.budget = options.limits.budget;
        const BlockSplit cert = block_split_certificate(f, desc, so);
        if (cert.applicable) {
            lower = std::max(lower, cert.lower);
            upper = std::min(upper, cert.upper);
            rep.certificates.push_back({"block-split", cert.lower, cert.upper,
                                        "d0=" + std::to_string(cert.d0) + " dm=" + std::to_string(cert.dm) +
                                            " d=" + std::to_string(cert.d_stack)});
        } else {
            rep.certificates.push_back({"block-split", 0, 0, "not applicable: " + cert.reason});
        }
    }

    auto compute = [&](std::size_t j) {
        const ColumnDistance& cd = engine.at(j);
        rep.column_distances[j] = cd;
        if (!cd.exact) rep.budget_exhausted = true;
        lower = std::max(lower, cd.value);
    };

    const std::size_t jtarget = std::max({options.jmax, rep.indices.M, rep.indices.L});
    for (std::size_t j = 0; j <= jtarget; ++j) compute(j);
    const std::size_t jext = options.jmax + desc.delta;
    for (std::size_t j = jtarget + 1; j <= jext && lower < bound && upper >= bound; ++j) {
        if (!rep.column_distances.rbegin()->second.exact) break;
        compute(j);
    }
    {
        const auto& [jl, cd] = *rep.column_distances.rbegin();
        rep.certificates.push_back({"column-distance", cd.value, upper,
                                    "d_" + std::to_string(jl) + "^c=" + std::to_string(cd.value) +
                                        (cd.exact ? "" : " (lower bound)")});
    }

    // Look for a light terminated codeword when the bounds do not meet.
    if (lower < bound && upper >= bound) {
        for (std::size_t j = 0; j <= jext && upper >= bound; ++j) {
            if (j < rep.column_distances.size() && !rep.column_distances[j].exact) break;
            if (auto t = engine.terminated_below(j, bound)) {
                if (!t->exact) {
                    rep.budget_exhausted = true;
                    break;
                }
                upper = t->value;
                rep.certificates.push_back({"terminated", 0, t->value,
                                            "codeword of degree <= " + std::to_string(j) + " and weight " +
                                                std::to_string(t->value)});
            }
        }
    }

    for (const auto& [j, cd] : rep.column_distances) {
        const std::size_t cap = column_distance_cap(desc.n, desc.k, j);
        require(cd.value <= cap, ErrorCode::PropertyViolation, "column distance above cap at j=" + std::to_string(j));
        require(!cd.exact || cd.value <= upper, ErrorCode::PropertyViolation,
                "column distance exceeds the free-distance upper bound at j=" + std::to_string(j));
        if (cd.exact && cd.value == cap) {
            for (std::size_t i = 0; i < j; ++i) {
                const auto& ci = rep.column_distances.at(i);
                if (ci.exact && ci.value != column_distance_cap(desc.n, desc.k, i)) {
                    rep.cascade_counterexamples.push_back(j);
                    break;
                }
            }
        }
    }

    rep.dfree_lower = std::min(lower, upper);
    rep.dfree_upper = upper;
    require(lower <= upper, ErrorCode::InternalInvariant, "free-distance bounds cross");

    if (lower >= bound)
        rep.mds = Verdict::Confirmed;
    else if (upper < bound)
        rep.mds = Verdict::Refuted;

    const auto& dm = rep.column_distances.at(rep.indices.M);
    if (dm.exact)
        rep.smds = dm.value == bound ? Verdict::Confirmed : Verdict::Refuted;
    else if (dm.value >= bound)
        rep.smds = Verdict::Confirmed;

    const std::size_t mdp_target = column_distance_cap(desc.n, desc.k, rep.indices.L);
    const auto& dl = rep.column_distances.at(rep.indices.L);
    if (dl.exact)
        rep.mdp = dl.value == mdp_target ? Verdict::Confirmed : Verdict::Refuted;
    else if (dl.value >= mdp_target)
        rep.mdp = Verdict::Confirmed;
    return rep;
}

// ---------------------------------------------------------------------------
// Row omission and kernels

PolyMatrix omit_rows(const PolyMatrix& p, const std::vector<std::size_t>& which) {
    const auto degs = p.row_degrees();
    const int top = degs.empty() ? -1 : *std::max_element(degs.begin(), degs.end());
    std::vector<bool> drop(p.rows(), false);
    for (auto r : which) {
        require(r < p.rows(), ErrorCode::IndexOutOfRange, "row index " + std::to_string(r) + " out of range");
        require(degs[r] == top && top > 0, ErrorCode::NotMaximalDegreeRow,
                "row " + std::to_string(r) + " has degree " + std::to_string(degs[r]) + ", maximum is " +
                    std::to_string(top));
        drop[r] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < p.rows(); ++r)
        if (!drop[r]) keep.push_back(r);
    return p.select_rows(keep);
}

PolyMatrix minimal_right_kernel(const Field& f, const PolyMatrix& p, std::size_t max_degree) {
    const std::size_t n = p.cols(), kap = p.rows(), nu = p.memory();
    const std::size_t target = n - kap;
    EchelonStack<Field> leads(f, n);
    std::vector<std::vector<Poly>> rows;
    for (std::size_t d = 0; rows.size() < target; ++d) {
        require(d <= max_degree, ErrorCode::SearchBudgetExceeded,
                "kernel basis needs degree above " + std::to_string(max_degree));
        // P(D) h(D) = 0 as a block Toeplitz system on (h_0, ..., h_d).
        Matrix t((nu + d + 1) * kap, (d + 1) * n);
        for (std::size_t r = 0; r <= nu + d; ++r)
            for (std::size_t c = 0; c <= d; ++c) {
                if (r < c || r - c > nu) continue;
                const Matrix blk = p.coeff(r - c);
                for (std::size_t a = 0; a < kap; ++a)
                    for (std::size_t b = 0; b < n; ++b) t(r * kap + a, c * n + b) = blk(a, b);
            }
        for (const auto& v : nullspace(f, t)) {
            if (rows.size() == target) break;
            const Vec top(v.begin() + d * n, v.end());
            if (!leads.push(top)) continue;
            std::vector<Poly> row(n, Poly(d + 1, 0));
            for (std::size_t c = 0; c <= d; ++c)
                for (std::size_t b = 0; b < n; ++b) row[b][c] = v[c * n + b];
            for (auto& e : row) poly::trim(e);
            rows.push_back(std::move(row));
        }
    }
    return PolyMatrix::from_entries(rows.size(), n, rows);
}

}  // namespace mdsconv
