#include "mdsconv/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <tuple>

namespace mdsconv {

namespace {

void diff_coeff(const std::string& name, const Matrix& got, const Matrix& want, std::vector<std::string>& out) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        out.push_back(name + ": shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + ", want " +
                      std::to_string(want.rows()) + "x" + std::to_string(want.cols()));
        return;
    }
    for (std::size_t r = 0; r < got.rows(); ++r)
        for (std::size_t c = 0; c < got.cols(); ++c)
            if (got(r, c) != want(r, c))
                out.push_back(name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: got " +
                              std::to_string(got(r, c)) + ", want " + std::to_string(want(r, c)));
}

std::vector<ClaimCheck> claims_of(const ConvReport& r, const ExpectedFlags& e) {
    return {{"mds", e.mds, r.mds}, {"smds", e.smds, r.smds}, {"mdp", e.mdp, r.mdp}};
}

}  // namespace

bool ExampleCheck::ok() const {
    if (!parity_match || !dfree_exact || !routes_agree) return false;
    for (const auto& c : claims)
        if (!c.ok()) return false;
    return true;
}

ExampleCheck check_example(const ExampleFixture& fx, const ClassifyOptions& options) {
    ExampleCheck out;
    out.id = fx.id;
    out.label = fx.label();
    out.dfree_expected = fx.dfree;

    const Bundle b = build(fx.spec(), fx.setup());
    const PolyMatrix want = fx.parity();
    for (std::size_t t = 0; t < 2; ++t) diff_coeff("G" + std::to_string(t), b.parity.coeff(t), want.coeff(t), out.diff);
    out.parity_match = out.diff.empty() && b.parity == want;

    const Field& f = *b.field;
    out.report = classify(f, b.parity, options);
    out.split = block_split_certificate(f, b.desc);
    const ConvReport& r = out.report;
    out.dfree_exact = r.dfree_lower == fx.dfree && r.dfree_upper == fx.dfree && r.indices.bound == fx.dfree;
    out.split_pinches = out.split.applicable && out.split.lower == fx.dfree && out.split.upper == fx.dfree;
    for (const auto& [j, cd] : r.column_distances)
        if (cd.exact && cd.value == r.indices.bound) {
            out.cd_route_j = j;
            break;
        }
    bool cd_consistent = true;
    for (const auto& [j, cd] : r.column_distances)
        if (cd.value > fx.dfree) cd_consistent = false;
    out.routes_agree = out.split.applicable && out.split.lower <= fx.dfree && fx.dfree <= out.split.upper &&
                       cd_consistent && (out.split_pinches || out.cd_route_j.has_value());
    out.claims = claims_of(r, fx.claimed);
    return out;
}

bool any_refuted(const ConvReport& r, const ExpectedFlags& e) {
    for (const auto& c : claims_of(r, e))
        if (c.claimed && c.verdict == Verdict::Refuted) return true;
    return false;
}

bool any_inconclusive(const ConvReport& r, const ExpectedFlags& e) {
    for (const auto& c : claims_of(r, e))
        if (c.claimed && c.verdict == Verdict::Inconclusive) return true;
    return false;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
    require(!options.families.empty(), ErrorCode::InvalidParams, "empty family list");
    std::vector<SweepRow> rows;
    for (unsigned q : options.qs) {
        require(prime_power(q).has_value(), ErrorCode::InvalidParams, "q=" + std::to_string(q) + " is not a prime power");
        for (const auto& spec : admissible_parameters(q, options.families)) {
            SweepRow row;
            row.spec = spec;
            row.expected = expected_flags(spec);
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.spec.q, a.spec.family, a.spec.n, a.spec.k, a.spec.delta) <
               std::tie(b.spec.q, b.spec.family, b.spec.n, b.spec.k, b.spec.delta);
    });

    ClassifyOptions co = options.classify;
    co.limits.jobs = 1;
    auto evaluate = [&](SweepRow& row) {
        const auto t0 = std::chrono::steady_clock::now();
        const Bundle b = build(row.spec);
        const Minimality m = minimality_check(*b.field, b.parity);
        row.minimal = m.row_reduced && m.basic;
        const ConvParams want = conv_params(row.spec);
        row.degree_ok = m.degree == want.delta;
        row.params_ok = b.desc.n == want.n && b.desc.k == want.k && b.desc.delta == want.delta;
        row.report = classify(*b.field, b.parity, co);
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (auto& row : rows) evaluate(row);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(rows.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
                try {
                    evaluate(rows[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing) {
    std::size_t jmax = 0;
    for (const auto& row : rows)
        if (!row.report.column_distances.empty())
            jmax = std::max(jmax, row.report.column_distances.rbegin()->first);
    std::ostringstream os;
    os << "family,q,n,k,delta";
    for (std::size_t j = 0; j <= jmax; ++j) os << ",d" << j << "c";
    os << ",dfree_lo,dfree_hi,mds,smds,mdp,ms_elapsed\n";
    for (const auto& row : rows) {
        const auto& s = row.spec;
        const auto& r = row.report;
        os << to_string(s.family) << "," << s.q << "," << s.n << "," << s.k << "," << s.delta;
        for (std::size_t j = 0; j <= jmax; ++j) {
            os << ",";
            if (auto it = r.column_distances.find(j); it != r.column_distances.end())
                os << it->second.value << (it->second.exact ? "" : "+");
        }
        os << "," << r.dfree_lower << "," << r.dfree_upper << "," << to_string(r.mds) << "," << to_string(r.smds)
           << "," << to_string(r.mdp) << ",";
        if (timing) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(3);
            ms << row.ms;
            os << ms.str();
        } else {
            os << 0;
        }
        os << "\n";
    }
    return os.str();
}

Json sweep_json(const std::vector<SweepRow>& rows, bool timing) {
    Json out = Json::array();
    for (const auto& row : rows) {
        const auto& s = row.spec;
        out.push_back(Json{{"family", to_string(s.family)},
                           {"q", s.q},
                           {"n", s.n},
                           {"k", s.k},
                           {"delta", s.delta},
                           {"expected", expected_json(row.expected)},
                           {"minimal", row.minimal},
                           {"report", report_json(row.report)},
                           {"ms_elapsed", timing ? row.ms : 0.0}});
    }
    return out;
}

}  // namespace mdsconv
