#include "mdsconv/constructions.hpp"

#include <algorithm>
#include <tuple>

namespace mdsconv {

namespace {

const std::array<std::pair<Family, std::string_view>, 5> kNames{{
    {Family::Sec3, "sec3"},
    {Family::Sec4, "sec4"},
    {Family::Sec5ConstructionOne, "sec5c1"},
    {Family::Sec5ConstructionTwo, "sec5c2"},
    {Family::Sec5Part2, "sec5p2"},
}};

std::pair<unsigned, unsigned> field_shape(unsigned q) {
    const auto pm = prime_power(q);
    require(pm.has_value(), ErrorCode::InvalidParams, "q=" + std::to_string(q) + " is not a prime power");
    return *pm;
}

FieldPtr base_field(unsigned q, const FieldSetup& setup) {
    const auto [p, m] = field_shape(q);
    return make_field(p, m, setup.modulus);
}

ExtFieldPtr ext_field(const FieldPtr& base, const FieldSetup& setup) {
    ExtFieldOptions o;
    o.modulus = setup.ext_modulus;
    o.theta_ext = setup.theta_ext;
    return make_ext_field(base, o);
}

std::vector<std::size_t> range_rows(std::size_t from, std::size_t count) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = from + i;
    return idx;
}

// Coefficients of a polynomial known to lie in the base field.
Poly to_base(const ExtField& ext, const Poly& g) {
    Poly out;
    for (Elem c : g) {
        require(ext.in_base(c), ErrorCode::InternalInvariant, "generator coefficient outside the base field");
        out.push_back(c);
    }
    return out;
}

// x^len - c over the base field.
Poly binomial(const Field& f, std::size_t len, Elem c) {
    Poly m(len + 1, 0);
    m[0] = f.neg(c);
    m[len] = 1;
    return m;
}

Bundle finish(FamilySpec spec, const FieldSetup& setup, FieldPtr field, ExtFieldPtr ext, Matrix block_parity,
              std::optional<Poly> g, std::optional<Poly> modulus, Matrix h0, Matrix h1) {
    Bundle b;
    b.spec = spec;
    b.setup = setup;
    b.field = field;
    b.ext = std::move(ext);
    b.block = make_block_code(field, std::move(block_parity), std::move(g), std::move(modulus));
    b.parity = unit_memory_parity(*field, h0, h1);
    b.h0 = std::move(h0);
    b.h1 = std::move(h1);
    b.desc = describe(b.parity);
    b.expected = expected_flags(spec);
    return b;
}

// Cyclic code with roots beta^j, |j| <= tau, as generator and modulus.
std::pair<Poly, Poly> cyclic_polys(const ExtField& ext, std::size_t tau) {
    const auto t = static_cast<std::int64_t>(tau);
    const auto roots = geometric_roots(ext, 1, ext.beta(), -t, t);
    require(base_field_closure_check(ext, roots), ErrorCode::InternalInvariant, "root set not Frobenius-closed");
    const Poly g = to_base(ext, generator_from_roots(ext, roots));
    return {g, binomial(ext.base(), ext.base().q() + 1, 1)};
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (const auto& [fam, n] : kNames)
        if (n == name) return fam;
    fail(ErrorCode::InvalidParams, "unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> all{Family::Sec3, Family::Sec4, Family::Sec5ConstructionOne,
                                         Family::Sec5ConstructionTwo, Family::Sec5Part2};
    return all;
}

FamilySpec make_spec(Family family, unsigned q, std::size_t n, std::size_t k, std::size_t delta, std::size_t tau) {
    field_shape(q);
    FamilySpec s;
    s.family = family;
    s.q = q;
    s.k = k;
    s.delta = delta;
    const std::string where = std::string(to_string(family)) + ": ";
    switch (family) {
        case Family::Sec3:
        case Family::Sec4: {
            if (family == Family::Sec4) n = q;
            s.n = n;
            if (family == Family::Sec3)
                require(k >= 1 && k < n && n + 1 <= q, ErrorCode::InvalidParams,
                        where + "need 1 <= k < n <= q-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
            else
                require(k >= 1 && k < q, ErrorCode::InvalidParams, where + "need 1 <= k < q");
            require(delta >= 1, ErrorCode::InvalidParams, where + "need delta >= 1");
            require(n - k > delta && n - k - delta >= delta, ErrorCode::InvalidParams,
                    where + "gamma = n-k-delta must be >= delta (n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " delta=" + std::to_string(delta) + ")");
            s.gamma = n - k - delta;
            break;
        }
        case Family::Sec5ConstructionOne:
        case Family::Sec5Part2: {
            const bool one = family == Family::Sec5ConstructionOne;
            require(q >= 5, ErrorCode::InvalidParams, where + "need q >= 5");
            require(k >= 1 && k < q, ErrorCode::InvalidParams, where + "need 1 <= k < q");
            require((k % 2) == ((q + (one ? 0 : 1)) % 2), ErrorCode::ParityConditionViolated,
                    where + (one ? "k must be congruent to q mod 2" : "k must be congruent to q+1 mod 2"));
            require(delta >= 1, ErrorCode::InvalidParams, where + "need delta >= 1");
            s.n = q + 1;
            s.tau = one ? (q - k) / 2 : (q - k - 1) / 2;
            require(s.tau + 1 > delta, ErrorCode::InvalidParams,
                    where + "gamma = tau+1-delta must be positive (tau=" + std::to_string(s.tau) + ")");
            s.gamma = s.tau + 1 - delta;
            if (one)
                require(s.gamma > delta, ErrorCode::InvalidParams,
                        where + "gamma=" + std::to_string(s.gamma) + " must exceed delta=" + std::to_string(delta));
            else
                require(s.gamma >= delta, ErrorCode::InvalidParams,
                        where + "gamma=" + std::to_string(s.gamma) + " must be >= delta=" + std::to_string(delta));
            break;
        }
        case Family::Sec5ConstructionTwo: {
            require(q % 2 == 0, ErrorCode::OddFieldSize, where + "q must be even");
            require(q >= 4, ErrorCode::InvalidParams, where + "need q >= 4");
            require(tau >= 1 && 2 * tau + 1 <= q, ErrorCode::InvalidParams,
                    where + "need 1 <= tau <= (q-1)/2, got tau=" + std::to_string(tau));
            s.n = q + 1;
            s.tau = tau;
            s.k = q - 2 * tau;
            s.delta = tau;
            s.r = tau / 2 + 1;
            s.s = (tau + 1) / 2;
            break;
        }
    }
    return s;
}

ExpectedFlags expected_flags(const FamilySpec& s) {
    ExpectedFlags e;
    switch (s.family) {
        case Family::Sec3:
        case Family::Sec4: {
            const std::size_t r = s.n - s.k;
            e.mds = 2 * s.delta <= r;
            e.mdp = 2 * s.delta < r;
            e.smds = 3 * s.delta <= r + 1;
            break;
        }
        case Family::Sec5ConstructionOne:
            e.mds = e.smds = e.mdp = 6 * s.delta <= s.q - s.k + 2;
            break;
        case Family::Sec5Part2:
            e.mds = e.smds = e.mdp = 6 * s.delta <= s.q - s.k + 1;
            break;
        case Family::Sec5ConstructionTwo:
            // L = 0 and the kernel of H0~ is MDS, so d_0^c = n-k+1.
            e.mds = e.mdp = true;
            break;
    }
    return e;
}

ConvParams conv_params(const FamilySpec& s) {
    switch (s.family) {
        case Family::Sec5ConstructionOne:
        case Family::Sec5Part2: return {s.n, s.k + 2 * s.delta, 2 * s.delta};
        default: return {s.n, s.k + s.delta, s.delta};
    }
}

Bundle sec3_code(unsigned q, std::size_t n, std::size_t k, std::size_t delta, const FieldSetup& setup) {
    const FamilySpec spec = make_spec(Family::Sec3, q, n, k, delta);
    const FieldPtr field = base_field(q, setup);
    const Field& f = *field;
    const auto rows = static_cast<std::int64_t>(n - k);
    const auto roots = geometric_roots(f, 1, f.theta(), 0, rows - 1);
    const Matrix h = root_parity_matrix(f, roots, n);
    Matrix h0 = select_rows(h, range_rows(0, spec.gamma));
    Matrix h1 = select_rows(h, range_rows(spec.gamma, delta));
    Poly g = generator_from_roots(f, roots);
    Poly fx = generator_from_roots(f, geometric_roots(f, 1, f.theta(), 0, static_cast<std::int64_t>(n) - 1));
    return finish(spec, setup, field, nullptr, h, std::move(g), std::move(fx), std::move(h0), std::move(h1));
}

Bundle sec4_code(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup) {
    const FamilySpec spec = make_spec(Family::Sec4, q, q, k, delta);
    const FieldPtr field = base_field(q, setup);
    const Field& f = *field;
    std::vector<Elem> points{0};
    for (unsigned i = 1; i < q; ++i) points.push_back(f.theta_pow(i));
    const Matrix h = evaluation_parity_matrix(f, points, q - k, std::vector<Elem>(q, 1));
    Matrix h0 = select_rows(h, range_rows(0, spec.gamma));
    std::vector<std::size_t> desc_rows;
    for (std::size_t i = delta; i-- > 0;) desc_rows.push_back(spec.gamma + i);
    Matrix h1 = select_rows(h, desc_rows);
    return finish(spec, setup, field, nullptr, h, std::nullopt, std::nullopt, std::move(h0), std::move(h1));
}

Bundle sec5_construction_one(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup) {
    const FamilySpec spec = make_spec(Family::Sec5ConstructionOne, q, 0, k, delta);
    const FieldPtr field = base_field(q, setup);
    const ExtFieldPtr ext = ext_field(field, setup);
    const auto roots = geometric_roots(*ext, 1, ext->beta(), 0, static_cast<std::int64_t>(spec.tau));
    const Matrix h = root_parity_matrix(*ext, roots, q + 1);
    Matrix h0 = realify(*ext, select_rows(h, range_rows(0, spec.gamma)));
    Matrix h1 = realify(*ext, select_rows(h, range_rows(spec.gamma, delta)));
    auto [g, fx] = cyclic_polys(*ext, spec.tau);
    return finish(spec, setup, field, ext, realify(*ext, h), std::move(g), std::move(fx), std::move(h0),
                  std::move(h1));
}

Bundle sec5_construction_two(unsigned q, std::size_t tau, const FieldSetup& setup) {
    const FamilySpec spec = make_spec(Family::Sec5ConstructionTwo, q, 0, 0, 0, tau);
    const FieldPtr field = base_field(q, setup);
    const ExtFieldPtr ext = ext_field(field, setup);
    const auto roots = geometric_roots(*ext, 1, ext->beta(), 0, static_cast<std::int64_t>(tau));
    const Matrix h = root_parity_matrix(*ext, roots, q + 1);
    std::vector<std::size_t> even, odd;
    for (std::size_t j = 0; j <= tau; ++j) (j % 2 == 0 ? even : odd).push_back(j);
    Matrix he = realify(*ext, select_rows(h, even));
    Matrix ho = realify(*ext, select_rows(h, odd));
    // 2r-1 and 2s differ in parity, so exactly one side is larger.
    const bool even_top = 2 * spec.r - 1 > 2 * spec.s;
    auto [g, fx] = cyclic_polys(*ext, tau);
    return finish(spec, setup, field, ext, realify(*ext, h), std::move(g), std::move(fx),
                  even_top ? std::move(he) : std::move(ho), even_top ? std::move(ho) : std::move(he));
}

Bundle sec5_part2_code(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup) {
    const FamilySpec spec = make_spec(Family::Sec5Part2, q, 0, k, delta);
    const FieldPtr field = base_field(q, setup);
    const ExtFieldPtr ext = ext_field(field, setup);
    const auto t = static_cast<std::int64_t>(spec.tau);
    const auto roots = geometric_roots(*ext, ext->theta(), ext->beta(), 1, t + 1);
    const Matrix h = root_parity_matrix(*ext, roots, q + 1);
    Matrix h0 = realify(*ext, select_rows(h, range_rows(0, spec.gamma)));
    Matrix h1 = realify(*ext, select_rows(h, range_rows(spec.gamma, delta)));

    const auto all_roots = geometric_roots(*ext, ext->theta(), ext->beta(), -t, t + 1);
    require(base_field_closure_check(*ext, all_roots), ErrorCode::InternalInvariant, "root set not Frobenius-closed");
    Poly g = to_base(*ext, generator_from_roots(*ext, all_roots));
    const Elem norm = ext->pow(ext->theta(), q + 1);
    require(ext->in_base(norm), ErrorCode::InternalInvariant, "theta^(q+1) outside the base field");
    Poly fx = binomial(*field, q + 1, norm);
    return finish(spec, setup, field, ext, realify(*ext, h), std::move(g), std::move(fx), std::move(h0),
                  std::move(h1));
}

Bundle build(const FamilySpec& s, const FieldSetup& setup) {
    switch (s.family) {
        case Family::Sec3: return sec3_code(s.q, s.n, s.k, s.delta, setup);
        case Family::Sec4: return sec4_code(s.q, s.k, s.delta, setup);
        case Family::Sec5ConstructionOne: return sec5_construction_one(s.q, s.k, s.delta, setup);
        case Family::Sec5ConstructionTwo: return sec5_construction_two(s.q, s.tau, setup);
        case Family::Sec5Part2: return sec5_part2_code(s.q, s.k, s.delta, setup);
    }
    fail(ErrorCode::InvalidParams, "unknown family");
}

std::vector<FamilySpec> admissible_parameters(unsigned q, const std::vector<Family>& families) {
    std::vector<FamilySpec> out;
    if (!prime_power(q)) return out;
    auto has = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };
    if (has(Family::Sec3))
        for (std::size_t n = 2; n + 1 <= q; ++n)
            for (std::size_t k = 1; k < n; ++k)
                for (std::size_t d = 1; 2 * d <= n - k; ++d) out.push_back(make_spec(Family::Sec3, q, n, k, d));
    if (has(Family::Sec4))
        for (std::size_t k = 1; k < q; ++k)
            for (std::size_t d = 1; 2 * d <= q - k; ++d) out.push_back(make_spec(Family::Sec4, q, q, k, d));
    if (q >= 5) {
        for (std::size_t k = 1; k < q; ++k) {
            const bool one = k % 2 == q % 2;
            const Family fam = one ? Family::Sec5ConstructionOne : Family::Sec5Part2;
            if (!has(fam)) continue;
            const std::size_t slack = q - k + (one ? 2 : 1);
            for (std::size_t d = 1; 6 * d <= slack; ++d) out.push_back(make_spec(fam, q, 0, k, d));
        }
    }
    if (has(Family::Sec5ConstructionTwo) && q % 2 == 0 && q >= 4)
        for (std::size_t tau = 1; 2 * tau + 1 <= q; ++tau)
            out.push_back(make_spec(Family::Sec5ConstructionTwo, q, 0, 0, 0, tau));
    std::sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) {
        return std::tie(a.family, a.n, a.k, a.delta) < std::tie(b.family, b.n, b.k, b.delta);
    });
    return out;
}

OmissionResult omission_exploration(unsigned q, std::size_t k, std::size_t delta, const FieldSetup& setup) {
    require(q % 2 == 0 && q >= 4, ErrorCode::InvalidParams, "omission exploration needs even q >= 4");
    require(k >= 1 && delta >= 1 && 2 * (delta + k) <= q + 1, ErrorCode::InvalidParams,
            "need k, delta >= 1 and delta + k <= (q+1)/2");
    const Bundle b = sec5_construction_two(q, delta + k - 1, setup);
    const Field& f = *b.field;
    OmissionResult out;
    out.generator = minimal_right_kernel(f, b.parity);
    const auto degs = out.generator.row_degrees();
    const int top = *std::max_element(degs.begin(), degs.end());
    for (std::size_t r = degs.size(); r-- > 0 && out.omitted.size() + 1 < k;)
        if (degs[r] == top) out.omitted.push_back(r);
    require(out.omitted.size() + 1 == k, ErrorCode::InvalidParams,
            "generator has fewer than " + std::to_string(k - 1) + " rows of maximal degree");
    std::sort(out.omitted.begin(), out.omitted.end());
    out.reduced = omit_rows(out.generator, out.omitted);
    out.parity = minimal_right_kernel(f, out.reduced);
    out.target = {q + 1, q + 2 - 2 * k - delta, delta};
    return out;
}

}  // namespace mdsconv
