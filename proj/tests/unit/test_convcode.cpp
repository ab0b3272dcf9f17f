#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mdsconv/convcode.hpp"
#include "oracle.hpp"

using namespace mdsconv;

namespace {

PolyMatrix random_unit_memory(std::mt19937& rng, std::size_t kappa, std::size_t n, unsigned q) {
    for (;;) {
        const Matrix g0 = testing::random_matrix(rng, kappa, n, q);
        const Matrix g1 = testing::random_matrix(rng, kappa, n, q);
        bool zero_row = false;
        for (std::size_t r = 0; r < kappa; ++r) zero_row |= g0.row_is_zero(r) && g1.row_is_zero(r);
        if (!zero_row && !g1.is_zero()) return PolyMatrix(kappa, n, {g0, g1});
    }
}

std::vector<oracle::Rows> coeff_rows(const PolyMatrix& p) {
    std::vector<oracle::Rows> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_rows());
    return out;
}

}  // namespace

TEST_SUITE("convcode") {
    TEST_CASE("Singleton bound and indices") {
        for (std::size_t n = 2; n <= 10; ++n)
            for (std::size_t k = 1; k < n; ++k)
                for (std::size_t delta = 0; delta <= 6; ++delta) {
                    const auto s = singleton_and_indices(n, k, delta);
                    CHECK(s.bound == (n - k) * (delta / k + 1) + delta + 1);
                    CHECK(s.M == delta / k + (delta + (n - k) - 1) / (n - k));
                    CHECK(s.L == delta / k + delta / (n - k));
                }
        const auto ex1 = singleton_and_indices(7, 4, 2);
        CHECK(ex1.bound == 6);
        CHECK(ex1.M == 1);
        CHECK(ex1.L == 0);
        const auto block = singleton_and_indices(6, 2, 0);
        CHECK(block.bound == 5);
        CHECK(block.M == 0);
        CHECK(block.L == 0);
        const auto ex9 = singleton_and_indices(9, 5, 3);
        CHECK(ex9.bound == 8);
        CHECK(ex9.M == 1);
        CHECK(ex9.L == 0);
        CHECK(testing::error_code([] { singleton_and_indices(5, 0, 1); }) == ErrorCode::InvalidParams);
        CHECK(testing::error_code([] { singleton_and_indices(5, 5, 1); }) == ErrorCode::InvalidParams);
    }

    TEST_CASE("unit-memory parity pads H1 on top") {
        const auto f = make_field_of_order(3);
        const Matrix h0 = Matrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
        const Matrix h1 = Matrix::from_rows({{1, 2, 1, 0}});
        const PolyMatrix p = unit_memory_parity(*f, h0, h1);
        CHECK(p.coeff(0) == h0);
        CHECK(p.coeff(1) == Matrix::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 2, 1, 0}}));
        CHECK(p.memory() == 1);
        CHECK(unit_memory_parity(*f, h0, h0).coeff(1) == h0);
        CHECK(testing::error_code([&] { unit_memory_parity(*f, h1, h0); }) == ErrorCode::RowCountExceeded);
        const Matrix deficient = Matrix::from_rows({{1, 1, 0, 0}, {2, 2, 0, 0}});
        CHECK(testing::error_code([&] { unit_memory_parity(*f, deficient, h1); }) == ErrorCode::RankDeficient);
    }

    TEST_CASE("G0 v = G1 v = 0 exactly on the stacked kernel, exhaustively at q = 3, n = 6") {
        const auto f = make_field_of_order(3);
        std::mt19937 rng(36);
        for (int trial = 0; trial < 10; ++trial) {
            Matrix h;
            do h = testing::random_matrix(rng, 4, 6, 3);
            while (rank(*f, h) < 4);
            const Matrix h0 = select_rows(h, {0, 1, 2});
            const Matrix h1 = select_rows(h, {3});
            const PolyMatrix p = unit_memory_parity(*f, h0, h1);
            std::size_t total = 729;
            for (std::size_t code = 0; code < total; ++code) {
                Vec v(6);
                std::size_t c = code;
                for (auto& x : v) {
                    x = c % 3;
                    c /= 3;
                }
                const bool joint = mat_vec(*f, p.coeff(0), v) == Vec(3, 0) && mat_vec(*f, p.coeff(1), v) == Vec(3, 0);
                REQUIRE(joint == (mat_vec(*f, h, v) == Vec(4, 0)));
            }
        }
    }

    TEST_CASE("sliding matrix equals the convolution layout") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t kappa = 1 + trial % 3, n = kappa + 1 + trial % 3, nu = 1 + trial % 3;
            std::vector<Matrix> coeffs;
            for (std::size_t t = 0; t <= nu; ++t) coeffs.push_back(testing::random_matrix(rng, kappa, n, 5));
            coeffs.back()(0, 0) = 1;
            const PolyMatrix p(kappa, n, coeffs);
            for (std::size_t j = 0; j <= 3; ++j)
                CHECK(sliding_matrix(p, j).to_rows() == oracle::sliding(coeff_rows(p), kappa, n, j));
            CHECK(sliding_matrix(p, 0) == p.coeff(0));
            const Matrix t = terminated_matrix(p, 2);
            CHECK(t.rows() == (3 + nu) * kappa);
            CHECK(t.cols() == 3 * n);
        }
    }

    TEST_CASE("PolyMatrix trims and reports degrees") {
        const Matrix a = Matrix::from_rows({{1, 0}, {0, 0}});
        const Matrix z(2, 2);
        const PolyMatrix p(2, 2, {a, a, z});
        CHECK(p.memory() == 1);
        CHECK(p.row_degrees() == std::vector<int>{1, -1});
        CHECK(p.entry(0, 0) == Poly{1, 1});
        CHECK(p.entry(1, 1).empty());
        CHECK(PolyMatrix::from_entries(2, 2, {{{1, 1}, {}}, {{}, {}}}) == PolyMatrix(2, 2, {a, a}));
        CHECK(testing::error_code([&] { PolyMatrix(2, 3, {a}); }) == ErrorCode::InvalidParams);
    }

    TEST_CASE("column distances match brute-force enumeration") {
        std::mt19937 rng(99);
        for (const auto& [q, kappa, n] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{
                 {2, 2, 4}, {3, 2, 4}, {3, 1, 3}, {4, 2, 4}, {2, 3, 5}, {5, 1, 3}}) {
            const auto f = make_field_of_order(q);
            const oracle::Field o(f->p(), f->modulus());
            for (int trial = 0; trial < 6; ++trial) {
                const PolyMatrix p = random_unit_memory(rng, kappa, n, q);
                ColumnDistanceEngine eng(*f, p);
                for (std::size_t j = 0; j <= 2; ++j) {
                    if (oracle::span_size(q, (j + 1) * (n - kappa) + kappa) > 3e5) break;
                    const std::size_t want = oracle::column_distance(o, q, coeff_rows(p), kappa, n, j);
                    const ColumnDistance& got = eng.at(j);
                    REQUIRE(got.exact);
                    CHECK(got.value == want);
                    CHECK(weight(got.witness) == want);
                    CHECK(mat_vec(*f, sliding_matrix(p, j), got.witness) == Vec((j + 1) * kappa, 0));
                    CHECK(std::any_of(got.witness.begin(), got.witness.begin() + n, [](Elem x) { return x != 0; }));
                }
            }
        }
    }

    TEST_CASE("column distances do not depend on the worker count") {
        std::mt19937 rng(5);
        const auto f = make_field_of_order(4);
        for (int trial = 0; trial < 5; ++trial) {
            const PolyMatrix p = random_unit_memory(rng, 2, 5, 4);
            ColumnDistanceEngine one(*f, p, {.budget = 10'000'000, .jobs = 1});
            ColumnDistanceEngine many(*f, p, {.budget = 10'000'000, .jobs = 3});
            for (std::size_t j = 0; j <= 3; ++j) {
                CHECK(one.at(j).value == many.at(j).value);
                CHECK(one.at(j).witness == many.at(j).witness);
            }
        }
    }

    TEST_CASE("minimality checks") {
        const auto f = make_field_of_order(2);
        const auto m = minimality_check(*f, PolyMatrix(2, 3, {Matrix::from_rows({{1, 0, 1}, {0, 1, 1}})}));
        CHECK(m.row_reduced);
        CHECK(m.basic);
        CHECK(m.degree == 0);
        // Determinant D: row reduced fails and the minor gcd is not constant.
        const auto nr = minimality_check(*f, PolyMatrix::from_entries(2, 2, {{{1}, {0, 1}}, {{}, {0, 1}}}));
        CHECK_FALSE(nr.row_reduced);
        CHECK_FALSE(nr.basic);
        // Determinant 1 but dependent leading rows.
        const auto b = minimality_check(*f, PolyMatrix::from_entries(2, 2, {{{1, 1}, {0, 1}}, {{1}, {1}}}));
        CHECK(b.basic);
        CHECK_FALSE(b.row_reduced);
        const auto nb = minimality_check(*f, PolyMatrix::from_entries(2, 2, {{{1, 1}, {0, 1}}, {{0, 1}, {0, 1}}}));
        CHECK_FALSE(nb.basic);
        CHECK_FALSE(nb.row_reduced);
        CHECK(testing::error_code([&] {
                  minimality_check(*f, PolyMatrix::from_entries(2, 2, {{{1}, {0, 1}}, {{0, 1}, {0, 0, 1}}}));
              }) == ErrorCode::RankDeficient);
    }

    TEST_CASE("polynomial determinant matches the 2x2 and 3x3 expansion") {
        const auto f = make_field_of_order(5);
        std::mt19937 rng(8);
        auto rp = [&] {
            Poly p(1 + rng() % 3);
            for (auto& c : p) c = rng() % 5;
            poly::trim(p);
            return p;
        };
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
            for (auto& row : m)
                for (auto& e : row) e = rp();
            auto det2 = [&](const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
                return poly::sub(*f, poly::mul(*f, a, d), poly::mul(*f, b, c));
            };
            Poly want = poly::mul(*f, m[0][0], det2(m[1][1], m[1][2], m[2][1], m[2][2]));
            want = poly::sub(*f, want, poly::mul(*f, m[0][1], det2(m[1][0], m[1][2], m[2][0], m[2][2])));
            want = poly::add(*f, want, poly::mul(*f, m[0][2], det2(m[1][0], m[1][1], m[2][0], m[2][1])));
            CHECK(poly_determinant(*f, m) == want);
        }
    }

    TEST_CASE("describe and omit_rows bookkeeping") {
        const Matrix g0 = Matrix::from_rows({{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}});
        const Matrix g1 = Matrix::from_rows({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}});
        const PolyMatrix p(4, 5, {g0, g1});
        const ConvCodeDesc d = describe(p);
        CHECK(d.n == 5);
        CHECK(d.k == 1);
        CHECK(d.delta == 2);
        CHECK(d.nu == 1);
        const PolyMatrix r = omit_rows(p, {3});
        CHECK(r.rows() == 3);
        CHECK(describe(r).delta == 1);
        CHECK(testing::error_code([&] { omit_rows(p, {0}); }) == ErrorCode::NotMaximalDegreeRow);
        CHECK(testing::error_code([&] { omit_rows(p, {7}); }) == ErrorCode::IndexOutOfRange);
        CHECK(testing::error_code([&] { describe(PolyMatrix(2, 3, {Matrix::from_rows({{1, 0, 0}, {0, 0, 0}})})); }) ==
              ErrorCode::RankDeficient);
    }

    TEST_CASE("minimal right kernel is annihilated and minimal") {
        std::mt19937 rng(12);
        const auto f = make_field_of_order(3);
        for (int trial = 0; trial < 10; ++trial) {
            const PolyMatrix p = random_unit_memory(rng, 2, 4, 3);
            Minimality mp;
            try {
                mp = minimality_check(*f, p);
            } catch (const Error&) {
                continue;
            }
            const PolyMatrix k = minimal_right_kernel(*f, p);
            CHECK(k.rows() == 2);
            for (std::size_t r = 0; r < k.rows(); ++r)
                for (std::size_t i = 0; i < p.rows(); ++i) {
                    Poly acc;
                    for (std::size_t c = 0; c < p.cols(); ++c)
                        acc = poly::add(*f, acc, poly::mul(*f, p.entry(i, c), k.entry(r, c)));
                    CHECK(acc.empty());
                }
            const auto mk = minimality_check(*f, k);
            CHECK(mk.row_reduced);
            CHECK(mk.basic);
            if (mp.row_reduced && mp.basic) CHECK(mk.degree == mp.degree);
        }
    }

    TEST_CASE("free-distance bounds") {
        ConvCodeDesc d;
        d.n = 9;
        d.k = 5;
        d.delta = 3;
        const auto b = dfree_bounds(d, 8, 5, 4);
        CHECK(b.lower == 8);
        CHECK(b.upper == 8);
        const auto loose = dfree_bounds(d, 8, 3, 2);
        CHECK(loose.lower == 5);
        CHECK(loose.upper == 8);
    }

    TEST_CASE("degree-zero input reduces to the block-code check") {
        const auto f = make_field_of_order(5);
        const Matrix h = Matrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
        const ConvReport r = classify(*f, PolyMatrix(2, 4, {h}));
        CHECK(r.delta == 0);
        CHECK(r.indices.bound == 3);
        CHECK(r.dfree_lower == 3);
        CHECK(r.dfree_upper == 3);
        CHECK(r.mds == Verdict::Confirmed);
        CHECK(r.mdp == Verdict::Confirmed);
        CHECK(r.smds == Verdict::Confirmed);
    }

    TEST_CASE("a non-MDS code is refuted") {
        const auto f = make_field_of_order(2);
        // (1, 1, 0, 0) is a constant codeword of weight 2; the bound for (4, 2, 1) is 4.
        const PolyMatrix p(2, 4, {Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}),
                                  Matrix::from_rows({{0, 0, 0, 0}, {1, 1, 1, 1}})});
        const ConvReport r = classify(*f, p);
        CHECK(r.indices.bound == 4);
        CHECK(r.dfree_upper < r.indices.bound);
        CHECK(r.mds == Verdict::Refuted);
        CHECK(r.column_distances.at(0).value == 2);
        CHECK(r.mdp == Verdict::Refuted);
    }
}
