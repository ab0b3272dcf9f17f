#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mdsconv/blockcode.hpp"
#include "oracle.hpp"

using namespace mdsconv;

namespace {

std::size_t oracle_distance(const Field& f, const Matrix& h) {
    const oracle::Field o(f.p(), f.modulus());
    return oracle::min_distance(o, f.q(), h.to_rows(), h.cols()).value_or(0);
}

}  // namespace

TEST_SUITE("blockcode") {
    TEST_CASE("consecutive-root codes are MDS for every admissible length") {
        for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u}) {
            const auto f = make_field_of_order(q);
            for (std::size_t n = 2; n <= q - 1; ++n)
                for (std::size_t len = 1; len < n; ++len)
                    for (std::int64_t d1 : {0, 1}) {
                        const auto roots = geometric_roots(*f, 1, f->theta(), d1, d1 + len - 1);
                        const Matrix h = root_parity_matrix(*f, roots, n);
                        const auto chk = is_mds_block(*f, h);
                        CHECK(chk.mds);
                        CHECK(min_distance(*f, h) == len + 1);
                        const Poly g = generator_from_roots(*f, roots);
                        CHECK(g.back() == 1);
                        CHECK(poly::degree(g) == static_cast<int>(len));
                        for (Elem r : roots) CHECK(poly::eval(*f, g, r) == 0);
                    }
        }
    }

    TEST_CASE("min distance agrees with the enumeration oracle on 100 random codes") {
        std::mt19937 rng(2024);
        const std::vector<unsigned> qs{2, 3, 4, 5, 7};
        int checked = 0;
        while (checked < 100) {
            const unsigned q = qs[rng() % qs.size()];
            const std::size_t n = 3 + rng() % 6;
            const std::size_t r = 1 + rng() % (n - 1);
            if (oracle::span_size(q, n - r) > 2e5) continue;
            const auto f = make_field_of_order(q);
            const Matrix h = testing::random_matrix(rng, r, n, q);
            if (rank(*f, h) == n) continue;
            const std::size_t want = oracle_distance(*f, h);
            CHECK(min_distance_circuits(*f, h) == want);
            CHECK(min_distance_enumerate(*f, h) == want);
            CHECK(min_distance(*f, h) == want);
            const auto w = min_weight_vector(*f, h);
            REQUIRE(w.has_value());
            CHECK(weight(*w) == want);
            CHECK(mat_vec(*f, h, *w) == Vec(r, 0));
            ++checked;
        }
    }

    TEST_CASE("trivial kernel") {
        const auto f = make_field_of_order(5);
        const Matrix h = Matrix::identity(3);
        CHECK_FALSE(min_weight_vector(*f, h).has_value());
        CHECK(testing::error_code([&] { min_distance_circuits(*f, h); }) == ErrorCode::InvalidParams);
        CHECK(testing::error_code([&] { make_block_code(f, h); }) == ErrorCode::InvalidParams);
    }

    TEST_CASE("realify preserves base-field kernels, exhaustively at q = 4") {
        const auto base = make_field_of_order(4);
        const auto ext = make_ext_field(base);
        std::mt19937 rng(4);
        const std::size_t n = 5;
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + trial % 3;
            const Matrix h = testing::random_matrix(rng, rows, n, 16);
            const Matrix real = realify(*ext, h);
            CHECK(real.rows() <= 2 * rows);
            std::size_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= 4;
            for (std::size_t code = 0; code < total; ++code) {
                Vec x(n);
                std::size_t c = code;
                for (auto& xi : x) {
                    xi = c % 4;
                    c /= 4;
                }
                const bool in_ext = mat_vec(*ext, h, x) == Vec(rows, 0);
                const bool in_real = real.rows() == 0 || mat_vec(*base, real, x) == Vec(real.rows(), 0);
                REQUIRE(in_ext == in_real);
            }
        }
    }

    TEST_CASE("realify preserves base-field kernels, sampled at q = 8") {
        const auto base = make_field_of_order(8);
        const auto ext = make_ext_field(base);
        std::mt19937 rng(8);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 6, rows = 1 + trial % 3;
            const Matrix h = testing::random_matrix(rng, rows, n, 64);
            const Matrix real = realify(*ext, h);
            // Every base-field kernel vector of the realified rows.
            for (const auto& v : nullspace(*base, real)) CHECK(mat_vec(*ext, h, v) == Vec(rows, 0));
            for (int s = 0; s < 200; ++s) {
                Vec x(n);
                for (auto& xi : x) xi = rng() % 8;
                CHECK((mat_vec(*ext, h, x) == Vec(rows, 0)) == (mat_vec(*base, real, x) == Vec(real.rows(), 0)));
            }
        }
    }

    TEST_CASE("realify row order and zero-row dropping") {
        const auto base = make_field_of_order(4);
        const auto ext = make_ext_field(base);
        // Row 0 = (1 + 2e, 3), row 1 = (1, 1) lies in the base field.
        const Matrix h = Matrix::from_rows({{ext->compose(1, 2), 3}, {1, 1}});
        CHECK(realify(*ext, h) == Matrix::from_rows({{1, 3}, {2, 0}, {1, 1}}));
    }

    TEST_CASE("evaluation matrices") {
        const auto f = make_field_of_order(5);
        const Matrix h = evaluation_parity_matrix(*f, {0, 1, 2}, 3, {1, 1, 3});
        CHECK(h == Matrix::from_rows({{1, 1, 3}, {0, 1, 1}, {0, 1, 2}}));
        CHECK(testing::error_code([&] { evaluation_parity_matrix(*f, {1, 1}, 2, {1, 1}); }) ==
              ErrorCode::DuplicatePoints);
        CHECK(testing::error_code([&] { evaluation_parity_matrix(*f, {1, 2}, 2, {1, 0}); }) ==
              ErrorCode::ZeroMultiplier);
        CHECK(testing::error_code([&] { generator_from_roots(*f, {2, 2}); }) == ErrorCode::DuplicateRoots);
        CHECK(testing::error_code([&] { geometric_roots(*f, 1, 2, 3, 2); }) == ErrorCode::InvalidParams);
    }

    TEST_CASE("non-MDS code reports a dependent column set") {
        const auto f = make_field_of_order(3);
        const Matrix h = Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
        const auto chk = is_mds_block(*f, h);
        CHECK_FALSE(chk.mds);
        REQUIRE(chk.violating.has_value());
        CHECK(chk.violating->size() == 2);
        CHECK_FALSE(columns_independent(*f, h, *chk.violating));
        const BlockCode c = make_block_code(f, h);
        CHECK(c.k == 2);
        CHECK(c.d == 2);
        CHECK_FALSE(c.is_mds);
    }

    TEST_CASE("combinations are lexicographic and complete") {
        std::vector<std::vector<std::size_t>> seen;
        for_each_combination(5, 3, [&](const std::vector<std::size_t>& c) {
            seen.push_back(c);
            return true;
        });
        CHECK(seen.size() == 10);
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(seen.front() == std::vector<std::size_t>{0, 1, 2});
        CHECK(seen.back() == std::vector<std::size_t>{2, 3, 4});
        std::size_t calls = 0;
        CHECK_FALSE(for_each_combination(5, 2, [&](const std::vector<std::size_t>&) { return ++calls < 3; }));
        CHECK(calls == 3);
    }

    TEST_CASE("base-field closure of conjugate root sets") {
        const auto ext = make_ext_field(make_field_of_order(4));
        const Elem b = ext->beta();
        CHECK(base_field_closure_check(*ext, {1, b, ext->pow(b, -1)}));
        CHECK_FALSE(base_field_closure_check(*ext, {b}));
    }
}
