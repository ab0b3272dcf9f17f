#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mdsconv/linalg.hpp"
#include "oracle.hpp"

using namespace mdsconv;

TEST_SUITE("linalg") {
    TEST_CASE("from_rows rejects ragged input") {
        CHECK(testing::error_code([] { Matrix::from_rows({{1, 2}, {3}}); }) == ErrorCode::InvalidParams);
        const Matrix e = Matrix::from_rows({}, 4);
        CHECK(e.rows() == 0);
        CHECK(e.cols() == 4);
    }

    TEST_CASE("rref is canonical") {
        const auto f = make_field_of_order(5);
        const Matrix m = Matrix::from_rows({{0, 2, 4, 1}, {1, 1, 1, 1}, {1, 3, 0, 2}});
        const auto rr = rref(*f, m);
        // Third row = first + second, so rank 2 with pivots in columns 0 and 1.
        CHECK(rr.rank == 2);
        CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
        CHECK(rr.reduced == Matrix::from_rows({{1, 0, 4, 3}, {0, 1, 2, 3}, {0, 0, 0, 0}}));
        CHECK(rref(*f, rr.reduced).reduced == rr.reduced);
    }

    TEST_CASE("rank is transpose-invariant, exhaustively on 3x3 over F_2 and F_3") {
        for (unsigned q : {2u, 3u}) {
            const auto f = make_field_of_order(q);
            std::size_t total = 1;
            for (int i = 0; i < 9; ++i) total *= q;
            for (std::size_t code = 0; code < total; ++code) {
                Matrix m(3, 3);
                std::size_t x = code;
                for (std::size_t i = 0; i < 9; ++i, x /= q) m(i / 3, i % 3) = x % q;
                REQUIRE(rank(*f, m) == rank(*f, transpose(m)));
            }
        }
    }

    TEST_CASE("rank is transpose-invariant on random larger matrices and agrees with the oracle") {
        std::mt19937 rng(11);
        for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            const auto f = make_field_of_order(q);
            const oracle::Field o(f->p(), f->modulus());
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
                Matrix m = testing::random_matrix(rng, r, c, q);
                if (trial % 3 == 0 && r > 1)
                    for (std::size_t k = 0; k < c; ++k) m(r - 1, k) = f->add(m(0, k), m(r > 2 ? 1 : 0, k));
                const std::size_t rk = rank(*f, m);
                CHECK(rk == rank(*f, transpose(m)));
                CHECK(rk == oracle::rank(o, m.to_rows(), c));
            }
        }
    }

    TEST_CASE("rank of a product is at most the smaller rank") {
        std::mt19937 rng(5);
        for (unsigned q : {2u, 3u, 4u, 7u}) {
            const auto f = make_field_of_order(q);
            for (int trial = 0; trial < 50; ++trial) {
                const std::size_t a = 1 + trial % 4, b = 1 + (trial / 2) % 3, c = 1 + (trial / 3) % 5;
                const Matrix x = testing::random_matrix(rng, a, b, q);
                const Matrix y = testing::random_matrix(rng, b, c, q);
                CHECK(rank(*f, multiply(*f, x, y)) <= std::min(rank(*f, x), rank(*f, y)));
            }
        }
    }

    TEST_CASE("nullspace basis is independent, annihilated and of size cols - rank") {
        std::mt19937 rng(3);
        for (unsigned q : {2u, 5u, 8u, 9u}) {
            const auto f = make_field_of_order(q);
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t r = 1 + trial % 4, c = 2 + trial % 5;
                const Matrix m = testing::random_matrix(rng, r, c, q);
                const auto basis = nullspace(*f, m);
                CHECK(basis.size() == c - rank(*f, m));
                for (const auto& v : basis) CHECK(mat_vec(*f, m, v) == Vec(r, 0));
                if (!basis.empty()) CHECK(rank(*f, Matrix::from_rows(basis)) == basis.size());
            }
        }
    }

    TEST_CASE("columns_independent and subset validation") {
        const auto f = make_field_of_order(3);
        const Matrix m = Matrix::from_rows({{1, 0, 1, 2}, {0, 1, 1, 0}});
        CHECK(columns_independent(*f, m, {0, 1}));
        CHECK_FALSE(columns_independent(*f, m, {0, 1, 2}));
        CHECK_FALSE(columns_independent(*f, m, {0, 3}));
        CHECK(testing::error_code([&] { columns_independent(*f, m, {0, 4}); }) == ErrorCode::IndexOutOfRange);
        CHECK(testing::error_code([&] { columns_independent(*f, m, {1, 1}); }) == ErrorCode::IndexOutOfRange);
    }

    TEST_CASE("solve_on_support respects the support and the nonzero range") {
        const auto f = make_field_of_order(3);
        const Matrix m = Matrix::from_rows({{1, 0, 1, 2}, {0, 1, 1, 0}});
        const auto v = solve_on_support(*f, m, {0, 1, 2});
        REQUIRE(v.has_value());
        CHECK((*v)[3] == 0);
        CHECK(mat_vec(*f, m, *v) == Vec{0, 0});
        CHECK(weight(*v) == 3);
        CHECK_FALSE(solve_on_support(*f, m, {1, 2}).has_value());
        const auto w = solve_on_support(*f, m, {0, 3}, ColRange{3, 4});
        REQUIRE(w.has_value());
        CHECK((*w)[3] != 0);
    }

    TEST_CASE("EchelonStack tracks independence and relations") {
        const auto f = make_field_of_order(5);
        EchelonStack<Field> st(*f, 3);
        const Vec a{1, 2, 0}, b{0, 1, 4}, c{2, 0, 2};
        CHECK(st.push(a));
        CHECK(st.push(b));
        Vec rel;
        const Vec combo{3, 3, 3};  // 3a + 2b
        CHECK_FALSE(st.push(combo, &rel));
        REQUIRE(rel.size() == 2);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(f->add(f->mul(rel[0], a[i]), f->mul(rel[1], b[i])) == combo[i]);
        CHECK(st.size() == 2);
        CHECK(st.push(c));
        CHECK(st.size() == 3);
    }

    TEST_CASE("stacking and selection") {
        const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
        const Matrix b = Matrix::from_rows({{5, 6}});
        CHECK(vstack(a, b) == Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}}));
        CHECK(hstack(a, a) == Matrix::from_rows({{1, 2, 1, 2}, {3, 4, 3, 4}}));
        CHECK(select_cols(a, {1}) == Matrix::from_rows({{2}, {4}}));
        CHECK(select_rows(a, {1}) == Matrix::from_rows({{3, 4}}));
        CHECK(drop_zero_rows(Matrix::from_rows({{0, 0}, {1, 0}, {0, 0}})) == Matrix::from_rows({{1, 0}}));
        CHECK(testing::error_code([&] { vstack(a, Matrix(1, 3)); }) == ErrorCode::InvalidParams);
    }
}
