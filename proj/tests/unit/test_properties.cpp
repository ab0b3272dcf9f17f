#include <doctest.h>

#include <numeric>
#include <random>

#include "mdsconv/pipeline.hpp"

using namespace mdsconv;

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
    return count;
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("field axioms hold on all triples for q <= 9") {
        for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            const auto f = make_field_of_order(q);
            for (Elem a = 0; a < q; ++a) {
                REQUIRE(f->add(a, 0) == a);
                REQUIRE(f->mul(a, 1) == a);
                REQUIRE(f->add(a, f->neg(a)) == 0);
                for (Elem b = 0; b < q; ++b) {
                    REQUIRE(f->add(a, b) == f->add(b, a));
                    REQUIRE(f->mul(a, b) == f->mul(b, a));
                    for (Elem c = 0; c < q; ++c) {
                        REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                        REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                        REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    }
                }
            }
        }
    }

    TEST_CASE("field axioms on random triples for larger q") {
        std::mt19937 rng(1);
        for (unsigned q : {16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 128u, 243u, 256u}) {
            const auto f = make_field_of_order(q);
            std::uniform_int_distribution<Elem> d(0, q - 1);
            for (int i = 0; i < 10'000; ++i) {
                const Elem a = d(rng), b = d(rng), c = d(rng);
                REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                REQUIRE(f->add(a, b) == f->add(b, a));
                REQUIRE(f->mul(a, b) == f->mul(b, a));
                REQUIRE(f->mul(a, b) == f->mul_reference(a, b));
            }
        }
    }

    TEST_CASE("multiplicative group is cyclic for q <= 81") {
        for (unsigned q = 2; q <= 81; ++q) {
            if (!prime_power(q)) continue;
            const auto f = make_field_of_order(q);
            std::uint64_t generators = 0;
            for (Elem a = 1; a < q; ++a) {
                const auto ord = f->order_of(a);
                REQUIRE((q - 1) % ord == 0);
                generators += ord == q - 1;
            }
            CHECK(generators == euler_phi(q - 1));
        }
    }

    TEST_CASE("encodings are a bijection onto 0..q-1") {
        for (unsigned q : {4u, 8u, 9u, 25u, 27u, 81u}) {
            const auto f = make_field_of_order(q);
            std::vector<bool> seen(q, false);
            for (Elem a = 0; a < q; ++a) {
                const Elem back = f->from_coords(f->coords(a));
                REQUIRE(back < q);
                CHECK_FALSE(seen[back]);
                seen[back] = true;
            }
        }
    }

    TEST_CASE("column distances are monotone and capped on every swept code") {
        SweepOptions opt;
        opt.qs = {3, 4, 5, 7, 8, 9};
        opt.families = all_families();
        std::size_t cascades = 0;
        for (const auto& row : run_sweep(opt)) {
            const ConvReport& r = row.report;
            CAPTURE(std::string(to_string(row.spec.family)));
            CAPTURE(row.spec.q);
            CAPTURE(row.spec.k);
            CAPTURE(row.spec.delta);
            CHECK(r.column_distances.size() == 5);
            std::size_t prev = 0;
            for (const auto& [j, cd] : r.column_distances) {
                CHECK(cd.exact);
                CHECK(cd.value >= prev);
                CHECK(cd.value <= column_distance_cap(r.n, r.k, j));
                prev = cd.value;
            }
            CHECK(r.dfree_lower <= r.dfree_upper);
            CHECK(r.dfree_upper <= r.indices.bound);
            CHECK(prev <= r.dfree_upper);
            cascades += r.cascade_counterexamples.size();
        }
        MESSAGE("cascade counterexamples: " << cascades);
    }

    TEST_CASE("sweep output does not depend on the worker count") {
        SweepOptions opt;
        opt.qs = {4, 5, 7};
        opt.families = all_families();
        const std::string serial = sweep_csv(run_sweep(opt), false);
        opt.jobs = 3;
        opt.classify.limits.jobs = 2;
        CHECK(sweep_csv(run_sweep(opt), false) == serial);
        const std::string parallel = sweep_json(run_sweep(opt), false).dump();
        opt.jobs = 1;
        opt.classify.limits.jobs = 1;
        CHECK(sweep_json(run_sweep(opt), false).dump() == parallel);
    }
}
