#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "geoconfig/fields.hpp"
#include "geoconfig/ordered.hpp"
#include "geoconfig/planner.hpp"
#include "geoconfig/unordered.hpp"
#include "support.hpp"

using namespace geoconfig;
using namespace geoconfig::planner;
using unordered::UnorderedConfig;

namespace {

const OrderedConfig ex1_p{Vec{-6, 4}, Vec{6, 8}};
const OrderedConfig ex2_p{Vec{-6, 4}, Vec{6, 12}};
const OrderedConfig ex_q{Vec{8, -6}, Vec{2, -10}};

TEST(Fields, EvenFieldIsUnitTangent) {
    std::mt19937_64 rng(1);
    for (std::size_t n : {2u, 4u, 6u}) {
        for (int i = 0; i < 200; ++i) {
            const Vec x = support::random_unit(n, rng);
            const Vec v = fields::even_field(x);
            EXPECT_DOUBLE_EQ(dot(v, x), 0.0);
            EXPECT_NEAR(norm(v), 1.0, 1e-15);
        }
    }
    EXPECT_THROW((void)fields::even_field(Vec{1, 0, 0}), GeoError);
}

TEST(Fields, PuncturedFieldIsUnitTangentOffAxis) {
    std::mt19937_64 rng(2);
    for (std::size_t n : {3u, 5u}) {
        for (int i = 0; i < 200; ++i) {
            const Vec x = support::random_unit(n, rng);
            const Vec v = fields::punctured_field(x);
            EXPECT_NEAR(dot(v, x), 0.0, 1e-12);
            EXPECT_NEAR(norm(v), 1.0, 1e-12);
        }
    }
    EXPECT_THROW((void)fields::punctured_field(Vec{1, 0, 0}), GeoError);
    EXPECT_THROW((void)fields::punctured_field(Vec{-1, 0, 0}), GeoError);
    EXPECT_TRUE(fields::on_e1_axis(Vec{-2, 1e-12, 0}));
    EXPECT_FALSE(fields::on_e1_axis(Vec{1, 1e-6, 0}));
    EXPECT_EQ(fields::tangent_choice(Vec{-1, 0, 0}), (Vec{0, 1, 0}));
}

TEST(RegionOrdered, Examples) {
    EXPECT_EQ(region_ordered(ex1_p, ex_q).region_id, region_e1);
    EXPECT_EQ(region_ordered(ex2_p, ex_q).region_id, region_e0);
    const OrderedConfig p = support::config_from(Vec{0, 0, 0}, Vec{2, 0, 0});
    const OrderedConfig q = support::config_from(Vec{1, 1, 1}, Vec{-1, 0, 0});
    EXPECT_EQ(region_ordered(p, q).region_id, region_z);
    // both signs of the axis belong to Z
    EXPECT_EQ(region_ordered(q, p).region_id, region_z);
    // in even dimension the axis is not special
    const OrderedConfig p4 = support::config_from(Vec(4), Vec{2, 0, 0, 0});
    const OrderedConfig q4 = support::config_from(Vec(4), Vec{-1, 0, 0, 0});
    EXPECT_EQ(region_ordered(p4, q4).region_id, region_e0);
    EXPECT_EQ(ordered_region_count(2), 2);
    EXPECT_EQ(ordered_region_count(3), 3);
    EXPECT_THROW((void)region_ordered(OrderedConfig(Vec{0, 0}, Vec{1, 0}), ex_q), GeoError);
}

TEST(PlanOrdered, Examples) {
    const OrderedPlan plan = plan_ordered_detail(ex2_p, ex_q);
    ASSERT_TRUE(plan.geodesic.w);
    const Vec want = Vec{-4, 6} / std::sqrt(52.0);
    EXPECT_LT(max_abs_diff(*plan.geodesic.w, want), 1e-15);
    EXPECT_NEAR(plan.geodesic.path.total_length(), 28.375, 1e-3);
    EXPECT_LT(max_abs_diff(*ordered_w(ex2_p, ex_q), want), 1e-15);
    EXPECT_FALSE(ordered_w(ex1_p, ex_q));

    const OrderedConfig p = support::config_from(Vec{0, 0, 0}, Vec{2, 0, 0});
    const OrderedConfig q = support::config_from(Vec{1, 1, 1}, Vec{-1, 0, 0});
    EXPECT_EQ(*plan_ordered_detail(p, q).geodesic.w, (Vec{0, 1, 0}));

    const GeodesicPath a = plan_ordered(ex1_p, ex_q);
    const GeodesicPath b = ordered::geodesic(ex1_p, ex_q);
    EXPECT_EQ(a.total_length(), b.total_length());
    EXPECT_EQ(support::sup_deviation(support::eval_of(a), support::eval_of(b), 101), 0.0);
}

TEST(PlanOrdered, LengthIsMinimal) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + i % 4;
        OrderedConfig p, q;
        if (i % 2) {
            std::tie(p, q) = support::random_antiparallel(n, rng);
        } else {
            p = support::random_config(n, rng);
            q = support::random_config(n, rng);
        }
        const double want = ordered::geodesic_length(p, q);
        EXPECT_NEAR(plan_ordered(p, q).total_length(), want, 1e-9 * std::max(1.0, want));
    }
}

TEST(RegionUnordered, Examples) {
    const UnorderedConfig up(ex1_p);
    const UnorderedConfig uq(ex_q);
    EXPECT_EQ(dot(ex1_p.second - ex1_p.first, ex_q.second - ex_q.first), -88.0);
    // the representative of the goal lists (2,-10) first, which flips the sign
    EXPECT_EQ(unordered::separation_dot(up, uq), 88.0);
    EXPECT_EQ(region_unordered(up, uq).region_id, 0);
    const UnorderedConfig a(Vec{0, 0}, Vec{2, 0});
    const UnorderedConfig b(Vec{0, 0}, Vec{0, 2});
    EXPECT_EQ(region_unordered(a, b).region_id, 1);
    EXPECT_EQ(region_unordered(up, up).region_id, 0);
}

TEST(PlanUnordered, Examples) {
    const UnorderedConfig up(ex1_p);
    const UnorderedConfig uq(ex_q);
    EXPECT_NEAR(plan_unordered(up, uq).total_length(), unordered::d_U(up, uq), 1e-12);
    EXPECT_EQ(plan_unordered(up, up).total_length(), 0.0);

    const UnorderedConfig a(Vec{-1, 0}, Vec{1, 0});
    const UnorderedConfig b(Vec{0, -1}, Vec{0, 1});
    const UnorderedPlan plan = plan_unordered_detail(a, b);
    EXPECT_NE(plan.pairing, unordered::Pairing::Tie);
    EXPECT_NEAR(plan.path.total_length(), unordered::d_U(a, b), 1e-12);
}

TEST(PlanUnordered, ChosenPairingBeatsTheOther) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + i % 3;
        const UnorderedConfig p(support::random_vec(n, -3, 3, rng), support::random_vec(n, -3, 3, rng));
        const UnorderedConfig q(support::random_vec(n, -3, 3, rng), support::random_vec(n, -3, 3, rng));
        const UnorderedPlan plan = plan_unordered_detail(p, q);
        ASSERT_EQ(plan.region.region_id, 0);
        const OrderedConfig other = plan.pairing == unordered::Pairing::Identity ? q.rep().swapped() : q.rep();
        EXPECT_LT(plan.path.total_length(), config_distance(p.rep(), other));
    }
}

TEST(TransportOrientation, MapsIntoTheTargetLineAndIsOddInDirection) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {2u, 3u, 4u, 6u}) {
        for (int i = 0; i < 100; ++i) {
            const Vec d = support::random_unit(n, rng);
            Vec l = support::random_unit(n, rng);
            l = normalized(l - d * dot(l, d));
            const Vec o = transport_orientation(d, l);
            EXPECT_NEAR(std::abs(dot(o, l)), 1.0, 1e-12);
            EXPECT_LT(max_abs_diff(transport_orientation(-d, l), -o), 1e-12);
            EXPECT_LT(max_abs_diff(transport_orientation(d, -l), o), 1e-12);
        }
    }
}

// Every query lands in exactly one region and the membership predicates agree.
TEST(Partition, OrderedRegionsAreExclusive) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 2 + i % 3;
        OrderedConfig p, q;
        if (i % 3 == 0) {
            std::tie(p, q) = support::random_antiparallel(n, rng);
        } else if (i % 3 == 1 && n == 3) {
            const double s = i % 2 ? 1.0 : -1.0;
            p = support::config_from(support::random_vec(n, -4, 4, rng), Vec{s * 2, 0, 0});
            q = support::config_from(support::random_vec(n, -4, 4, rng), Vec{-s * 1.5, 0, 0});
        } else {
            p = support::random_config(n, rng);
            q = support::random_config(n, rng);
        }
        const int id = region_ordered(p, q).region_id;
        int claims = 0;
        for (int r = 0; r < ordered_region_count(n); ++r) claims += in_ordered_region(p, q, r);
        EXPECT_EQ(claims, 1);
        EXPECT_TRUE(in_ordered_region(p, q, id));
        EXPECT_LT(id, ordered_region_count(n));
    }
}

TEST(Partition, UnorderedRegionsAreExclusive) {
    std::mt19937_64 rng(7);
    std::set<int> seen3;
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 2 + i % 3;
        const Vec a = support::random_vec(n, -3, 3, rng);
        Vec s0 = support::random_vec(n, -3, 3, rng);
        Vec s1 = support::random_vec(n, -3, 3, rng);
        if (n == 3 && i % 2) {
            // regions 2 and 3 are the strata where the normal has leading zeros
            const int mode = (i / 6) % 3;
            if (mode == 1) s1 = Vec{1, 0, 0};
            if (mode == 2) s0[2] = s1[2] = 0.0;
        }
        if (i % 2) s1 = s1 - s0 * (dot(s1, s0) / norm2(s0));
        const UnorderedConfig p(a, a + s0);
        const UnorderedConfig q(a, a + s1);
        const int id = region_unordered(p, q).region_id;
        int claims = 0;
        for (int r = 0; r <= 1 + static_cast<int>(n * n); ++r) claims += in_unordered_region(p, q, r);
        EXPECT_EQ(claims, 1);
        EXPECT_TRUE(in_unordered_region(p, q, id));
        if (n == 3) seen3.insert(id);
    }
    EXPECT_EQ(seen3, (std::set<int>{0, 1, 2, 3}));
}

}  // namespace
