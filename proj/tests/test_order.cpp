#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "specord/spectral_order.hpp"
#include "support/oracles.hpp"

using namespace specord;

namespace {

HermitianOperator diag_op(std::vector<double> d) {
    int n = static_cast<int>(d.size());
    ComplexMatrix m = ComplexMatrix::zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
    return HermitianOperator(m);
}

std::vector<Projection> merged_family_sample(const HermitianOperator& a,
                                             const HermitianOperator& b) {
    std::vector<Projection> sample;
    SpectralFamily fa = SpectralFamily::from_operator(a, Continuity::Right);
    SpectralFamily fb = SpectralFamily::from_operator(b, Continuity::Right);
    for (const auto& j : fa.jumps()) sample.push_back(j.proj);
    for (const auto& j : fb.jumps()) sample.push_back(j.proj);
    sample.push_back(Projection::zero(a.matrix().dim()));
    return sample;
}

}  // namespace

TEST_CASE("spectral order on commuting diagonals is entrywise", "[order]") {
    SECTION("comparison") {
        CHECK(spectral_leq(diag_op({1, 2}), diag_op({2, 3})).leq_s);
        CHECK_FALSE(spectral_leq(diag_op({1, 3}), diag_op({2, 2})).leq_s);
        CHECK_FALSE(spectral_leq(diag_op({2, 2}), diag_op({1, 3})).leq_s);
    }

    SECTION("meet and join are entrywise min and max") {
        HermitianOperator m = spectral_meet({diag_op({1, 3}), diag_op({2, 2})});
        HermitianOperator j = spectral_join({diag_op({1, 3}), diag_op({2, 2})});
        CHECK(max_abs_diff(m.matrix(), diag_op({1, 2}).matrix()) < 1e-12);
        CHECK(max_abs_diff(j.matrix(), diag_op({2, 3}).matrix()) < 1e-12);
    }

    SECTION("random diagonal triples") {
        Rng rng(311);
        for (int rep = 0; rep < 25; ++rep) {
            std::vector<double> da, db;
            for (int i = 0; i < 4; ++i) {
                da.push_back(rng.uniform(-3.0, 3.0));
                db.push_back(rng.uniform(-3.0, 3.0));
            }
            HermitianOperator m = spectral_meet({diag_op(da), diag_op(db)});
            HermitianOperator j = spectral_join({diag_op(da), diag_op(db)});
            for (int i = 0; i < 4; ++i) {
                CHECK(std::abs(m.matrix().at(i, i).real() - std::min(da[i], db[i])) < 1e-9);
                CHECK(std::abs(j.matrix().at(i, i).real() - std::max(da[i], db[i])) < 1e-9);
            }
        }
    }
}

TEST_CASE("spectral order is a partial order", "[order]") {
    Rng rng(313);
    for (int rep = 0; rep < 20; ++rep) {
        HermitianOperator a(random_hermitian(rng, 3, 1.0));
        HermitianOperator r(random_hermitian(rng, 3, 1.0));

        SECTION("reflexive, rep " + std::to_string(rep)) {
            auto v = spectral_leq(a, a);
            CHECK(v.leq_s);
            CHECK(v.leq_linear);
            CHECK(v.witnesses.empty());
        }

        HermitianOperator b = spectral_join({a, r});
        HermitianOperator c = spectral_join({b, HermitianOperator(random_hermitian(rng, 3, 1.0))});

        SECTION("transitive along joins, rep " + std::to_string(rep)) {
            REQUIRE(spectral_leq(a, b).leq_s);
            REQUIRE(spectral_leq(b, c).leq_s);
            CHECK(spectral_leq(a, c).leq_s);
        }

        SECTION("antisymmetric, rep " + std::to_string(rep)) {
            if (spectral_leq(a, b).leq_s && spectral_leq(b, a).leq_s)
                CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-8);
        }
    }
}

TEST_CASE("meet and join satisfy the bound properties", "[order]") {
    Rng rng(317);
    for (int rep = 0; rep < 15; ++rep) {
        HermitianOperator a(random_hermitian(rng, 3, 1.0));
        HermitianOperator b(random_hermitian(rng, 3, 1.0));
        HermitianOperator m = spectral_meet({a, b});
        HermitianOperator j = spectral_join({a, b});

        CHECK(spectral_leq(m, a).leq_s);
        CHECK(spectral_leq(m, b).leq_s);
        CHECK(spectral_leq(a, j).leq_s);
        CHECK(spectral_leq(b, j).leq_s);

        // any lower bound is below the meet, any upper bound above the join
        HermitianOperator probe(random_hermitian(rng, 3, 1.0));
        HermitianOperator lower = spectral_meet({a, b, probe});
        HermitianOperator upper = spectral_join({a, b, probe});
        CHECK(spectral_leq(lower, m).leq_s);
        CHECK(spectral_leq(j, upper).leq_s);
    }

    SECTION("idempotence") {
        HermitianOperator a(random_hermitian(rng, 4, 1.5));
        CHECK(max_abs_diff(spectral_meet({a, a}).matrix(), a.matrix()) < 1e-9);
        CHECK(max_abs_diff(spectral_join({a, a}).matrix(), a.matrix()) < 1e-9);
    }
}

TEST_CASE("spectral meet and join of projections match the lattice", "[order]") {
    Rng rng(331);
    for (int rep = 0; rep < 12; ++rep) {
        Projection p = random_projection(rng, 3, 1 + static_cast<int>(rng.uniform_int(0, 1)));
        Projection q = random_projection(rng, 3, 1 + static_cast<int>(rng.uniform_int(0, 1)));
        HermitianOperator hp(p.matrix());
        HermitianOperator hq(q.matrix());
        CHECK(max_abs_diff(spectral_meet({hp, hq}).matrix(), meet(p, q).matrix()) < 1e-8);
        CHECK(max_abs_diff(spectral_join({hp, hq}).matrix(), join(p, q).matrix()) < 1e-8);
    }
}

TEST_CASE("family-side and observable-side order decisions agree", "[order]") {
    Rng rng(337);
    int agree_leq = 0;
    for (int rep = 0; rep < 40; ++rep) {
        HermitianOperator a(random_hermitian(rng, 3, 1.0));
        HermitianOperator b = (rep % 2 == 0)
                                  ? spectral_join({a, HermitianOperator(random_hermitian(rng, 3, 1.0))})
                                  : HermitianOperator(random_hermitian(rng, 3, 1.0));
        auto sample = merged_family_sample(a, b);
        double slack = default_tolerance().cluster_gap(
            std::max(a.matrix().max_abs(), b.matrix().max_abs()));
        bool family_side = spectral_leq(a, b).leq_s;
        bool obs_side = order_compare_via_observable(a, b, sample, slack);
        CHECK(family_side == obs_side);
        if (family_side) ++agree_leq;
    }
    CHECK(agree_leq >= 20);  // the joined half really is ordered
}

TEST_CASE("noncommuting projections have no nonzero common lower bound", "[order]") {
    // two distinct rank-1 projections in dimension 2: their spectral meet is
    // the zero operator even though each has trace 1
    Projection p = oracles::tilt2(0.0);
    Projection q = oracles::tilt2(std::atan(1.0));  // 45 degrees
    HermitianOperator m = spectral_meet({HermitianOperator(p.matrix()), HermitianOperator(q.matrix())});
    CHECK(max_abs_diff(m.matrix(), ComplexMatrix::zero(2)) < 1e-10);

    // scaled identities below both are also below the meet
    for (double c : {-2.0, -0.5, 0.0}) {
        HermitianOperator ci(ComplexMatrix::diagonal({c, c}));
        REQUIRE(spectral_leq(ci, HermitianOperator(p.matrix())).leq_s);
        REQUIRE(spectral_leq(ci, HermitianOperator(q.matrix())).leq_s);
        CHECK(spectral_leq(ci, m).leq_s);
    }
}

TEST_CASE("linear order and spectral order disagree on noncommuting pairs", "[order]") {
    auto found = linear_not_spectral_witness(2, 401, 20000);
    REQUIRE(found.has_value());
    auto v = spectral_leq(found->a, found->b);
    CHECK(v.leq_linear);
    CHECK_FALSE(v.leq_s);
    CHECK_FALSE(v.witnesses.empty());
    CHECK(found->power_fail_n >= 2);
    CHECK(found->power_fail_n <= 6);
    CHECK(power_order_check(found->a, found->b, found->power_fail_n - 1));
    CHECK_FALSE(power_order_check(found->a, found->b, found->power_fail_n));

    for (const auto& w : v.witnesses) {
        // each witness records a level where the B family is not below the A family
        CHECK_FALSE(proj_leq(w.family_b, w.family_a));
    }
}

TEST_CASE("power comparison preliminaries", "[order]") {
    SECTION("commuting PSD pair passes every power") {
        CHECK(power_order_check(diag_op({1, 2}), diag_op({2, 3}), 6));
    }
    SECTION("rejects non-PSD input") {
        CHECK_THROWS_AS(power_order_check(diag_op({-1, 2}), diag_op({2, 3}), 3), NotPSD);
        CHECK_THROWS_AS(power_order_check(diag_op({1, 2}), diag_op({-2, 3}), 3), NotPSD);
    }
    SECTION("rejects n_max below one") {
        CHECK_THROWS_AS(power_order_check(diag_op({1, 2}), diag_op({2, 3}), 0), Error);
    }
}

TEST_CASE("translation does not preserve the spectral order", "[order]") {
    auto found = vector_lattice_counterexample(2, 419, 20000);
    REQUIRE(found.has_value());
    REQUIRE(spectral_leq(found->a, found->b).leq_s);
    HermitianOperator ac((found->a.matrix() + found->c.matrix()).hermitian_part());
    HermitianOperator bc((found->b.matrix() + found->c.matrix()).hermitian_part());
    CHECK_FALSE(spectral_leq(ac, bc).leq_s);

    SECTION("dimension one is totally ordered, no counterexample exists") {
        CHECK_FALSE(vector_lattice_counterexample(1, 419, 200).has_value());
    }
}

TEST_CASE("meet and join reject empty and mismatched input", "[order]") {
    std::vector<HermitianOperator> none;
    CHECK_THROWS_AS(spectral_meet(none), Error);
    CHECK_THROWS_AS(spectral_join(none), Error);
    CHECK_THROWS_AS(spectral_meet({diag_op({1, 2}), diag_op({1, 2, 3})}), DimMismatch);
}
