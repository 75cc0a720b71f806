#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "specord/extreal.hpp"

using specord::ExtendedReal;

TEST_CASE("finite values round-trip and compare exactly") {
    auto a = ExtendedReal::finite(1.5);
    auto b = ExtendedReal::finite(-2.25);
    REQUIRE(a.is_finite());
    REQUIRE(a.value() == 1.5);
    REQUIRE(b < a);
    REQUIRE(b <= a);
    REQUIRE(a > b);
    REQUIRE(a != b);
    REQUIRE(a == ExtendedReal::finite(1.5));
}

TEST_CASE("infinities order everything") {
    auto lo = ExtendedReal::neg_inf();
    auto hi = ExtendedReal::pos_inf();
    auto x = ExtendedReal::finite(1e300);
    REQUIRE(lo < x);
    REQUIRE(x < hi);
    REQUIRE(lo < hi);
    REQUIRE(lo == ExtendedReal::neg_inf());
    REQUIRE(hi == ExtendedReal::pos_inf());
    REQUIRE_FALSE(lo.is_finite());
    REQUIRE(lo.is_neg_inf());
    REQUIRE(hi.is_pos_inf());
    REQUIRE_THROWS_AS(lo.value(), specord::NonFiniteValue);
}

TEST_CASE("NaN is rejected at construction") {
    REQUIRE_THROWS_AS(ExtendedReal::finite(std::nan("")), specord::NonFiniteValue);
    REQUIRE_THROWS_AS(ExtendedReal::finite(1.0 / 0.0), specord::NonFiniteValue);
}

TEST_CASE("inf and sup use the empty-set conventions") {
    std::vector<ExtendedReal> none;
    REQUIRE(specord::ext_inf(none) == ExtendedReal::pos_inf());
    REQUIRE(specord::ext_sup(none) == ExtendedReal::neg_inf());

    std::vector<ExtendedReal> vals = {ExtendedReal::finite(2.0), ExtendedReal::neg_inf(),
                                      ExtendedReal::finite(-7.0)};
    REQUIRE(specord::ext_inf(vals) == ExtendedReal::neg_inf());
    REQUIRE(specord::ext_sup(vals) == ExtendedReal::finite(2.0));

    std::vector<ExtendedReal> finite_only = {ExtendedReal::finite(0.5), ExtendedReal::finite(0.25)};
    REQUIRE(specord::ext_inf(finite_only) == ExtendedReal::finite(0.25));
    REQUIRE(specord::ext_sup(finite_only) == ExtendedReal::finite(0.5));
}

TEST_CASE("translation fixes the infinities") {
    REQUIRE(specord::ext_add(ExtendedReal::finite(1.0), 2.5) == ExtendedReal::finite(3.5));
    REQUIRE(specord::ext_add(ExtendedReal::neg_inf(), 2.5) == ExtendedReal::neg_inf());
    REQUIRE(specord::ext_add(ExtendedReal::pos_inf(), -9.0) == ExtendedReal::pos_inf());
    REQUIRE_THROWS_AS(specord::ext_add(ExtendedReal::finite(0.0), 1.0 / 0.0),
                      specord::NonFiniteValue);
}

TEST_CASE("scaling requires a positive factor") {
    REQUIRE(specord::ext_scale(ExtendedReal::finite(3.0), 2.0) == ExtendedReal::finite(6.0));
    REQUIRE(specord::ext_scale(ExtendedReal::neg_inf(), 0.5) == ExtendedReal::neg_inf());
    REQUIRE_THROWS_AS(specord::ext_scale(ExtendedReal::finite(1.0), 0.0), specord::Error);
    REQUIRE_THROWS_AS(specord::ext_scale(ExtendedReal::finite(1.0), -2.0), specord::Error);
}

TEST_CASE("negation swaps the infinities and reverses order") {
    REQUIRE(specord::ext_negate(ExtendedReal::neg_inf()) == ExtendedReal::pos_inf());
    REQUIRE(specord::ext_negate(ExtendedReal::pos_inf()) == ExtendedReal::neg_inf());
    REQUIRE(specord::ext_negate(ExtendedReal::finite(4.0)) == ExtendedReal::finite(-4.0));

    auto a = ExtendedReal::finite(-1.0);
    auto b = ExtendedReal::finite(2.0);
    REQUIRE(a < b);
    REQUIRE(specord::ext_negate(b) < specord::ext_negate(a));
}

TEST_CASE("string forms used by the serializers") {
    REQUIRE(ExtendedReal::neg_inf().str() == "-inf");
    REQUIRE(ExtendedReal::pos_inf().str() == "+inf");
    REQUIRE(ExtendedReal::finite(2.5).str() == "2.5");
}

TEST_CASE("ext_close compares finites with tolerance, infinities exactly") {
    REQUIRE(specord::ext_close(ExtendedReal::finite(1.0), ExtendedReal::finite(1.0 + 1e-12), 1e-9));
    REQUIRE_FALSE(specord::ext_close(ExtendedReal::finite(1.0), ExtendedReal::finite(1.1), 1e-9));
    REQUIRE(specord::ext_close(ExtendedReal::pos_inf(), ExtendedReal::pos_inf(), 1e-9));
    REQUIRE_FALSE(specord::ext_close(ExtendedReal::pos_inf(), ExtendedReal::finite(1e308), 1e300));
    REQUIRE_FALSE(specord::ext_close(ExtendedReal::neg_inf(), ExtendedReal::pos_inf(), 1e300));
}
