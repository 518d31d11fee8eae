#include <antipode/core.hpp>
#include <antipode/formal_sum.hpp>
#include <antipode/render.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace antipode;

namespace {

GradedElement elem(RingKind ring, Family f, int idx, int n, int coeff = 1)
{
    return GradedElement::single(ring, make_gen(f, idx, n), Rat(coeff));
}

} // namespace

TEST_CASE("combine is the exact formal-sum arithmetic")
{
    auto a0 = elem(RingKind::Integers, Family::A, 0, 2);
    auto b0 = elem(RingKind::Integers, Family::B, 0, 2);

    SECTION("x - x = 0")
    {
        auto z = combine(a0, a0, Rat(1), Rat(-1));
        CHECK(z.is_zero());
        CHECK(to_text(z) == "0");
    }
    SECTION("2*A[0] + 3*B[0]")
    {
        auto s = combine(a0, b0, Rat(2), Rat(3));
        CHECK(s.term_count() == 2);
        CHECK(s.coefficient(make_gen(Family::A, 0, 2)) == 2);
        CHECK(to_text(s) == "2*A[0] + 3*B[0]");
    }
    SECTION("characteristic two")
    {
        auto a = elem(RingKind::FieldOfTwoElements, Family::A, 0, 2);
        CHECK(combine(a, a, Rat(1), Rat(1)).is_zero());
    }
    SECTION("ring mismatch is refused")
    {
        auto a = elem(RingKind::Rationals, Family::A, 0, 2);
        CHECK_THROWS_AS(combine(a0, a, Rat(1), Rat(1)), ring_mismatch);
    }
    SECTION("integers are arbitrary precision")
    {
        Rat big = Rat(BigInt("340282366920938463463374607431768211457"));
        auto s = combine(a0, a0, big, big);
        CHECK(s.coefficient(make_gen(Family::A, 0, 2)) == big * 2);
    }
}

TEST_CASE("combine is bilinear, commutative and associative")
{
    const int n = 2;
    const auto ring = RingKind::Integers;
    std::vector<GradedElement> xs = {
        elem(ring, Family::A, 0, n), elem(ring, Family::B, 2, n),
        combine(elem(ring, Family::A, 2, n), elem(ring, Family::BPrime, 1, n), Rat(2), Rat(-5)),
        GradedElement(ring)};
    for (const auto& x : xs)
        for (const auto& y : xs) {
            CHECK(combine(x, y, Rat(3), Rat(7)) == combine(y, x, Rat(7), Rat(3)));
            for (const auto& z : xs) {
                auto lhs = combine(combine(x, y, Rat(1), Rat(1)), z, Rat(1), Rat(1));
                auto rhs = combine(x, combine(y, z, Rat(1), Rat(1)), Rat(1), Rat(1));
                CHECK(lhs == rhs);
            }
            // additive identity
            CHECK(combine(x, GradedElement(ring), Rat(1), Rat(5)) == x);
        }
}

TEST_CASE("mod-2 reduction commutes with combine")
{
    const int n = 4;
    auto x = combine(elem(RingKind::Integers, Family::A, 2, n),
                     elem(RingKind::Integers, Family::B, 0, n), Rat(3), Rat(-4));
    auto y = combine(elem(RingKind::Integers, Family::A, 2, n),
                     elem(RingKind::Integers, Family::BPrime, 3, n), Rat(5), Rat(7));
    auto lhs = combine(x, y, Rat(9), Rat(11)).with_ring(RingKind::FieldOfTwoElements);
    auto rhs = combine(x.with_ring(RingKind::FieldOfTwoElements),
                       y.with_ring(RingKind::FieldOfTwoElements), Rat(9), Rat(11));
    CHECK(lhs == rhs);
}

TEST_CASE("degree is a pure function of (family, index, n)")
{
    CHECK(degree(make_gen(Family::B, 0, 2)) == 3);
    CHECK(degree(make_gen(Family::APrime, 3, 4)) == 9);
    CHECK(degree(make_gen(Family::Pt, 0, 6)) == 0);
    CHECK(degree(make_gen(Family::Fund, 0, 6)) == 6);
    CHECK(degree(Generator{Space::Antipodal, Family::Gamma, HalfInt{1}, 1}) == 0);
    CHECK(degree(Generator{Space::Antipodal, Family::GammaTop, HalfInt{-3}, 1}) == 1);

    auto a0 = elem(RingKind::Integers, Family::A, 0, 2);
    auto b0 = elem(RingKind::Integers, Family::B, 0, 2);
    auto d = degree_of(combine(a0, b0, Rat(1), Rat(1)), [](const Generator& g) {
        return degree(g);
    });
    CHECK(d.mixed());
    auto dz = degree_of(GradedElement(RingKind::Integers),
                        [](const Generator& g) { return degree(g); });
    CHECK(dz.kind == DegreeResult::Kind::Zero);
    auto db = degree_of(b0, [](const Generator& g) { return degree(g); });
    REQUIRE(db.homogeneous());
    CHECK(db.value == 3);
}

TEST_CASE("canonical text and json round-trip")
{
    auto s = parse_element("2*A[0] + 3*B'[5]", 6, RingKind::Integers);
    CHECK(to_text(s) == "2*A[0] + 3*B'[5]");
    CHECK(parse_element(to_text(s), 6, RingKind::Integers) == s);

    auto c = parse_element("G[1/2] - g[-1/2]", 1, RingKind::Integers);
    CHECK(c.term_count() == 2);
    CHECK(c.coefficient(Generator{Space::Antipodal, Family::GammaTop, HalfInt{1}, 1}) == 1);
    CHECK(c.coefficient(Generator{Space::Antipodal, Family::Gamma, HalfInt{-1}, 1}) == -1);
    CHECK(parse_element(to_text(c), 1, RingKind::Integers) == c);

    Json j = to_json(parse_element("2*A[0]", 2, RingKind::Integers));
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["space"] == "P");
    CHECK(j["terms"][0]["family"] == "A");
    CHECK(j["terms"][0]["index"] == 0);
    CHECK(j["terms"][0]["coeff"] == "2");

    CHECK(parse_element("0", 2, RingKind::Integers).is_zero());
    CHECK_THROWS_AS(parse_element("2*A[0] +", 2, RingKind::Integers), parse_error);
    CHECK_THROWS_AS(parse_element("Q[0]", 2, RingKind::Integers), parse_error);
    // F2 keeps coefficients reduced
    CHECK(parse_element("3*A[0]", 2, RingKind::FieldOfTwoElements)
              .coefficient(make_gen(Family::A, 0, 2)) == 1);
}

TEST_CASE("term ordering is canonical: space, then family, then index")
{
    auto s = parse_element("B[2] + A[0] + fund + pt", 2, RingKind::Rationals);
    CHECK(to_text(s) == "pt + fund + A[0] + B[2]");
}
