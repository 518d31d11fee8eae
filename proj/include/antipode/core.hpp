#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace antipode {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ring_mismatch : error {
    using error::error;
};
struct illegal_generator : error {
    using error::error;
};
struct unsupported_dimension : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

/// Coefficient rings. All arithmetic is exact; Integers are arbitrary precision.
enum class RingKind { Integers, Rationals, FieldOfTwoElements };

inline const char* ring_name(RingKind r)
{
    switch (r) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::FieldOfTwoElements: return "F2";
    }
    return "?";
}

/// Bring a raw rational into the canonical form of the ring.
/// Integers and F2 reject non-integral values; F2 reduces into {0,1}.
inline Rat ring_normalize(RingKind ring, const Rat& c)
{
    switch (ring) {
    case RingKind::Rationals:
        return c;
    case RingKind::Integers:
        if (boost::multiprecision::denominator(c) != 1)
            throw error("non-integral coefficient in ring Z: " + c.str());
        return c;
    case RingKind::FieldOfTwoElements: {
        if (boost::multiprecision::denominator(c) != 1)
            throw error("non-integral coefficient in ring F2: " + c.str());
        BigInt m = boost::multiprecision::numerator(c) % 2;
        if (m < 0)
            m += 2;
        return Rat(m);
    }
    }
    return c;
}

/// Reduce an integer coefficient mod 2 (the Z -> F2 change of rings).
inline Rat reduce_mod2(const Rat& c)
{
    return ring_normalize(RingKind::FieldOfTwoElements, c);
}

/// Index of a homology generator. Integer for n >= 2; the circle needs
/// half-integers, so the value is stored doubled.
struct HalfInt {
    int twice = 0;

    static HalfInt whole(int k) { return HalfInt{2 * k}; }
    static HalfInt half_odd(int twice_value) { return HalfInt{twice_value}; }

    bool is_integer() const { return twice % 2 == 0; }
    int floor_value() const { return (twice >= 0 ? twice / 2 : (twice - 1) / 2); }
    /// Integer value; caller must know the index is integral.
    int whole_value() const
    {
        if (!is_integer())
            throw error("half-integral index where an integer was required");
        return twice / 2;
    }

    auto operator<=>(const HalfInt&) const = default;

    std::string str() const
    {
        if (is_integer())
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

enum class Space { Loop, Antipodal };

inline const char* space_name(Space s) { return s == Space::Loop ? "L" : "P"; }

/// Symbolic families of homology generators across the two path spaces.
///  - A, B        antipodal-side classes built from the unit tangent bundle
///  - A', B'      their loop-space counterparts
///  - pt, fund    point class and fundamental class of the constant loops
///  - E           the degree-n antipodal class of the trivial extension (n = 3 mod 4)
///  - g, G, g', G' the circle families (components / circle orbits), n = 1
enum class Family {
    A,
    B,
    APrime,
    BPrime,
    Pt,
    Fund,
    E,
    Gamma,
    GammaTop,
    GammaPrime,
    GammaTopPrime,
};

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::APrime: return "A'";
    case Family::BPrime: return "B'";
    case Family::Pt: return "pt";
    case Family::Fund: return "fund";
    case Family::E: return "E";
    case Family::Gamma: return "g";
    case Family::GammaTop: return "G";
    case Family::GammaPrime: return "g'";
    case Family::GammaTopPrime: return "G'";
    }
    return "?";
}

inline Space natural_space(Family f)
{
    switch (f) {
    case Family::A:
    case Family::B:
    case Family::E:
    case Family::Gamma:
    case Family::GammaTop:
        return Space::Antipodal;
    default:
        return Space::Loop;
    }
}

/// One basis generator of H(Lambda S^n) or H(P_a S^n).
struct Generator {
    Space space;
    Family family;
    HalfInt index;
    int n; // ambient sphere dimension

    auto operator<=>(const Generator&) const = default;
};

inline Generator make_gen(Family f, HalfInt idx, int n)
{
    return Generator{natural_space(f), f, idx, n};
}
inline Generator make_gen(Family f, int idx, int n)
{
    return make_gen(f, HalfInt::whole(idx), n);
}

/// Homological degree. A pure function of (family, index, n).
inline long long degree(const Generator& g)
{
    const long long n = g.n;
    switch (g.family) {
    case Family::A:
    case Family::APrime:
        return static_cast<long long>(g.index.whole_value()) * (n - 1);
    case Family::B:
    case Family::BPrime:
        return static_cast<long long>(g.index.whole_value()) * (n - 1) + 2 * n - 1;
    case Family::Pt:
        return 0;
    case Family::Fund:
    case Family::E:
        return n;
    case Family::Gamma:
    case Family::GammaPrime:
        return 0; // circle component classes
    case Family::GammaTop:
    case Family::GammaTopPrime:
        return 1; // circle orbit classes
    }
    throw error("degree: unknown family");
}

inline std::string to_text(const Generator& g)
{
    switch (g.family) {
    case Family::Pt: return "pt";
    case Family::Fund: return "fund";
    case Family::E: return "E";
    default:
        return std::string(family_name(g.family)) + "[" + g.index.str() + "]";
    }
}

} // namespace antipode
