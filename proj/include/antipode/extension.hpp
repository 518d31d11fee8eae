#pragma once

#include "core.hpp"
#include "formal_sum.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace antipode {

/// A unital associative graded algebra presented by a basis-level product
/// table. The generator type only needs ordering; enumeration, degree and
/// naming hooks make the checkers and the involution search generic.
template <class Gen>
struct AlgebraSpec {
    RingKind ring = RingKind::Integers;
    std::function<FormalSum<Gen>(const Gen&, const Gen&)> mul;
    Gen unit{};
    std::function<std::vector<Gen>(int)> enumerate; // basis up to an index cutoff
    std::function<long long(const Gen&)> degree;
    std::function<std::string(const Gen&)> name;

    FormalSum<Gen> unit_element() const { return FormalSum<Gen>::single(ring, unit); }
    FormalSum<Gen> product(const FormalSum<Gen>& x, const FormalSum<Gen>& y) const
    {
        return multiply(x, y, mul);
    }
};

/// Bimodule table over an AlgebraSpec: left action A (x) B -> B and right
/// action B (x) A -> B, plus enumeration of the module basis.
template <class Gen>
struct BimoduleSpec {
    std::function<FormalSum<Gen>(const Gen&, const Gen&)> left;  // (a, x)
    std::function<FormalSum<Gen>(const Gen&, const Gen&)> right; // (x, a)
    std::function<std::vector<Gen>(int)> enumerate;
};

/// Pairing B (x) B -> A. Adaptedness is a checked property, not an invariant.
template <class Gen>
struct PairingSpec {
    std::function<FormalSum<Gen>(const Gen&, const Gen&)> pair;
};

template <class Gen>
struct ExtensionParts {
    AlgebraSpec<Gen> algebra;
    BimoduleSpec<Gen> bimodule;
    PairingSpec<Gen> pairing;
};

/// Generator of A (+) B with the side recorded.
template <class Gen>
struct SideTagged {
    bool module_side = false;
    Gen g{};
    auto operator<=>(const SideTagged&) const = default;
};

/// The extension algebra on A (+) B:
/// (a,x) ^ (b,y) = (a ^_A b + x ^_B y, a *_l y + x *_r b), unit (1,0).
template <class Gen>
AlgebraSpec<SideTagged<Gen>> build_extension(const ExtensionParts<Gen>& parts)
{
    using TGen = SideTagged<Gen>;
    const auto& p = parts;
    AlgebraSpec<TGen> ext;
    ext.ring = p.algebra.ring;
    ext.unit = TGen{false, p.algebra.unit};
    ext.mul = [p](const TGen& x, const TGen& y) {
        FormalSum<Gen> raw =
            (!x.module_side && !y.module_side) ? p.algebra.mul(x.g, y.g)
            : (x.module_side && y.module_side) ? p.pairing.pair(x.g, y.g)
            : (!x.module_side)                 ? p.bimodule.left(x.g, y.g)
                                               : p.bimodule.right(x.g, y.g);
        // products of two algebra or two module elements land in A, the
        // mixed products land in B
        const bool target_module = (x.module_side != y.module_side);
        FormalSum<TGen> out(raw.ring());
        for (const auto& [g, c] : raw.terms())
            out.add_term(TGen{target_module, g}, c);
        return out;
    };
    ext.enumerate = [p](int cutoff) {
        std::vector<TGen> out;
        for (const auto& g : p.algebra.enumerate(cutoff))
            out.push_back(TGen{false, g});
        for (const auto& g : p.bimodule.enumerate(cutoff))
            out.push_back(TGen{true, g});
        return out;
    };
    if (p.algebra.degree)
        ext.degree = [p](const TGen& g) { return p.algebra.degree(g.g); };
    if (p.algebra.name)
        ext.name = [p](const TGen& g) {
            return std::string(g.module_side ? "[" : "(") + p.algebra.name(g.g) +
                   (g.module_side ? "]" : ")");
        };
    return ext;
}

/// A as a bimodule over itself with the multiplication as pairing.
template <class Gen>
ExtensionParts<Gen> build_trivial_extension(const AlgebraSpec<Gen>& a)
{
    ExtensionParts<Gen> parts;
    parts.algebra = a;
    parts.bimodule.left = a.mul;
    parts.bimodule.right = a.mul;
    parts.bimodule.enumerate = a.enumerate;
    parts.pairing.pair = a.mul;
    return parts;
}

// ---------------------------------------------------------------------------
// Structure checks
// ---------------------------------------------------------------------------

struct CheckViolation {
    std::string identity;
    std::string witness;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::vector<CheckViolation> violations;
    long long checks = 0;
    bool ok() const { return violations.empty(); }
};

namespace detail {

template <class Gen, class NameFn>
std::string sum_text(const FormalSum<Gen>& s, NameFn&& name)
{
    return to_text(s, name);
}

} // namespace detail

/// Evaluate the four adaptedness identities on all generator triples with
/// index up to the cutoff. An empty report means the pairing is adapted.
template <class Gen>
CheckReport check_adapted(const ExtensionParts<Gen>& p, int cutoff)
{
    if (cutoff < 0)
        throw error("check_adapted: cutoff must be >= 0");
    CheckReport rep;
    auto name = p.algebra.name ? p.algebra.name
                               : std::function<std::string(const Gen&)>(
                                     [](const Gen&) { return std::string("<gen>"); });
    auto record = [&](const char* id, const Gen& u, const Gen& v, const Gen& w,
                      const FormalSum<Gen>& lhs, const FormalSum<Gen>& rhs) {
        ++rep.checks;
        if (!(lhs == rhs))
            rep.violations.push_back({id,
                                      name(u) + ", " + name(v) + ", " + name(w),
                                      detail::sum_text(lhs, name),
                                      detail::sum_text(rhs, name)});
    };
    const auto as = p.algebra.enumerate(cutoff);
    const auto bs = p.bimodule.enumerate(cutoff);
    auto mulA = [&](const FormalSum<Gen>& x, const FormalSum<Gen>& y) {
        return multiply(x, y, p.algebra.mul);
    };
    auto lift = [&](const Gen& g) { return FormalSum<Gen>::single(p.algebra.ring, g); };

    for (const auto& a : as)
        for (const auto& y : bs)
            for (const auto& z : bs) {
                // a ^ (y ^_B z) = (a *_l y) ^_B z
                record("a^(y^z) = (a*y)^z", a, y, z,
                       mulA(lift(a), p.pairing.pair(y, z)),
                       multiply(p.bimodule.left(a, y),
                                lift(z), p.pairing.pair));
            }
    for (const auto& x : bs)
        for (const auto& y : bs)
            for (const auto& a : as) {
                // (x ^_B y) ^ a = x ^_B (y *_r a)
                record("(x^y)^a = x^(y*a)", x, y, a,
                       mulA(p.pairing.pair(x, y), lift(a)),
                       multiply(lift(x), p.bimodule.right(y, a), p.pairing.pair));
            }
    for (const auto& x : bs)
        for (const auto& a : as)
            for (const auto& z : bs) {
                // (x *_r a) ^_B z = x ^_B (a *_l z)
                record("(x*a)^z = x^(a*z)", x, a, z,
                       multiply(p.bimodule.right(x, a), lift(z), p.pairing.pair),
                       multiply(lift(x), p.bimodule.left(a, z), p.pairing.pair));
            }
    for (const auto& x : bs)
        for (const auto& y : bs)
            for (const auto& z : bs) {
                // (x ^_B y) *_l z = x *_r (y ^_B z)
                record("(x^y)*z = x*(y^z)", x, y, z,
                       multiply(p.pairing.pair(x, y), lift(z), p.bimodule.left),
                       multiply(lift(x), p.pairing.pair(y, z), p.bimodule.right));
            }
    return rep;
}

/// Exhaustive associativity check on generator triples up to the cutoff.
template <class Gen>
CheckReport check_associativity(const AlgebraSpec<Gen>& alg, int cutoff)
{
    CheckReport rep;
    auto name = alg.name ? alg.name
                         : std::function<std::string(const Gen&)>(
                               [](const Gen&) { return std::string("<gen>"); });
    const auto gens = alg.enumerate(cutoff);
    auto lift = [&](const Gen& g) { return FormalSum<Gen>::single(alg.ring, g); };
    for (const auto& x : gens)
        for (const auto& y : gens) {
            FormalSum<Gen> xy = alg.mul(x, y);
            for (const auto& z : gens) {
                ++rep.checks;
                FormalSum<Gen> lhs = alg.product(xy, lift(z));
                FormalSum<Gen> rhs = alg.product(lift(x), alg.mul(y, z));
                if (!(lhs == rhs))
                    rep.violations.push_back({"(xy)z = x(yz)",
                                              name(x) + ", " + name(y) + ", " + name(z),
                                              detail::sum_text(lhs, name),
                                              detail::sum_text(rhs, name)});
            }
        }
    return rep;
}

/// Two-sided unit law on every generator up to the cutoff.
template <class Gen>
CheckReport check_unit(const AlgebraSpec<Gen>& alg, int cutoff)
{
    CheckReport rep;
    auto name = alg.name ? alg.name
                         : std::function<std::string(const Gen&)>(
                               [](const Gen&) { return std::string("<gen>"); });
    for (const auto& g : alg.enumerate(cutoff)) {
        ++rep.checks;
        FormalSum<Gen> want = FormalSum<Gen>::single(alg.ring, g);
        FormalSum<Gen> l = alg.mul(alg.unit, g);
        FormalSum<Gen> r = alg.mul(g, alg.unit);
        if (!(l == want) || !(r == want))
            rep.violations.push_back({"unit law", name(g), detail::sum_text(l, name),
                                      detail::sum_text(r, name)});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Degree-zero involution search (trivial-extension witness)
// ---------------------------------------------------------------------------

/// Exhaustively search Z-linear combinations of the degree-0 basis elements
/// (degree taken in the grading of the unit) with coefficients in
/// [-bound, bound] for elements c with c^2 = 1 and c != +-1. The bound is a
/// documented search parameter; the result is a semidecision.
template <class Gen>
std::vector<FormalSum<Gen>> find_degree0_involutions(const AlgebraSpec<Gen>& alg, int cutoff,
                                                     int bound = 2)
{
    if (!alg.degree)
        throw error("find_degree0_involutions needs a degree function");
    const long long unit_deg = alg.degree(alg.unit);
    std::vector<Gen> gens;
    for (const auto& g : alg.enumerate(cutoff))
        if (alg.degree(g) == unit_deg)
            gens.push_back(g);
    const std::size_t m = gens.size();
    if (m == 0)
        return {};
    if (m > 14)
        throw error("degree-0 component too large for exhaustive search (" +
                    std::to_string(m) + " generators)");

    // Precompute pairwise products over a shared basis so the inner loop is
    // integer vector arithmetic.
    std::map<Gen, std::size_t> basis_index;
    std::vector<Gen> basis;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> prod(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            FormalSum<Gen> pij = alg.mul(gens[i], gens[j]);
            for (const auto& [g, c] : pij.terms()) {
                auto [it, fresh] = basis_index.emplace(g, basis.size());
                if (fresh)
                    basis.push_back(g);
                if (boost::multiprecision::denominator(c) != 1)
                    throw error("involution search expects integral structure constants");
                prod[i * m + j].push_back(
                    {it->second,
                     static_cast<std::int64_t>(boost::multiprecision::numerator(c).convert_to<long long>())});
            }
        }
    if (basis_index.find(alg.unit) == basis_index.end()) {
        basis_index.emplace(alg.unit, basis.size());
        basis.push_back(alg.unit);
    }

    const bool f2 = alg.ring == RingKind::FieldOfTwoElements;
    std::vector<int> coeff(m, -bound);
    std::vector<std::int64_t> acc(basis.size());
    std::vector<FormalSum<Gen>> found;
    const std::size_t unit_slot = basis_index.at(alg.unit);

    auto is_unit_vec = [&](const std::vector<std::int64_t>& v) {
        for (std::size_t b = 0; b < v.size(); ++b) {
            std::int64_t want = (b == unit_slot) ? 1 : 0;
            std::int64_t have = f2 ? ((v[b] % 2 + 2) % 2) : v[b];
            if (have != want)
                return false;
        }
        return true;
    };

    while (true) {
        std::fill(acc.begin(), acc.end(), 0);
        bool all_zero = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (coeff[i] == 0)
                continue;
            all_zero = false;
            for (std::size_t j = 0; j < m; ++j) {
                if (coeff[j] == 0)
                    continue;
                const std::int64_t cij = static_cast<std::int64_t>(coeff[i]) * coeff[j];
                for (const auto& [slot, val] : prod[i * m + j])
                    acc[slot] += cij * val;
            }
        }
        if (!all_zero && is_unit_vec(acc)) {
            FormalSum<Gen> c(alg.ring);
            for (std::size_t i = 0; i < m; ++i)
                if (coeff[i] != 0)
                    c.add_term(gens[i], Rat(coeff[i]));
            bool is_pm_unit =
                (c == alg.unit_element()) || (c == alg.unit_element().scaled(Rat(-1)));
            if (!is_pm_unit && !c.is_zero())
                found.push_back(c);
        }
        // odometer
        std::size_t pos = 0;
        while (pos < m && coeff[pos] == bound)
            coeff[pos++] = -bound;
        if (pos == m)
            break;
        ++coeff[pos];
    }
    return found;
}

} // namespace antipode
