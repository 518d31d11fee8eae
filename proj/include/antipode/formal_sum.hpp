#pragma once

#include "core.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace antipode {

/// Exact formal sum of generators with coefficients in a chosen ring.
/// Zero coefficients are never stored, so equality is equality of term maps.
/// The key type only needs a strict weak order.
template <class Gen>
class FormalSum {
public:
    explicit FormalSum(RingKind ring = RingKind::Integers) : ring_(ring) {}

    static FormalSum single(RingKind ring, const Gen& g, const Rat& c = Rat(1))
    {
        FormalSum s(ring);
        s.add_term(g, c);
        return s;
    }

    RingKind ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Gen, Rat>& terms() const { return terms_; }

    void add_term(const Gen& g, const Rat& c)
    {
        Rat v = ring_normalize(ring_, c);
        if (v == 0)
            return;
        auto [it, fresh] = terms_.emplace(g, v);
        if (!fresh) {
            it->second = ring_normalize(ring_, it->second + v);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const FormalSum& other, const Rat& scale = Rat(1))
    {
        if (other.ring_ != ring_)
            throw ring_mismatch("formal sums over different coefficient rings");
        for (const auto& [g, c] : other.terms_)
            add_term(g, scale * c);
    }

    FormalSum scaled(const Rat& c) const
    {
        FormalSum r(ring_);
        for (const auto& [g, v] : terms_)
            r.add_term(g, v * c);
        return r;
    }

    Rat coefficient(const Gen& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// The unique term of a single-generator sum.
    std::pair<Gen, Rat> only_term() const
    {
        if (terms_.size() != 1)
            throw error("formal sum is not a single term");
        return *terms_.begin();
    }

    FormalSum with_ring(RingKind target) const
    {
        FormalSum r(target);
        for (const auto& [g, c] : terms_)
            r.add_term(g, c);
        return r;
    }

    bool operator==(const FormalSum& other) const
    {
        return ring_ == other.ring_ && terms_ == other.terms_;
    }

private:
    RingKind ring_;
    std::map<Gen, Rat> terms_;
};

/// cx*x + cy*y with zero terms pruned. The inputs must share a ring.
template <class Gen>
FormalSum<Gen> combine(const FormalSum<Gen>& x, const FormalSum<Gen>& y, const Rat& cx,
                       const Rat& cy)
{
    if (x.ring() != y.ring())
        throw ring_mismatch("combine: coefficient rings differ");
    FormalSum<Gen> r(x.ring());
    r.add(x, cx);
    r.add(y, cy);
    return r;
}

/// Bilinear extension of a generator-level product.
template <class Gen, class MulFn>
FormalSum<Gen> multiply(const FormalSum<Gen>& x, const FormalSum<Gen>& y, MulFn&& gen_mul)
{
    if (x.ring() != y.ring())
        throw ring_mismatch("multiply: coefficient rings differ");
    FormalSum<Gen> r(x.ring());
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms())
            r.add(gen_mul(gx, gy), cx * cy);
    return r;
}

struct DegreeResult {
    enum class Kind { Zero, Homogeneous, Mixed } kind;
    long long value = 0; // meaningful for Homogeneous only

    bool homogeneous() const { return kind == Kind::Homogeneous; }
    bool mixed() const { return kind == Kind::Mixed; }
};

/// Common degree of all terms, or Mixed. The empty sum reports Zero.
template <class Gen, class DegFn>
DegreeResult degree_of(const FormalSum<Gen>& x, DegFn&& deg)
{
    if (x.is_zero())
        return {DegreeResult::Kind::Zero, 0};
    std::optional<long long> d;
    for (const auto& [g, c] : x.terms()) {
        long long dg = deg(g);
        if (!d)
            d = dg;
        else if (*d != dg)
            return {DegreeResult::Kind::Mixed, 0};
    }
    return {DegreeResult::Kind::Homogeneous, *d};
}

inline std::string coeff_str(const Rat& c)
{
    return c.str();
}

/// Canonical text: terms in key order, e.g. `2*A[0] + 3*B'[5] - G[1/2]`.
template <class Gen, class NameFn>
std::string to_text(const FormalSum<Gen>& x, NameFn&& name)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (a != 1)
            os << coeff_str(a) << "*";
        os << name(g);
        first = false;
    }
    return os.str();
}

} // namespace antipode
