#pragma once

#include "core.hpp"

#include <set>
#include <string>
#include <vector>

namespace antipode {

/// Finitely generated abelian group: free rank plus prime-power torsion orders.
struct AbelianGroupSummary {
    unsigned free_rank = 0;
    std::multiset<unsigned long long> torsion; // each entry >= 2

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroupSummary&) const = default;

    AbelianGroupSummary& operator+=(const AbelianGroupSummary& other)
    {
        free_rank += other.free_rank;
        torsion.insert(other.torsion.begin(), other.torsion.end());
        return *this;
    }
};

inline AbelianGroupSummary free_group(unsigned rank)
{
    return AbelianGroupSummary{rank, {}};
}

inline AbelianGroupSummary torsion_group(unsigned long long order)
{
    AbelianGroupSummary g;
    if (order < 2)
        throw error("torsion orders must be >= 2");
    g.torsion.insert(order);
    return g;
}

inline std::string to_text(const AbelianGroupSummary& g)
{
    if (g.is_trivial())
        return "0";
    std::string s;
    if (g.free_rank == 1)
        s = "Z";
    else if (g.free_rank > 1)
        s = "Z^" + std::to_string(g.free_rank);
    for (auto q : g.torsion) {
        if (!s.empty())
            s += " + ";
        s += "Z_" + std::to_string(q);
    }
    return s;
}

} // namespace antipode
