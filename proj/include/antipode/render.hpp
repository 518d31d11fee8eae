#pragma once

#include "formal_sum.hpp"
#include "sphere_tables.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <string>

namespace antipode {

using Json = nlohmann::json;

inline std::string to_text(const GradedElement& x)
{
    return to_text(x, [](const Generator& g) { return to_text(g); });
}

inline Json index_json(const HalfInt& idx)
{
    if (idx.is_integer())
        return Json(idx.whole_value());
    return Json(idx.str()); // half-integers render as "1/2"
}

inline Json to_json(const Generator& g)
{
    return Json{{"space", space_name(g.space)},
                {"family", family_name(g.family)},
                {"index", index_json(g.index)}};
}

inline Json to_json(const GradedElement& x)
{
    Json terms = Json::array();
    for (const auto& [g, c] : x.terms()) {
        Json t = to_json(g);
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return Json{{"ring", ring_name(x.ring())}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------
// Parsing: canonical text back into generators and formal sums
// ---------------------------------------------------------------------------

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done()
    {
        skip_ws();
        return i >= s.size();
    }
    bool eat(char c)
    {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

inline HalfInt parse_index(Cursor& c)
{
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+'))
        ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start)
        throw parse_error("expected an index in '" + c.s + "'");
    int num = std::stoi(c.s.substr(start, c.i - start));
    if (c.eat('/')) {
        std::size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            ++c.i;
        int den = std::stoi(c.s.substr(dstart, c.i - dstart));
        if (den == 2)
            return HalfInt{num};
        if (den == 1)
            return HalfInt::whole(num);
        throw parse_error("index denominators other than 1 and 2 are not supported");
    }
    return HalfInt::whole(num);
}

inline Family parse_family(Cursor& c)
{
    c.skip_ws();
    auto starts = [&](const char* w) {
        return c.s.compare(c.i, std::string(w).size(), w) == 0;
    };
    struct Entry {
        const char* text;
        Family family;
    };
    // longest match first
    static const Entry entries[] = {
        {"fund", Family::Fund}, {"pt", Family::Pt},   {"A'", Family::APrime},
        {"B'", Family::BPrime}, {"g'", Family::GammaPrime}, {"G'", Family::GammaTopPrime},
        {"A", Family::A},       {"B", Family::B},     {"E", Family::E},
        {"g", Family::Gamma},   {"G", Family::GammaTop},
    };
    for (const auto& e : entries)
        if (starts(e.text)) {
            c.i += std::string(e.text).size();
            return e.family;
        }
    throw parse_error("unknown generator family at '" + c.s.substr(c.i) + "'");
}

inline Rat parse_rational(Cursor& c)
{
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+'))
        ++c.i;
    std::size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == digits)
        throw parse_error("expected a coefficient in '" + c.s + "'");
    std::string num = c.s.substr(start, c.i - start);
    if (c.eat('/')) {
        std::size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            ++c.i;
        return Rat(BigInt(num)) / Rat(BigInt(c.s.substr(dstart, c.i - dstart)));
    }
    return Rat(BigInt(num));
}

} // namespace detail

/// Parse a single generator, e.g. `A[0]`, `B'[5]`, `g[-1/2]`, `pt`, `fund`.
inline Generator parse_generator(const std::string& text, int n)
{
    detail::Cursor c{text};
    Family f = detail::parse_family(c);
    HalfInt idx = HalfInt::whole(0);
    if (c.eat('[')) {
        idx = detail::parse_index(c);
        if (!c.eat(']'))
            throw parse_error("missing ']' in '" + text + "'");
    }
    if (!c.done())
        throw parse_error("trailing input in generator '" + text + "'");
    return Generator{natural_space(f), f, idx, n};
}

/// Parse a formal sum in canonical text form, e.g. `2*A[0] + 3*B'[5] - G[1/2]`.
inline GradedElement parse_element(const std::string& text, int n, RingKind ring)
{
    detail::Cursor c{text};
    GradedElement out(ring);
    if (c.done())
        throw parse_error("empty element");
    if (c.peek() == '0') {
        ++c.i;
        if (c.done())
            return out;
        throw parse_error("trailing input after '0'");
    }
    bool first = true;
    while (!c.done()) {
        Rat sign(1);
        if (c.eat('-'))
            sign = -1;
        else if (c.eat('+'))
            sign = 1;
        else if (!first)
            throw parse_error("expected '+' or '-' in '" + text + "'");
        Rat coeff(1);
        char p = c.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            coeff = detail::parse_rational(c);
            if (!c.eat('*'))
                throw parse_error("expected '*' after coefficient in '" + text + "'");
        }
        Family fam = detail::parse_family(c);
        HalfInt idx = HalfInt::whole(0);
        if (c.eat('[')) {
            idx = detail::parse_index(c);
            if (!c.eat(']'))
                throw parse_error("missing ']' in '" + text + "'");
        }
        out.add_term(Generator{natural_space(fam), fam, idx, n}, sign * coeff);
        first = false;
    }
    return out;
}

} // namespace antipode
