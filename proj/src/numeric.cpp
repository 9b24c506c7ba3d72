#include "bhk/numeric.hpp"

#include "bhk/errors.hpp"

#include <cctype>
#include <limits>

namespace bhk {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw invariant_error("floor_div by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rat frac_mod1(const Rat& r) {
    const Int q = floor_div(num(r), den(r));
    return r - Rat(q);
}

std::string rat_to_string(const Rat& r) {
    const Int d = den(r);
    if (d == 1) return num(r).str();
    return num(r).str() + "/" + d.str();
}

Rat rat_from_string(std::string_view text) {
    const auto bad = [&] { throw parse_error("malformed rational '" + std::string(text) + "'"); };
    std::size_t i = 0;
    const auto read_int = [&]() -> Int {
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) bad();
        Int v(std::string(text.substr(start, i - start)));
        return neg ? Int(-v) : v;
    };
    const Int n = read_int();
    if (i == text.size()) return Rat(n);
    if (text[i] != '/') bad();
    ++i;
    const Int d = read_int();
    if (i != text.size()) bad();
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

std::int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw invariant_error("integer too large for 64-bit serialization: " + v.str());
    return static_cast<std::int64_t>(v);
}

} // namespace bhk
