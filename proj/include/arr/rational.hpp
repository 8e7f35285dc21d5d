#ifndef ARR_RATIONAL_HPP
#define ARR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace arr {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Text form "p/q" or "p".
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::optional<Rat> rat_parse(const std::string& s) {
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!ok_int(p) || !ok_int(q)) return std::nullopt;
        Int den(q);
        if (den == 0) return std::nullopt;
        return Rat(Int(p), den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Largest power of two 2^-k (k >= 0) that is <= r. Requires r > 0.
// Used to keep slab heights on a short-bit grid.
inline Rat pow2_floor(const Rat& r) {
    if (r <= 0) throw std::invalid_argument("pow2_floor: nonpositive value");
    if (r >= 1) return Rat(1);
    // want smallest k with 2^k >= q/p, i.e. 2^-k <= p/q
    Int p = rat_num(r), q = rat_den(r);
    unsigned k = 0;
    Int pw = 1;
    while (pw * p < q) { pw <<= 1; ++k; }
    return Rat(Int(1), pw);
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace arr

#endif
