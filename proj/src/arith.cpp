#include "toric/arith.hpp"
#include "toric/error.hpp"

#include <limits>
#include <sstream>

namespace toric {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return "input";
        case ErrorKind::not_pointed: return "not-pointed";
        case ErrorKind::not_homogeneous: return "not-homogeneous";
        case ErrorKind::not_a_sublattice: return "not-a-sublattice";
        case ErrorKind::not_a_circuit: return "not-a-circuit";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::instability: return "instability";
        case ErrorKind::cap_exceeded: return "cap-exceeded";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

IntVector clear_denominators(std::span<const Rational> v) {
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, q.get_den());
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(Integer(q.get_num() * (den / q.get_den())));
    return make_primitive(std::move(out));
}

IntVector to_integers(std::span<const Exponent> v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

IntVector to_integers(std::span<const std::int64_t> v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

ExpVector to_exponents(std::span<const Integer> v) {
    ExpVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x > std::numeric_limits<Exponent>::max() || x < std::numeric_limits<Exponent>::min())
            fail(ErrorKind::overflow, "exponent " + x.get_str() + " does not fit 32 bits");
        out.push_back(static_cast<Exponent>(x.get_si()));
    }
    return out;
}

std::int64_t to_int64(const Integer& x) {
    if (!x.fits_slong_p()) fail(ErrorKind::overflow, "value " + x.get_str() + " does not fit 64 bits");
    return x.get_si();
}

std::string to_string(std::span<const Integer> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace toric
