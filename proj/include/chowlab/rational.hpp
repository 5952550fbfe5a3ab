#ifndef CHOWLAB_RATIONAL_HPP
#define CHOWLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "chowlab/errors.hpp"

namespace chowlab {

// Exact arithmetic everywhere; cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Anything else is a
// parse error.
Rat parse_rat(const std::string& text);

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

std::vector<std::string> ratvec_to_strings(const RatVec& v);
RatVec parse_ratvec(const std::vector<std::string>& texts);

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorKind::Internal, "dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorKind::Internal, "sub: size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorKind::Internal, "add: size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const RatVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

} // namespace chowlab

#endif
