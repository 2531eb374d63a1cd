#pragma once

#include <doctest.h>

#include <string>

#include "quatmob/flt.hpp"

namespace testing {

using quatmob::ExtQuaternion;
using quatmob::Quaternion;

inline const Quaternion I = Quaternion::i();
inline const Quaternion J = Quaternion::j();
inline const Quaternion K = Quaternion::k();

inline double qdist(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

inline double qdist(const ExtQuaternion& p, const ExtQuaternion& q) {
    if (p.is_infinite() || q.is_infinite()) return p.is_infinite() == q.is_infinite() ? 0.0 : 1e300;
    return (p.finite() - q.finite()).norm();
}

inline double mdist(const quatmob::Mat2H& m, const quatmob::Mat2H& n) { return quatmob::max_entry_diff(m, n); }

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

/// Runs f and reports the ErrorCode it throws, or nullopt.
template <class F>
std::optional<quatmob::ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const quatmob::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<quatmob::Quaternion> {
    static String convert(const quatmob::Quaternion& q) { return quatmob::to_string(q).c_str(); }
};
template <>
struct StringMaker<quatmob::ErrorCode> {
    static String convert(quatmob::ErrorCode c) { return std::string(quatmob::to_string(c)).c_str(); }
};
}  // namespace doctest
