#pragma once

#include <string>

#include "cascade_kit/verify.hpp"

namespace ckt {

inline ck::Root R(const std::string& s) { return ck::Root::parse(s); }
inline ck::SystemPtr sys(ck::Type t, int n) { return ck::RootSystem::make(t, n); }
inline ck::Scalar Q(long p, long q = 1) { return ck::Scalar::ratio(p, q); }
inline ck::SymPoly var(const ck::SystemPtr& s, const std::string& r) { return ck::SymPoly::var(s, R(r)); }

}  // namespace ckt
