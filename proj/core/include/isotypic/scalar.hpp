#pragma once

#include <string>

#include "isotypic/cyclotomic.hpp"
#include "isotypic/numfield.hpp"
#include "isotypic/rational.hpp"

namespace isotypic {

// Uniform helpers over the three coefficient types. A "like" argument carries
// the context (cyclotomic level or number field) a fresh value needs.

inline Rational zero_like(const Rational&) { return Rational(0); }
inline CycValue zero_like(const CycValue& a) { return CycValue(a.level()); }
inline NumFieldValue zero_like(const NumFieldValue& a) { return NumFieldValue(a.field()); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline CycValue one_like(const CycValue& a) { return CycValue(a.level(), Rational(1)); }
inline NumFieldValue one_like(const NumFieldValue& a) { return NumFieldValue(a.field(), Rational(1)); }

inline Rational from_rational_like(const Rational&, const Rational& q) { return q; }
inline CycValue from_rational_like(const CycValue& a, const Rational& q) { return CycValue(a.level(), q); }
inline NumFieldValue from_rational_like(const NumFieldValue& a, const Rational& q) { return NumFieldValue(a.field(), q); }

inline Rational inverse(const Rational& a) { return 1 / a; }
inline CycValue inverse(const CycValue& a) { return a.inverse(); }
inline NumFieldValue inverse(const NumFieldValue& a) { return a.inverse(); }

inline bool is_rational_value(const Rational&) { return true; }
inline bool is_rational_value(const CycValue& a) { return a.is_rational(); }
inline bool is_rational_value(const NumFieldValue& a) { return a.is_rational(); }

inline Rational rational_value(const Rational& a) { return a; }
inline Rational rational_value(const CycValue& a) { return a.rational_part(); }
inline Rational rational_value(const NumFieldValue& a) { return a.rational_part(); }

inline std::string scalar_string(const Rational& a) { return to_string(a); }
inline std::string scalar_string(const CycValue& a) { return a.to_string(); }
inline std::string scalar_string(const NumFieldValue& a) { return a.to_string(); }

}  // namespace isotypic
