#pragma once

#include <doctest.h>

#include "ncg/poly.hpp"
#include "ncg/spectra.hpp"
#include "ncg/surd.hpp"

namespace doctest {

template <>
struct StringMaker<ncg::ExactSpectrum> {
  static String convert(const ncg::ExactSpectrum& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<ncg::SurdExpr> {
  static String convert(const ncg::SurdExpr& e) { return e.str().c_str(); }
};
template <>
struct StringMaker<ncg::SurdValue> {
  static String convert(const ncg::SurdValue& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<ncg::RationalPoly> {
  static String convert(const ncg::RationalPoly& p) { return p.str().c_str(); }
};

}  // namespace doctest
