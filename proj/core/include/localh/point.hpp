#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "localh/rational.hpp"

namespace localh {

/// A point with exact rational coordinates in some fixed ambient dimension.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }

  bool operator==(const Point& other) const { return coords == other.coords; }

  // Lexicographic; dimension first so mixed-dimension sets stay ordered.
  bool operator<(const Point& other) const {
    if (coords.size() != other.coords.size()) return coords.size() < other.coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != other.coords[i]) return coords[i] < other.coords[i];
    }
    return false;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ", ";
      out += rational_to_string(coords[i]);
    }
    out += ")";
    return out;
  }
};

}  // namespace localh
