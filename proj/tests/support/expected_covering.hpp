#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

// Jacobi residuals J(i,j,k) of the tailed presentation of L_p, as sums of
// signed tails over the 39-dimensional ambient basis (1-based).
struct ExpectedResidual {
  std::size_t i, j, k;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
};

inline const std::vector<ExpectedResidual>& expected_residuals() {
  static const std::vector<ExpectedResidual> table{
      {3, 2, 1, {}},
      {4, 2, 1, {{16, 1}, {11, -1}}},
      {4, 3, 1, {{22, 1}, {12, -1}}},
      {4, 3, 2, {{23, 1}, {18, -1}}},
      {5, 2, 1, {{10, 1}, {17, -1}}},
      {5, 3, 1, {{18, -1}}},
      {5, 3, 2, {{12, -1}}},
      {5, 4, 1, {{14, 1}, {19, -1}}},
      {5, 4, 2, {{20, 1}, {13, -1}}},
      {5, 4, 3, {{26, 1}}},
      {6, 2, 1, {{23, -1}}},
      {6, 3, 1, {{16, 1}, {24, -1}}},
      {6, 3, 2, {{17, 1}}},
      {6, 4, 1, {{15, 1}, {25, -1}}},
      {6, 4, 2, {{21, 1}}},
      {6, 4, 3, {{27, 1}, {19, -1}}},
      {6, 5, 1, {{21, 1}, {26, -1}}},
      {6, 5, 2, {{15, 1}}},
      {6, 5, 3, {{20, -1}}},
      {6, 5, 4, {}},
  };
  return table;
}

// Nonzero brackets of the 23-dimensional covering algebra after relabelling:
// (i, j) -> terms, 1-based, i > j.
struct ExpectedBracket {
  std::size_t i, j;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
};

inline const std::vector<ExpectedBracket>& expected_covering_brackets() {
  static const std::vector<ExpectedBracket> table{
      {2, 1, {{12, 1}}},          {3, 1, {{13, 1}}},          {3, 2, {{14, 1}}},
      {4, 1, {{7, 1}}},           {4, 2, {{8, 1}}},           {4, 3, {{9, 1}}},
      {5, 1, {{8, 1}, {15, 1}}},  {5, 2, {{7, 1}, {16, 1}}},  {5, 3, {{17, 1}}},
      {5, 4, {{18, 1}}},          {6, 1, {{9, 1}, {19, 1}}},  {6, 2, {{20, 1}}},
      {6, 3, {{8, 1}, {21, 1}}},  {6, 4, {{22, 1}}},          {6, 5, {{23, 1}}},
      {7, 2, {{10, 1}}},          {7, 5, {{11, 1}}},          {8, 1, {{10, 1}}},
      {8, 4, {{11, 1}}},          {9, 3, {{10, 1}}},          {9, 6, {{11, 1}}},
  };
  return table;
}

// Tails of the ambient presentation that survive the Jacobi reduction, with
// their index in the covering algebra.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 14> kSurvivingTails{{
    {11, 10}, {14, 11}, {28, 12}, {29, 13}, {30, 14}, {31, 15}, {32, 16},
    {33, 17}, {34, 18}, {35, 19}, {36, 20}, {37, 21}, {38, 22}, {39, 23},
}};
