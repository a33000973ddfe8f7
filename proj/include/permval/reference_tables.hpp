#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permval::reference {

// Known alpha values for the regular permutohedron, n = 3..6, used as frozen
// fixtures by the test suite and the reproduction battery.
using AlphaRow = std::pair<std::vector<int>, std::string>;

inline const std::vector<AlphaRow>& alpha_rows(int n) {
  static const std::vector<AlphaRow> n3 = {
      {{}, "1/24"},   {{1}, "11/72"},   {{2}, "7/36"},    {{3}, "11/72"},
      {{1, 2}, "1/2"}, {{1, 3}, "1/2"}, {{2, 3}, "1/2"}, {{1, 2, 3}, "1"},
  };
  static const std::vector<AlphaRow> n4 = {
      {{}, "1/120"},     {{1}, "5/144"},    {{2}, "7/144"},    {{3}, "7/144"},
      {{4}, "5/144"},    {{1, 2}, "7/48"},  {{1, 3}, "13/72"}, {{1, 4}, "5/36"},
      {{2, 3}, "5/24"},  {{2, 4}, "13/72"}, {{3, 4}, "7/48"},  {{1, 2, 3}, "1/2"},
      {{1, 2, 4}, "1/2"}, {{1, 3, 4}, "1/2"}, {{2, 3, 4}, "1/2"}, {{1, 2, 3, 4}, "1"},
  };
  static const std::vector<AlphaRow> n5 = {
      {{}, "1/720"},        {{1}, "137/21600"},   {{2}, "101/10800"},
      {{3}, "37/3600"},     {{4}, "101/10800"},   {{5}, "137/21600"},
      {{1, 2}, "1/32"},     {{1, 3}, "1/24"},     {{1, 4}, "1/24"},
      {{1, 5}, "1/36"},     {{2, 3}, "5/96"},     {{2, 4}, "1/18"},
      {{2, 5}, "1/24"},     {{3, 4}, "5/96"},     {{3, 5}, "1/24"},
      {{4, 5}, "1/32"},     {{1, 2, 3}, "17/120"}, {{1, 2, 4}, "31/180"},
      {{1, 2, 5}, "19/144"}, {{1, 3, 4}, "47/240"}, {{1, 3, 5}, "1/6"},
      {{1, 4, 5}, "19/144"}, {{2, 3, 4}, "13/60"},  {{2, 3, 5}, "47/240"},
      {{2, 4, 5}, "31/180"}, {{3, 4, 5}, "17/120"}, {{1, 2, 3, 4}, "1/2"},
      {{1, 2, 3, 5}, "1/2"}, {{1, 2, 4, 5}, "1/2"}, {{1, 3, 4, 5}, "1/2"},
      {{2, 3, 4, 5}, "1/2"}, {{1, 2, 3, 4, 5}, "1"},
  };
  static const std::vector<AlphaRow> n6 = {
      {{}, "1/5040"},        {{1}, "7/7200"},        {{2}, "1/675"},
      {{3}, "37/21600"},     {{4}, "37/21600"},      {{5}, "1/675"},
      {{6}, "7/7200"},       {{1, 2}, "29/5400"},    {{1, 3}, "1/135"},
      {{1, 4}, "541/64800"}, {{1, 5}, "149/21600"},  {{1, 6}, "151/32400"},
      {{2, 3}, "211/21600"}, {{2, 4}, "719/64800"},  {{2, 5}, "181/16200"},
      {{2, 6}, "149/21600"}, {{3, 4}, "41/3600"},    {{3, 5}, "719/64800"},
      {{3, 6}, "541/64800"}, {{4, 5}, "211/21600"},  {{4, 6}, "1/135"},
      {{5, 6}, "29/5400"},   {{1, 2, 3}, "7/240"},   {{1, 2, 4}, "3/80"},
      {{1, 2, 5}, "11/288"}, {{1, 2, 6}, "7/288"},   {{1, 3, 4}, "11/240"},
      {{1, 3, 5}, "7/144"},  {{1, 3, 6}, "5/144"},   {{1, 4, 5}, "13/288"},
      {{1, 4, 6}, "5/144"},  {{1, 5, 6}, "7/288"},   {{2, 3, 4}, "13/240"},
      {{2, 3, 5}, "17/288"}, {{2, 3, 6}, "13/288"},  {{2, 4, 5}, "17/288"},
      {{2, 4, 6}, "7/144"},  {{2, 5, 6}, "11/288"},  {{3, 4, 5}, "13/240"},
      {{3, 4, 6}, "11/240"}, {{3, 5, 6}, "3/80"},    {{4, 5, 6}, "7/240"},
      {{1, 2, 3, 4}, "5/36"},  {{1, 2, 3, 5}, "1/6"},   {{1, 2, 3, 6}, "23/180"},
      {{1, 2, 4, 5}, "3/16"},  {{1, 2, 4, 6}, "19/120"}, {{1, 2, 5, 6}, "1/8"},
      {{1, 3, 4, 5}, "37/180"}, {{1, 3, 4, 6}, "11/60"}, {{1, 3, 5, 6}, "19/120"},
      {{1, 4, 5, 6}, "23/180"}, {{2, 3, 4, 5}, "2/9"},   {{2, 3, 4, 6}, "37/180"},
      {{2, 3, 5, 6}, "3/16"},  {{2, 4, 5, 6}, "1/6"},   {{3, 4, 5, 6}, "5/36"},
      {{1, 2, 3, 4, 5}, "1/2"}, {{1, 2, 3, 4, 6}, "1/2"}, {{1, 2, 3, 5, 6}, "1/2"},
      {{1, 2, 4, 5, 6}, "1/2"}, {{1, 3, 4, 5, 6}, "1/2"}, {{2, 3, 4, 5, 6}, "1/2"},
      {{1, 2, 3, 4, 5, 6}, "1"},
  };
  switch (n) {
    case 3: return n3;
    case 4: return n4;
    case 5: return n5;
    case 6: return n6;
    default:
      throw std::runtime_error("permval::reference::alpha_rows: tables exist for n = 3..6 only");
  }
}

// Known Ehrhart coefficient lists (ascending degree).
struct EhrhartRow {
  int n;
  std::vector<long long> weights;
  std::vector<std::string> coeffs;
};

inline const std::vector<EhrhartRow>& ehrhart_rows() {
  static const std::vector<EhrhartRow> rows = {
      {5, {1, 0, 0, 0, 0}, {"1", "137/60", "15/8", "17/24", "1/8", "1/120"}},
      {5, {0, 1, 0, 0, 0}, {"1", "101/30", "5", "47/12", "3/2", "13/60"}},
      {5, {0, 0, 1, 0, 0}, {"1", "37/10", "25/4", "23/4", "11/4", "11/20"}},
      {3, {1, 0, 1}, {"1", "11/3", "5", "10/3"}},
      {3, {1, 0, 0}, {"1", "11/6", "1", "1/6"}},
  };
  return rows;
}

}  // namespace permval::reference
