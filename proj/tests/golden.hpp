#pragma once

#include <string>
#include <vector>

// Reference values for gradings and component words.

namespace golden {

// G for a = b = c = d = 2, indexed [eps_2][eps_1].
inline const int kG2[4][4] = {{0, 0, 2, 4}, {2, 2, 4, 6}, {4, 6, 8, 8}, {6, 8, 10, 10}};

struct G3Entry {
  const char* eps;
  int r, G;
};
// r and G for a = b = c = d = 3.
inline const std::vector<G3Entry> kG3 = {
    {"000", 0, 0},  {"001", 1, 3},  {"002", 1, 5},  {"003", 0, 8},  {"010", 1, 1},  {"011", 2, 4},  {"012", 2, 8},
    {"013", 1, 11}, {"020", 1, 3},  {"021", 2, 6},  {"022", 2, 10}, {"023", 1, 13}, {"030", 0, 6},  {"031", 1, 9},
    {"032", 1, 11}, {"033", 0, 14}, {"100", 1, -1}, {"101", 2, 2},  {"102", 2, 6},  {"103", 1, 9},  {"110", 2, 0},
    {"111", 3, 3},  {"112", 3, 9},  {"113", 2, 12}, {"120", 2, 4},  {"121", 3, 7},  {"122", 3, 13}, {"123", 2, 16},
    {"130", 1, 7},  {"131", 2, 10}, {"132", 2, 14}, {"133", 1, 17}, {"200", 1, 1},  {"201", 2, 4},  {"202", 2, 8},
    {"203", 1, 11}, {"210", 2, 2},  {"211", 3, 5},  {"212", 3, 11}, {"213", 2, 14}, {"220", 2, 6},  {"221", 3, 9},
    {"222", 3, 15}, {"223", 2, 18}, {"230", 1, 9},  {"231", 2, 12}, {"232", 2, 16}, {"233", 1, 19}, {"300", 0, 4},
    {"301", 1, 7},  {"302", 1, 9},  {"303", 0, 12}, {"310", 1, 5},  {"311", 2, 8},  {"312", 2, 12}, {"313", 1, 15},
    {"320", 1, 7},  {"321", 2, 10}, {"322", 2, 14}, {"323", 1, 17}, {"330", 0, 10}, {"331", 1, 13}, {"332", 1, 15},
    {"333", 0, 18}};

struct HEntry {
  std::vector<int> lambda;
  int t, H;
};
// t^{t} q^{H} of every object of P for a = b = c = d = 2, up to lambda_1 = 4.
inline const std::vector<HEntry> kH2 = {
    {{0, 0}, 0, 0},   {{1, 0}, -1, 1},  {{2, 0}, -2, 3},  {{3, 0}, -3, 5},  {{4, 0}, -4, 7},
    {{1, 1}, -2, 2},  {{2, 1}, -3, 5},  {{3, 1}, -4, 7},  {{4, 1}, -5, 9},  {{2, 2}, -4, 8},
    {{3, 2}, -5, 11}, {{4, 2}, -6, 13}, {{3, 3}, -6, 14}, {{4, 3}, -7, 17}, {{4, 4}, -8, 20}};

struct EdgeWord {
  std::vector<int> from, to;
  const char* word;
};
// Components of K for a = b = c = d = 2 (coordinates (eps_1, eps_2)).
inline const std::vector<EdgeWord> kK2 = {
    {{1, 0}, {0, 0}, "d1 Z01"},     {{2, 0}, {1, 0}, "Q1"},        {{3, 0}, {2, 0}, "Z10 S*1"},
    {{1, 1}, {0, 1}, "Z12 d1"},     {{2, 1}, {1, 1}, "D*1 Q2 s1"}, {{3, 1}, {2, 1}, "S*1 Z21"},
    {{1, 2}, {0, 2}, "Z12 s1"},     {{2, 2}, {1, 2}, "S*1 Q2 d1"}, {{3, 2}, {2, 2}, "D*1 Z21"},
    {{1, 3}, {0, 3}, "s1 Z01"},     {{2, 3}, {1, 3}, "Q1"},        {{3, 3}, {2, 3}, "Z10 D*1"},
    {{0, 1}, {0, 0}, "Z01"},        {{0, 2}, {0, 1}, "Q1"},        {{0, 3}, {0, 2}, "Z10"},
    {{1, 1}, {1, 0}, "Z12"},        {{1, 2}, {1, 1}, "Q2"},        {{1, 3}, {1, 2}, "Z21"},
    {{2, 1}, {2, 0}, "Z12"},        {{2, 2}, {2, 1}, "Q2"},        {{2, 3}, {2, 2}, "Z21"},
    {{3, 1}, {3, 0}, "Z01"},        {{3, 2}, {3, 1}, "Q1"},        {{3, 3}, {3, 2}, "Z10"}};

// Simplified display words of P for a = b = c = d = 2, written with "pi" for the
// projection onto the target W and "iota" for the inclusion of the source W.
inline const std::vector<EdgeWord> kP2 = {
    {{1, 0}, {0, 0}, "pi Z01"},
    {{2, 0}, {1, 0}, "Q1"},
    {{3, 0}, {2, 0}, "Z10 S*1 d1 Z01"},
    {{4, 0}, {3, 0}, "Q1"},
    {{2, 1}, {1, 1}, "pi Q2 s1"},
    {{3, 1}, {2, 1}, "S*1 Z21 Z12 d1"},
    {{4, 1}, {3, 1}, "D*1 Q2 s1"},
    {{3, 2}, {2, 2}, "pi Z21 Z12 s1"},
    {{4, 2}, {3, 2}, "S*1 Q2 d1"},
    {{4, 3}, {3, 3}, "pi Q2 s1"},
    {{1, 1}, {1, 0}, "Z12 iota"},
    {{2, 1}, {2, 0}, "Z12"},
    {{3, 1}, {3, 0}, "Z12"},
    {{4, 1}, {4, 0}, "Z12"},
    {{2, 2}, {2, 1}, "Q2 iota"},
    {{3, 2}, {3, 1}, "Q2"},
    {{4, 2}, {4, 1}, "Q2"},
    {{3, 3}, {3, 2}, "Z21 Z12 iota"},
    {{4, 3}, {4, 2}, "Z21 Z12"},
    {{4, 4}, {4, 3}, "Q2 iota"}};

// As a V-level word composed with the target inclusion: iota pi = d1 on the
// two-root block, and the source inclusion is the identity on representatives.
inline std::string display_to_word(std::string w) {
  if (w.rfind("pi ", 0) == 0) w = "d1 " + w.substr(3);
  auto pos = w.find(" iota");
  if (pos != std::string::npos) w = w.substr(0, pos);
  return w;
}

}  // namespace golden
