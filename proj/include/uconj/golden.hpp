#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uconj/root_system.hpp"
#include "uconj/upoly.hpp"

namespace uconj {

enum class PrimeClass { Good, P2, P3 };

PrimeClass prime_class_of(const RootSystem& rs, uint32_t p);

// Published k(U) polynomial for the type at the given prime class.  The G2
// good-prime entry is corrected: the printed table repeats the B2 polynomial,
// while the published per-family data, this pipeline and brute-force
// enumeration all give v^3+5v^2+6v+1.
VPoly published_k_poly(char type_label, int rank, PrimeClass pc);

// Printed value before the erratum correction (differs only for G2 good).
VPoly printed_k_poly(char type_label, int rank, PrimeClass pc);

struct GoldenRow {
  PrimeClass pc;
  std::vector<std::pair<int, char>> kinds;  // ascending index, letters a..f
  VPoly size;
  long long cent_m;
  int cent_e;
};

// Published family tables for the rank <= 3 types (B2, G2, B3, C3), with
// documented typo corrections.
std::vector<GoldenRow> golden_family_rows(char type_label, int rank);

// Published root enumerations for B2, G2, B3, C3.
std::vector<std::vector<int>> golden_root_table(char type_label, int rank);

}  // namespace uconj
