#ifndef OVERCHEV_BOUNDS_HPP
#define OVERCHEV_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "overchev/rootdata.hpp"

namespace overchev {

struct TypeRank {
  char type;
  int rank;
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

/// The 31 row labels of the published requirement table, in its order.
std::vector<TypeRank> table2_rows();
/// Rows of the Coxeter table: A1..A8, B2..B8, C3..C8, D4..D8, E6..E8, F4, G2.
std::vector<TypeRank> table1_rows();

/// Exact integer form of the extension inequality: p^n >= 4a(p-1)+1 for odd
/// p, 2^(n-2) >= a+1 for p = 2.
bool extension_inequality_holds(i64 a, u64 p, int n);

/// Smallest prime p whose inequality holds at level n (n >= 2).
u64 min_prime_for_n(char type, int rank, int n);
/// Largest prime below the returned one (minimality witness).
u64 previous_prime(u64 p);

/// Smallest n >= 2 whose inequality holds at the fixed prime p.
int min_n_for_p(char type, int rank, u64 p);

/// Minimal n >= 0 with p^n >= 2 xi - 1 (odd p) or p^n >= 2 xi (p = 2).
int integrability_threshold(int xi, u32 p);

/// The grade bound 2(p-1)a + 1 for xi(U_0(g)) together with the exact value
/// computed from the PBW grade set when the enumeration is feasible.
struct XiU0Bound {
  i64 bound = 0;
  std::optional<int> computed;
};
XiU0Bound xi_u0_bound(char type, int rank, u32 p);

/// dim Z(g) for the Chevalley form mod p (cached).
std::size_t centre_dimension(char type, int rank, u64 p);

// ---------------------------------------------------------------------------

struct Table1Row {
  char type;
  int rank;
  int two_h_minus_2;
  i64 a;
};
std::vector<Table1Row> table1();

/// Published closed-form values for the Coxeter table.
int reference_two_h_minus_2(char type, int rank);
i64 reference_a(char type, int rank);

struct Table2Cell {
  i64 value = 0;             // prime p0 (left columns) or level n (p columns)
  bool dagger = false;       // computed: nontrivial centre at the relevant p
  std::optional<i64> reference;      // published value, when printed
  std::optional<bool> reference_dagger;
  bool value_mismatch = false;
  bool dagger_mismatch = false;
};

struct Table2Row {
  char type;
  int rank;
  i64 a;
  int two_h_minus_2;
  std::array<Table2Cell, 4> p0;       // G_(2)..G_(5)
  std::array<Table2Cell, 3> n_for_p;  // p = 2, 3, 5
};

struct Discrepancy {
  std::string row;
  std::string column;
  std::string kind;  // "value" or "dagger"
  i64 computed = 0;
  i64 reference = 0;
  bool computed_dagger = false;
  bool reference_dagger = false;
  bool d_family = false;
};

struct Table2 {
  std::vector<Table2Row> rows;
  std::vector<Discrepancy> discrepancies;
};
Table2 table2();

// renderers (deterministic byte streams)
std::string table1_text();
std::string table1_csv();
std::string table1_json();
std::string table2_text(const Table2& t);
std::string table2_csv(const Table2& t);
std::string table2_json(const Table2& t);

}  // namespace overchev

#endif
