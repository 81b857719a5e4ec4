#include "overchev/bounds.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "overchev/liealgebra.hpp"
#include "overchev/repmod.hpp"

namespace overchev {

std::vector<TypeRank> table1_rows() {
  std::vector<TypeRank> rows;
  for (int r = 1; r <= 8; ++r) rows.push_back({'A', r});
  for (int r = 2; r <= 8; ++r) rows.push_back({'B', r});
  for (int r = 3; r <= 8; ++r) rows.push_back({'C', r});
  for (int r = 4; r <= 8; ++r) rows.push_back({'D', r});
  rows.push_back({'E', 6});
  rows.push_back({'E', 7});
  rows.push_back({'E', 8});
  rows.push_back({'F', 4});
  rows.push_back({'G', 2});
  return rows;
}

std::vector<TypeRank> table2_rows() {
  return {{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3},
          {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'A', 5}, {'B', 5}, {'C', 5},
          {'D', 5}, {'F', 4}, {'A', 6}, {'B', 6}, {'C', 6}, {'D', 6}, {'E', 6},
          {'A', 7}, {'B', 7}, {'C', 7}, {'D', 7}, {'E', 7}, {'A', 8}, {'B', 8},
          {'C', 8}, {'D', 8}, {'E', 8}};
}

namespace {

i64 coefficient_a(char type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, i64> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  i64 a = RootSystem(type, rank).two_rho_coefficients().second;
  cache[key] = a;
  return a;
}

u64 next_prime(u64 p) {
  ++p;
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace

bool extension_inequality_holds(i64 a, u64 p, int n) {
  if (p == 2) {
    if (n < 2) return false;
    u64 lhs = 1;
    for (int i = 0; i < n - 2; ++i) {
      lhs *= 2;
      if (lhs > static_cast<u64>(a) + 1) break;
    }
    return lhs >= static_cast<u64>(a) + 1;
  }
  const u64 rhs = 4 * static_cast<u64>(a) * (p - 1) + 1;
  u64 lhs = 1;
  for (int i = 0; i < n; ++i) {
    lhs *= p;
    if (lhs >= rhs) return true;
  }
  return lhs >= rhs;
}

u64 min_prime_for_n(char type, int rank, int n) {
  if (n < 2) throw std::invalid_argument("min_prime_for_n: n >= 2 required");
  const i64 a = coefficient_a(type, rank);
  for (u64 p = 2; p < 10000000; p = next_prime(p))
    if (extension_inequality_holds(a, p, n)) return p;
  throw std::logic_error("min_prime_for_n: no prime found");
}

u64 previous_prime(u64 p) {
  if (p <= 2) throw std::invalid_argument("no prime below 2");
  --p;
  while (p >= 2 && !is_prime(p)) --p;
  return p;
}

int min_n_for_p(char type, int rank, u64 p) {
  check_prime_modulus(p);
  const i64 a = coefficient_a(type, rank);
  for (int n = 2; n < 128; ++n)
    if (extension_inequality_holds(a, p, n)) return n;
  throw std::logic_error("min_n_for_p: no level found");
}

int integrability_threshold(int xi, u32 p) {
  check_prime_modulus(p);
  if (xi < 1) throw std::invalid_argument("integrability_threshold: xi >= 1 required");
  const u64 target = (p == 2) ? 2 * static_cast<u64>(xi) : 2 * static_cast<u64>(xi) - 1;
  u64 pw = 1;
  for (int n = 0; n < 64; ++n) {
    if (pw >= target) return n;
    pw *= p;
  }
  throw std::logic_error("integrability_threshold: overflow");
}

XiU0Bound xi_u0_bound(char type, int rank, u32 p) {
  XiU0Bound out;
  const i64 a = coefficient_a(type, rank);
  out.bound = 2 * static_cast<i64>(p - 1) * a + 1;

  RootSystem rs(type, rank);
  const std::size_t npos = rs.num_positive_roots();
  double combos = 1;
  for (std::size_t i = 0; i < npos; ++i) combos *= 2.0 * p - 1;
  if (combos > 2e6) return out;  // bound only

  // grade set of the PBW basis: sums over positive roots of m_beta * beta
  // with -(p-1) <= m_beta <= p-1
  std::set<Weight> grades;
  std::vector<Weight> root_fw;
  for (const Root& beta : rs.positive_roots()) root_fw.push_back(rs.root_weight(beta));
  std::vector<int> m(npos, -(static_cast<int>(p) - 1));
  while (true) {
    Weight w = rs.zero_weight();
    for (std::size_t i = 0; i < npos; ++i)
      for (int j = 0; j < rs.rank(); ++j) w.fw[j] += i64(m[i]) * root_fw[i].fw[j];
    grades.insert(std::move(w));
    std::size_t i = 0;
    while (i < npos && m[i] == static_cast<int>(p) - 1) m[i++] = -(static_cast<int>(p) - 1);
    if (i == npos) break;
    ++m[i];
  }
  int xi = height_of_weight_set(rs, grades);
  if (xi > out.bound)
    throw std::logic_error("xi(U0) exceeded its grade bound for " + std::string(1, type) +
                           std::to_string(rank));
  out.computed = xi;
  return out;
}

std::size_t centre_dimension(char type, int rank, u64 p) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, u64>, std::size_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({type, rank, p});
    if (it != cache.end()) return it->second;
  }
  std::size_t dim = RestrictedLieAlgebra(type, rank, static_cast<u32>(p)).centre().size();
  std::lock_guard<std::mutex> lock(mu);
  cache[{type, rank, p}] = dim;
  return dim;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> out;
  for (const TypeRank& tr : table1_rows()) {
    RootSystem rs(tr.type, tr.rank);
    out.push_back({tr.type, tr.rank, 2 * rs.coxeter_number() - 2,
                   rs.two_rho_coefficients().second});
  }
  return out;
}

int reference_two_h_minus_2(char type, int rank) {
  switch (type) {
    case 'A': return 2 * rank;
    case 'B':
    case 'C': return 4 * rank - 2;
    case 'D': return 4 * rank - 6;
    case 'E': return rank == 6 ? 22 : (rank == 7 ? 34 : 58);
    case 'F': return 22;
    case 'G': return 10;
  }
  throw std::invalid_argument("unknown type");
}

i64 reference_a(char type, int rank) {
  switch (type) {
    case 'A':
      return (rank % 2 == 1) ? i64((rank + 1) / 2) * ((rank + 1) / 2)
                             : i64(rank / 2) * (rank / 2 + 1);
    case 'B': return i64(rank) * rank;
    case 'C': return i64(rank - 1) * (rank + 2);
    case 'D': return i64(rank + 1) * (rank - 2);
    case 'E': return rank == 6 ? 42 : (rank == 7 ? 96 : 270);
    case 'F': return 42;
    case 'G': return 10;
  }
  throw std::invalid_argument("unknown type");
}

namespace {

struct RefRow {
  const char* name;
  std::array<i64, 4> p0;
  std::array<bool, 4> p0_dag;
  i64 n2;
  bool n2_dag;
  i64 n3;  // -1 when the column is not printed for this row
  bool n3_dag;
  i64 n5;
  bool n5_dag;
};

// The published requirement table, values and dagger marks as printed.
const std::vector<RefRow>& published_table2() {
  static const std::vector<RefRow> rows = {
      {"A1", {3, 2, 2, 2}, {false, true, true, true}, 3, true, -1, false, -1, false},
      {"A2", {7, 3, 2, 2}, {false, true, false, false}, 4, false, -1, false, -1, false},
      {"B2", {17, 5, 3, 2}, {false, false, false, true}, 5, true, -1, false, -1, false},
      {"G2", {41, 7, 3, 3}, {false, false, false, false}, 6, false, -1, false, -1, false},
      {"A3", {17, 5, 3, 2}, {false, false, false, true}, 5, true, -1, false, -1, false},
      {"B3", {37, 7, 3, 3}, {false, false, false, false}, 6, true, -1, false, -1, false},
      {"C3", {41, 7, 3, 3}, {false, false, false, false}, 6, true, -1, false, -1, false},
      {"A4", {23, 5, 3, 2}, {false, true, false, false}, 5, false, -1, false, -1, false},
      {"B4", {67, 11, 5, 3}, {false, false, false, false}, 7, true, -1, false, -1, false},
      {"C4", {71, 11, 5, 3}, {false, false, false, false}, 7, true, -1, false, -1, false},
      {"D4", {41, 7, 3, 3}, {false, false, false, false}, 6, false, -1, false, -1, false},
      {"A5", {37, 7, 3, 3}, {false, false, true, true}, 6, false, -1, false, -1, false},
      {"B5", {101, 11, 5, 3}, {false, false, false, false}, 7, true, -1, false, -1, false},
      {"C5", {113, 11, 5, 3}, {false, false, false, false}, 7, true, -1, false, -1, false},
      {"D5", {71, 11, 5, 3}, {false, false, false, false}, 7, false, -1, false, -1, false},
      {"F4", {167, 13, 7, 5}, {false, false, false, false}, 8, false, 6, false, 5, false},
      {"A6", {47, 7, 5, 3}, {false, true, false, false}, 6, false, 5, false, 4, false},
      {"B6", {149, 13, 5, 5}, {false, false, false, false}, 8, true, 6, false, 4, false},
      {"C6", {161, 13, 7, 5}, {false, false, false, false}, 8, true, 6, false, 5, false},
      {"D6", {113, 11, 5, 3}, {false, false, false, false}, 7, false, 5, false, 4, false},
      {"E6", {167, 13, 7, 5}, {false, false, false, false}, 8, false, 6, true, 5, false},
      {"A7", {67, 11, 5, 3}, {false, false, false, false}, 7, true, 5, false, 4, false},
      {"B7", {193, 17, 7, 5}, {false, false, false, false}, 8, true, 6, false, 5, false},
      {"C7", {221, 17, 7, 5}, {false, false, false, false}, 8, true, 6, false, 5, false},
      {"D7", {161, 13, 7, 5}, {false, false, false, false}, 8, false, 6, false, 5, false},
      {"E7", {383, 23, 7, 5}, {false, false, false, false}, 9, true, 7, false, 5, false},
      {"A8", {79, 11, 5, 3}, {false, false, false, false}, 7, false, 5, true, 4, false},
      {"B8", {257, 17, 7, 5}, {false, false, false, false}, 9, true, 6, false, 5, false},
      {"C8", {281, 17, 7, 5}, {false, false, false, false}, 9, true, 6, false, 5, false},
      {"D8", {221, 17, 7, 5}, {false, false, false, false}, 8, false, 6, false, 5, false},
      {"E8", {1087, 37, 11, 7}, {false, false, false, false}, 11, false, 7, false, 6, false},
  };
  return rows;
}

void compare_cell(Table2Cell& cell, const std::string& row, const std::string& column,
                  bool d_family, std::vector<Discrepancy>& out) {
  if (!cell.reference.has_value()) return;
  cell.value_mismatch = cell.value != *cell.reference;
  cell.dagger_mismatch = cell.dagger != *cell.reference_dagger;
  if (cell.value_mismatch)
    out.push_back({row, column, "value", cell.value, *cell.reference, cell.dagger,
                   *cell.reference_dagger, d_family});
  if (cell.dagger_mismatch)
    out.push_back({row, column, "dagger", cell.value, *cell.reference, cell.dagger,
                   *cell.reference_dagger, d_family});
}

}  // namespace

Table2 table2() {
  Table2 out;
  const auto& ref = published_table2();
  auto rows = table2_rows();
  const std::array<u64, 3> p_columns{2, 3, 5};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const TypeRank& tr = rows[r];
    Table2Row row;
    row.type = tr.type;
    row.rank = tr.rank;
    row.a = coefficient_a(tr.type, tr.rank);
    row.two_h_minus_2 = 2 * RootSystem(tr.type, tr.rank).coxeter_number() - 2;
    for (int n = 2; n <= 5; ++n) {
      Table2Cell& cell = row.p0[n - 2];
      cell.value = static_cast<i64>(min_prime_for_n(tr.type, tr.rank, n));
      cell.dagger = centre_dimension(tr.type, tr.rank, static_cast<u64>(cell.value)) > 0;
      cell.reference = ref[r].p0[n - 2];
      cell.reference_dagger = ref[r].p0_dag[n - 2];
      compare_cell(cell, tr.name(), "G(" + std::to_string(n) + ")", tr.type == 'D',
                   out.discrepancies);
    }
    for (std::size_t c = 0; c < p_columns.size(); ++c) {
      Table2Cell& cell = row.n_for_p[c];
      cell.value = min_n_for_p(tr.type, tr.rank, p_columns[c]);
      cell.dagger = centre_dimension(tr.type, tr.rank, p_columns[c]) > 0;
      i64 refval = c == 0 ? ref[r].n2 : (c == 1 ? ref[r].n3 : ref[r].n5);
      bool refdag = c == 0 ? ref[r].n2_dag : (c == 1 ? ref[r].n3_dag : ref[r].n5_dag);
      if (refval >= 0) {
        cell.reference = refval;
        cell.reference_dagger = refdag;
        compare_cell(cell, tr.name(), "p=" + std::to_string(p_columns[c]), tr.type == 'D',
                     out.discrepancies);
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

// --------------------------- renderers -------------------------------------

namespace {

std::string cell_text(const Table2Cell& cell, bool as_level) {
  std::string s;
  if (cell.dagger) s += "+";  // computed nontrivial centre (the printed dagger)
  s += as_level ? "G(" + std::to_string(cell.value) + ")" : std::to_string(cell.value);
  if (!cell.reference.has_value()) s += "*";
  if (cell.value_mismatch) s += "!";
  if (cell.dagger_mismatch) s += "#";
  return s;
}

void pad(std::ostringstream& os, const std::string& s, std::size_t w) {
  os << s;
  for (std::size_t i = s.size(); i < w; ++i) os << ' ';
}

}  // namespace

std::string table1_text() {
  std::ostringstream os;
  os << "type  2h-2  a\n";
  for (const Table1Row& r : table1()) {
    std::ostringstream line;
    pad(line, std::string(1, r.type) + std::to_string(r.rank), 6);
    pad(line, std::to_string(r.two_h_minus_2), 6);
    line << r.a;
    os << line.str() << "\n";
  }
  return os.str();
}

std::string table1_csv() {
  std::ostringstream os;
  os << "type,rank,two_h_minus_2,a\n";
  for (const Table1Row& r : table1())
    os << r.type << ',' << r.rank << ',' << r.two_h_minus_2 << ',' << r.a << "\n";
  return os.str();
}

std::string table1_json() {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["rows"] = nlohmann::json::array();
  for (const Table1Row& r : table1())
    j["rows"].push_back({{"type", std::string(1, r.type)},
                         {"rank", r.rank},
                         {"two_h_minus_2", r.two_h_minus_2},
                         {"a", r.a}});
  return j.dump(2) + "\n";
}

std::string table2_text(const Table2& t) {
  std::ostringstream os;
  os << "type  a    2h-2  G(2)   G(3)  G(4)  G(5)  | p=2     p=3     p=5\n";
  for (const Table2Row& r : t.rows) {
    std::ostringstream line;
    pad(line, std::string(1, r.type) + std::to_string(r.rank), 6);
    pad(line, std::to_string(r.a), 5);
    pad(line, std::to_string(r.two_h_minus_2), 6);
    for (const Table2Cell& c : r.p0) pad(line, cell_text(c, false), 6);
    line << "| ";
    for (const Table2Cell& c : r.n_for_p) pad(line, cell_text(c, true), 8);
    os << line.str() << "\n";
  }
  os << "legend: +nontrivial centre at that characteristic, *no published value,\n"
     << "        !value differs from the published table, #dagger differs\n";
  if (!t.discrepancies.empty()) {
    os << "discrepancies vs the published table:\n";
    for (const Discrepancy& d : t.discrepancies) {
      os << "  " << d.row << " " << d.column << " [" << d.kind << "] computed ";
      if (d.kind == "value")
        os << d.computed << " vs published " << d.reference;
      else
        os << (d.computed_dagger ? "dagger" : "no dagger") << " vs published "
           << (d.reference_dagger ? "dagger" : "no dagger");
      if (d.d_family) os << " (D family, form convention)";
      os << "\n";
    }
  }
  return os.str();
}

std::string table2_csv(const Table2& t) {
  std::ostringstream os;
  os << "type,rank,a,two_h_minus_2,p0_n2,p0_n3,p0_n4,p0_n5,n_p2,n_p3,n_p5,dagger_flags,"
        "discrepancies\n";
  for (const Table2Row& r : t.rows) {
    os << r.type << ',' << r.rank << ',' << r.a << ',' << r.two_h_minus_2;
    for (const Table2Cell& c : r.p0) os << ',' << c.value;
    for (const Table2Cell& c : r.n_for_p) os << ',' << c.value;
    std::string daggers;
    const char* names[] = {"n2", "n3", "n4", "n5", "p2", "p3", "p5"};
    int i = 0;
    for (const Table2Cell& c : r.p0) {
      if (c.dagger) daggers += std::string(daggers.empty() ? "" : " ") + names[i];
      ++i;
    }
    for (const Table2Cell& c : r.n_for_p) {
      if (c.dagger) daggers += std::string(daggers.empty() ? "" : " ") + names[i];
      ++i;
    }
    os << ',' << daggers << ',';
    std::string disc;
    for (const Discrepancy& d : t.discrepancies)
      if (d.row == std::string(1, r.type) + std::to_string(r.rank))
        disc += (disc.empty() ? "" : " ") + d.column + ":" + d.kind;
    os << disc << "\n";
  }
  return os.str();
}

std::string table2_json(const Table2& t) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["rows"] = nlohmann::json::array();
  for (const Table2Row& r : t.rows) {
    nlohmann::json row;
    row["type"] = std::string(1, r.type);
    row["rank"] = r.rank;
    row["a"] = r.a;
    row["two_h_minus_2"] = r.two_h_minus_2;
    const char* p0names[] = {"p0_n2", "p0_n3", "p0_n4", "p0_n5"};
    for (int i = 0; i < 4; ++i) {
      row[p0names[i]] = r.p0[i].value;
      row[std::string(p0names[i]) + "_dagger"] = r.p0[i].dagger;
    }
    const char* pnames[] = {"n_p2", "n_p3", "n_p5"};
    for (int i = 0; i < 3; ++i) {
      row[pnames[i]] = r.n_for_p[i].value;
      row[std::string(pnames[i]) + "_dagger"] = r.n_for_p[i].dagger;
      row[std::string(pnames[i]) + "_published"] = r.n_for_p[i].reference.has_value();
    }
    j["rows"].push_back(row);
  }
  j["discrepancies"] = nlohmann::json::array();
  for (const Discrepancy& d : t.discrepancies)
    j["discrepancies"].push_back({{"row", d.row},
                                  {"column", d.column},
                                  {"kind", d.kind},
                                  {"computed", d.computed},
                                  {"published", d.reference},
                                  {"computed_dagger", d.computed_dagger},
                                  {"published_dagger", d.reference_dagger},
                                  {"d_family", d.d_family}});
  return j.dump(2) + "\n";
}

}  // namespace overchev
