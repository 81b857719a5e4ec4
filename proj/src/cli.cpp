#include "overchev/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "overchev/bounds.hpp"
#include "overchev/frobkernels.hpp"
#include "overchev/groupgen.hpp"
#include "overchev/liealgebra.hpp"
#include "overchev/repmod.hpp"
#include "overchev/u0algebra.hpp"

namespace overchev::cli {

namespace {

using nlohmann::json;

struct Ctx {
  std::string format = "text";
  u64 seed = 0xC0FFEE;
  std::string out_path;
  std::ostringstream buf;
  int status = 0;
};

std::size_t element_cap() {
  if (const char* env = std::getenv("OVERCHEV_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementCap;
}

std::pair<char, int> parse_type(const std::string& type, int rank) {
  if (type.empty()) throw CLI::ValidationError("type", "expected one of A..G");
  char t = static_cast<char>(std::toupper(type[0]));
  if (t < 'A' || t > 'G') throw CLI::ValidationError("type", "expected one of A..G");
  if (type.size() > 1) {  // combined label such as A1 or G2
    for (std::size_t i = 1; i < type.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(type[i])))
        throw CLI::ValidationError("type", "expected a letter or letter+rank label");
    rank = std::stoi(type.substr(1));
  }
  return {t, rank};
}

void require_tabular_format(const Ctx& ctx) {
  if (ctx.format != "text" && ctx.format != "csv" && ctx.format != "json")
    throw CLI::ValidationError("--format", "expected text, csv or json");
}

void require_nontabular_format(const Ctx& ctx) {
  if (ctx.format != "text" && ctx.format != "json")
    throw CLI::ValidationError("--format", "csv applies to the table subcommands only");
}

// --- handlers ----------------------------------------------------------------

void handle_table1(Ctx& ctx, bool check) {
  if (check) {
    int mismatches = 0;
    for (const Table1Row& r : table1()) {
      bool ok = r.two_h_minus_2 == reference_two_h_minus_2(r.type, r.rank) &&
                r.a == reference_a(r.type, r.rank);
      if (!ok) {
        ++mismatches;
        ctx.buf << "MISMATCH " << r.type << r.rank << "\n";
      }
    }
    ctx.buf << (mismatches ? "FAIL" : "PASS") << " (coxeter table, " << table1().size()
            << " rows checked)\n";
    ctx.status = mismatches ? 1 : 0;
    return;
  }
  if (ctx.format == "csv") ctx.buf << table1_csv();
  else if (ctx.format == "json") ctx.buf << table1_json();
  else ctx.buf << table1_text();
}

void handle_table2(Ctx& ctx, bool check) {
  Table2 t = table2();
  if (check) {
    int failures = 0;
    for (const Discrepancy& d : t.discrepancies) {
      bool tolerated = d.kind == "dagger" && d.d_family;
      if (!tolerated) ++failures;
    }
    ctx.buf << table2_text(t);
    ctx.buf << (failures ? "FAIL" : "PASS") << " (" << failures
            << " non-D-family discrepancies vs the published table)\n";
    ctx.status = failures ? 1 : 0;
    return;
  }
  if (ctx.format == "csv") ctx.buf << table2_csv(t);
  else if (ctx.format == "json") ctx.buf << table2_json(t);
  else ctx.buf << table2_text(t);
}

void handle_centre(Ctx& ctx, const std::string& type, int rank, u64 p) {
  auto [t, r] = parse_type(type, rank);
  std::size_t dim = centre_dimension(t, r, p);
  if (ctx.format == "json") {
    json j{{"schema_version", 1},
           {"type", std::string(1, t)},
           {"rank", r},
           {"p", p},
           {"centre_dim", dim},
           {"dagger", dim > 0}};
    ctx.buf << j.dump(2) << "\n";
  } else {
    ctx.buf << "dim Z = " << dim << (dim > 0 ? " (dagger)" : "") << "\n";
  }
}

void handle_height(Ctx& ctx, const std::string& type, int rank, int m, u64 p, bool u0) {
  auto [t, r] = parse_type(type, rank);
  json j{{"schema_version", 1}, {"type", std::string(1, t)}, {"rank", r}, {"p", p}};
  if (u0) {
    XiU0Bound b = xi_u0_bound(t, r, static_cast<u32>(p));
    j["bound"] = b.bound;
    if (b.computed) j["xi"] = *b.computed;
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else {
      ctx.buf << "xi(U0) bound = " << b.bound;
      if (b.computed) ctx.buf << ", computed = " << *b.computed;
      else ctx.buf << ", enumeration beyond desk scale";
      ctx.buf << "\n";
    }
    return;
  }
  if (t != 'A' || r != 1)
    throw CLI::ValidationError("--type", "module heights are realized for A1 only");
  int xi = height(weyl_module_sl2(m, static_cast<u32>(p)));
  j["m"] = m;
  j["xi"] = xi;
  if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
  else ctx.buf << "xi(V(" << m << ")) = " << xi << "\n";
}

void handle_over_restricted(Ctx& ctx, int m, u64 p, int n, const std::string& mode,
                            bool candidates, const std::string& type, int rank) {
  if (candidates) {
    auto [t, r] = parse_type(type, rank);
    RootSystem rs(t, r);
    const i64 half = (static_cast<i64>(p) - 1) / 2;
    const i64 threshold = (static_cast<i64>(p) + 1) / 2;
    ctx.buf << "dominant weights with k_i <= (p-1)/2 and their heights (p=" << p
            << ", certificate: xi <= " << threshold << "):\n";
    std::vector<i64> k(rs.rank(), 0);
    while (true) {
      Weight lam{k};
      int xi = height_of_weight_set(rs, rs.weyl_weight_set(lam));
      bool certified = xi <= threshold;
      ctx.buf << "  lambda = (";
      for (int i = 0; i < rs.rank(); ++i) ctx.buf << (i ? "," : "") << k[i];
      ctx.buf << "): xi = " << xi << (certified ? "  [root-power vanishing certified]" : "")
              << "\n";
      int i = 0;
      while (i < rs.rank() && k[i] == half) k[i++] = 0;
      if (i == rs.rank()) break;
      ++k[i];
    }
    return;
  }
  json j{{"schema_version", 1}, {"m", m}, {"p", p}, {"n", n}, {"seed", ctx.seed}};
  if (n == 1) {
    bool exhaustive = mode != "sampled";
    auto verdict =
        is_over_restricted(weyl_module_sl2(m, static_cast<u32>(p)), exhaustive, ctx.seed);
    j["over_restricted"] = verdict.over_restricted;
    j["certified"] = verdict.certified;
    j["checked_points"] = verdict.checked;
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else
      ctx.buf << "V(" << m << ") at p=" << p << ": "
              << (verdict.over_restricted ? "over-restricted" : "not over-restricted")
              << (verdict.certified ? " (exhaustive cone)" : " (sampled, non-certifying)")
              << ", checked " << verdict.checked << " points, seed " << ctx.seed << "\n";
  } else {
    DividedPowerAction act(m, static_cast<u32>(p), n);
    bool ok = act.n_over_restricted();
    j["n_over_restricted"] = ok;
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else
      ctx.buf << "V(" << m << ") at p=" << p << ", n=" << n << ": "
              << (ok ? "n-over-restricted" : "not n-over-restricted") << "\n";
  }
}

Representation representation_for(const std::string& rep, int m, u32 p) {
  if (rep == "natural") return weyl_module_sl2(1, p);
  if (rep == "weyl") return weyl_module_sl2(m, p);
  if (rep == "adjoint") return adjoint_rep(RestrictedLieAlgebra('A', 1, p));
  if (rep == "regular") return regular_rep_u0(U0Algebra(RestrictedLieAlgebra('A', 1, p)));
  throw CLI::ValidationError("--rep", "expected natural, weyl, adjoint or regular");
}

void handle_group(Ctx& ctx, const std::string& rep, int m, u64 p, const std::string& policy,
                  bool compare) {
  Representation r = representation_for(rep, m, static_cast<u32>(p));
  GeneratorPolicy pol =
      policy == "cone" ? GeneratorPolicy::FullCone : GeneratorPolicy::RootExponentials;
  if (compare) {
    bool agree = generator_policies_agree(r, element_cap());
    ctx.buf << "root-exponential vs full-cone generators: "
            << (agree ? "same subgroup" : "different subgroups") << "\n";
    return;
  }
  MatrixGroup g = pseudo_chevalley_group(r, pol, element_cap());
  if (ctx.format == "json") ctx.buf << group_report_json(g) << "\n";
  else
    ctx.buf << "order = " << g.order() << ", diameter = " << g.word_diameter()
            << ", closed = " << (g.closed() ? "yes" : "no") << "\n";
}

void emit_phi(Ctx& ctx, const PhiVerdict& v) {
  if (ctx.format == "json") {
    json j{{"schema_version", 1},
           {"graph_order", v.graph_order},
           {"gv_order", v.gv_order},
           {"gg_order", v.gg_order},
           {"is_function", v.is_function},
           {"kernel_size", v.kernel_size},
           {"kernel_central", v.kernel_central},
           {"kernel_in_aut", v.kernel_in_aut},
           {"counts_consistent", v.counts_consistent},
           {"closed", v.closed},
           {"generators", v.generator_labels}};
    ctx.buf << j.dump(2) << "\n";
  } else {
    ctx.buf << "|graph| = " << v.graph_order << ", |G_V| = " << v.gv_order
            << ", |G_g| = " << v.gg_order << "\n"
            << "phi is a function: " << (v.is_function ? "yes" : "no")
            << ", kernel size " << v.kernel_size
            << ", central: " << (v.kernel_central ? "yes" : "no")
            << ", inside Aut_g(V): " << (v.kernel_in_aut ? "yes" : "no") << "\n";
  }
}

void handle_phi(Ctx& ctx, int m, u64 p, int n, const std::string& policy) {
  if (n == 1) {
    GeneratorPolicy pol =
        policy == "cone" ? GeneratorPolicy::FullCone : GeneratorPolicy::RootExponentials;
    emit_phi(ctx, build_phi(weyl_module_sl2(m, static_cast<u32>(p)), pol, element_cap()));
  } else {
    emit_phi(ctx, build_phi_frobenius(DividedPowerAction(m, static_cast<u32>(p), n),
                                      element_cap()));
  }
}

void handle_verify_abs_chev(Ctx& ctx, int m, u64 p) {
  Representation rep = weyl_module_sl2(m, static_cast<u32>(p));
  auto hypothesis = is_over_restricted(rep);
  if (!hypothesis.over_restricted)
    throw CLI::ValidationError("--m", "module is not over-restricted; nothing to verify");
  RestrictedLieAlgebra g('A', 1, static_cast<u32>(p));
  auto cone = g.np_cone_points();
  std::size_t checked = 0;
  for (const FpVec& x : cone.points)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (!verify_abs_chev(rep, x, g.basis_vector(b))) {
        ctx.buf << "FAIL at cone point index " << checked << "\n";
        ctx.status = 1;
        return;
      }
      ++checked;
    }
  ctx.buf << "PASS (all cone points x basis), " << checked << " identities\n";
}

void handle_verify_abs_n_chev(Ctx& ctx, int m, u64 p, int n) {
  DividedPowerAction act(m, static_cast<u32>(p), n);
  if (!act.n_over_restricted())
    throw CLI::ValidationError("--m", "module is not n-over-restricted; nothing to verify");
  std::size_t checked = 0;
  for (bool positive : {true, false})
    for (u32 t = 0; t < p; ++t)
      for (std::size_t i = 0; i < act.dimension(); ++i)
        for (std::size_t j = 0; j < act.dimension(); ++j) {
          FpMat unit(act.dimension(), act.dimension(), static_cast<u32>(p));
          unit.set(i, j, 1);
          if (!act.verify_abs_n_chev(positive, Fp(t, static_cast<u32>(p)), unit)) {
            ctx.buf << "FAIL at t=" << t << "\n";
            ctx.status = 1;
            return;
          }
          ++checked;
        }
  ctx.buf << "PASS (all t, spanning operators), " << checked << " identities\n";
}

void handle_verify_hopf(Ctx& ctx, u64 p) {
  U0Algebra u(RestrictedLieAlgebra('A', 1, static_cast<u32>(p)));
  auto monos = u.pbw_monomials();
  // coproduct multiplicativity on generator pairs
  for (std::size_t a = 0; a < u.num_generators(); ++a)
    for (std::size_t b = 0; b < u.num_generators(); ++b) {
      auto ga = u.generator(a), gb = u.generator(b);
      if (u.coproduct(u.multiply(ga, gb)) !=
          u.tensor_multiply(u.coproduct(ga), u.coproduct(gb))) {
        ctx.buf << "FAIL (coproduct multiplicativity)\n";
        ctx.status = 1;
        return;
      }
    }
  // antipode axiom and involutivity on all PBW monomials
  for (const Mono& mn : monos) {
    U0Algebra::Element x{{mn, 1}};
    if (u.antipode(u.antipode(x)) != x) {
      ctx.buf << "FAIL (antipode involution)\n";
      ctx.status = 1;
      return;
    }
    U0Algebra::Tensor dx = u.coproduct(x);
    U0Algebra::Element acc;
    for (const auto& [mm, c] : dx) {
      U0Algebra::Element prod =
          u.multiply(u.antipode(U0Algebra::Element{{mm.first, 1}}),
                     U0Algebra::Element{{mm.second, 1}});
      acc = U0Algebra::add(acc, U0Algebra::scale(prod, c, static_cast<u32>(p)),
                           static_cast<u32>(p));
    }
    if (acc != U0Algebra::scale(u.one(), u.counit(x), static_cast<u32>(p))) {
      ctx.buf << "FAIL (antipode axiom)\n";
      ctx.status = 1;
      return;
    }
  }
  ctx.buf << "PASS (Hopf axioms on U0(sl2), p=" << p << ", " << monos.size()
          << " monomials)\n";
}

void handle_verify_jacobi(Ctx& ctx, const std::string& type, int rank, u64 p) {
  auto [t, r] = parse_type(type, rank);
  RestrictedLieAlgebra g(t, r, static_cast<u32>(p));  // construction re-verifies
  std::mt19937_64 rng(ctx.seed);
  for (int trial = 0; trial < 1000; ++trial) {
    FpVec x(g.dim()), y(g.dim()), z(g.dim());
    for (auto& c : x) c = static_cast<u32>(rng() % p);
    for (auto& c : y) c = static_cast<u32>(rng() % p);
    for (auto& c : z) c = static_cast<u32>(rng() % p);
    FpVec j1 = g.bracket(g.bracket(x, y), z);
    FpVec j2 = g.bracket(g.bracket(y, z), x);
    FpVec j3 = g.bracket(g.bracket(z, x), y);
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (add_mod(add_mod(j1[i], j2[i], static_cast<u32>(p)), j3[i],
                  static_cast<u32>(p)) != 0) {
        ctx.buf << "FAIL (Jacobi on random triple)\n";
        ctx.status = 1;
        return;
      }
  }
  ctx.buf << "PASS (construction checks + 1000 random triples, seed " << ctx.seed << ")\n";
}

void handle_overenv(Ctx& ctx, u64 p) {
  U0Algebra u(RestrictedLieAlgebra('A', 1, static_cast<u32>(p)));
  try {
    auto dims = u.over_env_dimension();
    if (ctx.format == "json") {
      json j{{"schema_version", 1},
             {"p", p},
             {"dim_u0", dims.dim_u0},
             {"ideal_dim", dims.ideal_dim},
             {"dim_closure", dims.dim_closure},
             {"dim_regular", dims.dim_regular}};
      ctx.buf << j.dump(2) << "\n";
    } else {
      ctx.buf << "dim U_over = " << dims.dim_closure << " (ideal closure " << dims.dim_closure
              << ", regular quotient " << dims.dim_regular << ", dim U0 " << dims.dim_u0
              << ")\n";
    }
  } catch (const std::logic_error& e) {
    ctx.buf << "FAIL: " << e.what() << "\n";
    ctx.status = 1;
  }
}

void handle_alcove(Ctx& ctx, const std::string& type, int rank, u64 p, std::vector<i64> k) {
  auto [t, r] = parse_type(type, rank);
  RootSystem rs(t, r);
  if (static_cast<int>(k.size()) != r)
    throw CLI::ValidationError("--k", "expected one coefficient per simple root");
  Weight lam{k};
  AlcoveBands ab = alcove_bands(rs, lam, static_cast<u32>(p));
  if (ctx.format == "json") {
    json j{{"schema_version", 1}, {"type", std::string(1, t)}, {"rank", r}, {"p", p}};
    j["pairings"] = ab.pairings;
    j["bands"] = ab.bands;
    j["on_wall"] = std::vector<int>(ab.on_wall.begin(), ab.on_wall.end());
    j["any_wall"] = ab.any_wall;
    j["count_below"] = ab.count_below;
    ctx.buf << j.dump(2) << "\n";
    return;
  }
  const auto& roots = rs.positive_roots();
  for (std::size_t b = 0; b < roots.size(); ++b) {
    ctx.buf << "  root (";
    for (std::size_t i = 0; i < roots[b].coeff.size(); ++i)
      ctx.buf << (i ? "," : "") << roots[b].coeff[i];
    ctx.buf << "): <lambda+rho, beta^vee> = " << ab.pairings[b] << ", band " << ab.bands[b]
            << (ab.on_wall[b] ? " [on wall]" : "") << "\n";
  }
  if (ab.any_wall) ctx.buf << "weight lies on a wall; no alcove count\n";
  else if (ab.count_below >= 0)
    ctx.buf << "dominant alcoves strictly below (componentwise band dominance): "
            << ab.count_below << "\n";
  ctx.buf << "note: the alcove order uses componentwise band dominance\n";
}

void handle_thresholds(Ctx& ctx, const std::string& type, int rank, int n, i64 p, int xi) {
  auto [t, r] = parse_type(type, rank);
  json j{{"schema_version", 1}, {"type", std::string(1, t)}, {"rank", r}};
  if (xi > 0 && p > 0) {
    int need = integrability_threshold(xi, static_cast<u32>(p));
    j["xi"] = xi;
    j["p"] = p;
    j["n"] = need;
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else if (need == 0)
      ctx.buf << "already integrable at n=0 (xi = " << xi << ")\n";
    else
      ctx.buf << "minimal n with p^n above the grade threshold: " << need << "\n";
    return;
  }
  if (n > 0) {
    u64 p0 = min_prime_for_n(t, r, n);
    j["n"] = n;
    j["min_prime"] = p0;
    if (p0 > 2) {
      j["previous_prime"] = previous_prime(p0);
      i64 a = RootSystem(t, r).two_rho_coefficients().second;
      j["previous_fails"] = !extension_inequality_holds(a, previous_prime(p0), n);
    }
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else {
      ctx.buf << "min prime for n=" << n << ": " << p0;
      if (p0 > 2) ctx.buf << " (previous prime " << previous_prime(p0) << " fails)";
      ctx.buf << "\n";
    }
    return;
  }
  if (p > 0) {
    int need = min_n_for_p(t, r, static_cast<u64>(p));
    j["p"] = p;
    j["min_n"] = need;
    if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
    else ctx.buf << "min n for p=" << p << ": " << need << "\n";
    return;
  }
  // full row
  for (int nn = 2; nn <= 5; ++nn)
    j["min_prime_n" + std::to_string(nn)] = min_prime_for_n(t, r, nn);
  for (u64 pp : {2ull, 3ull, 5ull})
    j["min_n_p" + std::to_string(pp)] = min_n_for_p(t, r, pp);
  if (ctx.format == "json") ctx.buf << j.dump(2) << "\n";
  else {
    ctx.buf << t << r << ":";
    for (int nn = 2; nn <= 5; ++nn) ctx.buf << " G(" << nn << ")->" << min_prime_for_n(t, r, nn);
    for (u64 pp : {2ull, 3ull, 5ull}) ctx.buf << " p=" << pp << "->G(" << min_n_for_p(t, r, pp) << ")";
    ctx.buf << "\n";
  }
}

}  // namespace

std::vector<std::string> subcommands() {
  return {"table1", "table2", "centre", "height", "over-restricted", "group",
          "phi",    "verify", "overenv-dim", "alcove", "thresholds"};
}

std::vector<std::string> verify_suites() { return {"abs-chev", "abs-n-chev", "hopf", "jacobi"}; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  CLI::App app{"over-restricted representation toolkit"};
  app.name("overchev");
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "output format: text, csv or json")
      ->default_val("text");
  app.add_option("--seed", ctx.seed, "seed for randomized suites")->default_val(0xC0FFEE);
  app.add_option("--out", ctx.out_path, "write the report to a file");

  // table1 / table2
  bool t1_check = false, t2_check = false;
  auto* t1 = app.add_subcommand("table1", "Coxeter numbers and 2rho coefficients")->fallthrough();
  t1->add_flag("--check", t1_check, "compare against the published closed forms");
  t1->callback([&] { require_tabular_format(ctx); handle_table1(ctx, t1_check); });

  auto* t2 = app.add_subcommand("table2", "extension requirement thresholds")->fallthrough();
  t2->add_flag("--check", t2_check, "compare against the published table");
  t2->callback([&] { require_tabular_format(ctx); handle_table2(ctx, t2_check); });

  // centre TYPE RANK P
  std::string c_type;
  int c_rank = 0;
  u64 c_p = 0;
  auto* ce = app.add_subcommand("centre", "dimension of Z(g) for a Chevalley algebra")->fallthrough();
  ce->add_option("type", c_type)->required();
  ce->add_option("rank", c_rank)->required();
  ce->add_option("p", c_p)->required();
  ce->callback([&] { require_nontabular_format(ctx); handle_centre(ctx, c_type, c_rank, c_p); });

  // height
  std::string h_type = "A";
  int h_rank = 1, h_m = 1;
  u64 h_p = 5;
  bool h_u0 = false;
  auto* he = app.add_subcommand("height", "xi of a module or of U0")->fallthrough();
  he->add_option("--type", h_type);
  he->add_option("--rank", h_rank);
  he->add_option("--m", h_m, "Weyl module highest weight");
  he->add_option("--p", h_p)->required();
  he->add_flag("--u0", h_u0, "height of the regular module U0(g)");
  he->callback([&] {
    require_nontabular_format(ctx);
    handle_height(ctx, h_type, h_rank, h_m, h_p, h_u0);
  });

  // over-restricted
  int o_m = 0, o_n = 1, o_rank = 2;
  u64 o_p = 5;
  std::string o_mode = "exhaustive", o_type = "A";
  bool o_candidates = false;
  auto* ov = app.add_subcommand("over-restricted", "over-restricted predicates")->fallthrough();
  ov->add_option("--m", o_m);
  ov->add_option("--p", o_p)->required();
  ov->add_option("--n", o_n, "Frobenius kernel level");
  ov->add_option("--mode", o_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  ov->add_flag("--candidates", o_candidates, "list candidate Weyl weights by height");
  ov->add_option("--type", o_type);
  ov->add_option("--rank", o_rank);
  ov->callback([&] {
    require_nontabular_format(ctx);
    handle_over_restricted(ctx, o_m, o_p, o_n, o_mode, o_candidates, o_type, o_rank);
  });

  // group
  std::string g_rep = "natural", g_policy = "root";
  int g_m = 1;
  u64 g_p = 5;
  bool g_compare = false;
  auto* gr = app.add_subcommand("group", "pseudo-Chevalley group enumeration")->fallthrough();
  gr->add_option("--rep", g_rep)->check(CLI::IsMember({"natural", "weyl", "adjoint", "regular"}));
  gr->add_option("--m", g_m);
  gr->add_option("--p", g_p)->required();
  gr->add_option("--policy", g_policy)->check(CLI::IsMember({"root", "cone"}));
  gr->add_flag("--compare-policies", g_compare);
  gr->callback([&] {
    require_nontabular_format(ctx);
    handle_group(ctx, g_rep, g_m, g_p, g_policy, g_compare);
  });

  // phi
  int p_m = 1, p_n = 1;
  u64 p_p = 5;
  std::string p_policy = "root";
  auto* ph = app.add_subcommand("phi", "graph-subgroup homomorphism verdicts")->fallthrough();
  ph->add_option("--m", p_m);
  ph->add_option("--p", p_p)->required();
  ph->add_option("--n", p_n);
  ph->add_option("--policy", p_policy)->check(CLI::IsMember({"root", "cone"}));
  ph->callback([&] { require_nontabular_format(ctx); handle_phi(ctx, p_m, p_p, p_n, p_policy); });

  // verify
  auto* ve = app.add_subcommand("verify", "identity verification suites")->fallthrough();
  ve->require_subcommand(1);
  int v_m = 2, v_n = 2, v_rank = 1;
  u64 v_p = 5;
  std::string v_type = "A";
  auto* vac = ve->add_subcommand("abs-chev", "exponential conjugation identity")->fallthrough();
  vac->add_option("--type", v_type);
  vac->add_option("--m", v_m);
  vac->add_option("--p", v_p)->required();
  vac->callback([&] { handle_verify_abs_chev(ctx, v_m, v_p); });
  auto* vanc = ve->add_subcommand("abs-n-chev", "divided-power conjugation identity")->fallthrough();
  vanc->add_option("--m", v_m);
  vanc->add_option("--p", v_p)->required();
  vanc->add_option("--n", v_n)->required();
  vanc->callback([&] { handle_verify_abs_n_chev(ctx, v_m, v_p, v_n); });
  auto* vh = ve->add_subcommand("hopf", "Hopf algebra axioms on U0(sl2)")->fallthrough();
  vh->add_option("--p", v_p)->required();
  vh->callback([&] { handle_verify_hopf(ctx, v_p); });
  auto* vj = ve->add_subcommand("jacobi", "Chevalley construction identities")->fallthrough();
  vj->add_option("--type", v_type)->required();
  vj->add_option("--rank", v_rank)->required();
  vj->add_option("--p", v_p)->required();
  vj->callback([&] { handle_verify_jacobi(ctx, v_type, v_rank, v_p); });

  // overenv-dim
  u64 od_p = 3;
  auto* od = app.add_subcommand("overenv-dim", "dimension of the over-restricted envelope")->fallthrough();
  od->add_option("--p", od_p)->required();
  od->callback([&] { require_nontabular_format(ctx); handle_overenv(ctx, od_p); });

  // alcove
  std::string a_type = "A";
  int a_rank = 2;
  u64 a_p = 5;
  std::vector<i64> a_k;
  auto* al = app.add_subcommand("alcove", "p-alcove bands of a dominant weight")->fallthrough();
  al->add_option("--type", a_type)->required();
  al->add_option("--rank", a_rank)->required();
  al->add_option("--p", a_p)->required();
  al->add_option("--k", a_k, "fundamental-weight coefficients")->required();
  al->callback([&] { require_nontabular_format(ctx); handle_alcove(ctx, a_type, a_rank, a_p, a_k); });

  // thresholds
  std::string th_type = "A";
  int th_rank = 1, th_n = 0, th_xi = 0;
  i64 th_p = 0;
  auto* th = app.add_subcommand("thresholds", "extension thresholds")->fallthrough();
  th->add_option("--type", th_type)->required();
  th->add_option("--rank", th_rank)->required();
  th->add_option("--n", th_n);
  th->add_option("--p", th_p);
  th->add_option("--xi", th_xi, "integrability threshold for a module of this height");
  th->callback([&] {
    require_nontabular_format(ctx);
    handle_thresholds(ctx, th_type, th_rank, th_n, th_p, th_xi);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!ctx.out_path.empty()) {
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << ctx.out_path << "\n";
      return 2;
    }
    f << ctx.buf.str();
  } else {
    out << ctx.buf.str();
  }
  return ctx.status;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace overchev::cli
