// netdual: monomial Orlik-Solomon ideals of line arrangements, Alexander
// duality, betti tables via Hochster's formula, Hilbert series and net
// detection, from the command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netdual/betti.hpp"
#include "netdual/duality.hpp"
#include "netdual/errors.hpp"
#include "netdual/io.hpp"
#include "netdual/monomial_os.hpp"
#include "netdual/nets.hpp"
#include "netdual/series.hpp"

namespace {

using namespace netdual;

struct InputFlags {
  std::string catalog_name;
  std::string arrangement_file;
  std::string coords_file;
  std::string graph_file;
  std::string net_file;
};

struct ResolvedInput {
  std::string description;
  std::optional<LineArrangement> arrangement;
  std::optional<SimpleGraph> graph;
  std::optional<NetCandidate> candidate;
  GroundSet ground;
};

void add_input_flags(CLI::App* cmd, InputFlags& in, bool with_net) {
  cmd->add_option("--catalog", in.catalog_name, "Built-in catalog entry");
  cmd->add_option("--arrangement", in.arrangement_file,
                  "Arrangement JSON file {\"n\":..,\"multiple_points\":[[..],..]}");
  cmd->add_option("--coords", in.coords_file, "Coordinate file, one 'a b c' line per line");
  cmd->add_option("--graph", in.graph_file,
                  "Graph file: vertex count, then one 'u v' edge per line");
  if (with_net)
    cmd->add_option("--net", in.net_file,
                    "Net candidate JSON {\"blocks\":[[..],..],\"X\":[[..],..]}");
}

ResolvedInput resolve(const InputFlags& in) {
  int sources = !in.catalog_name.empty() + !in.arrangement_file.empty() +
                !in.coords_file.empty() + !in.graph_file.empty();
  if (sources != 1)
    throw invalid_input("exactly one input source is required "
                        "(--catalog, --arrangement, --coords or --graph)");
  ResolvedInput r;
  if (!in.catalog_name.empty()) {
    CatalogEntry e = catalog(in.catalog_name);
    r.description = e.name;
    r.arrangement = e.arrangement;
    r.candidate = e.candidate;
    r.ground = arrangement_ground(e.arrangement);
  } else if (!in.arrangement_file.empty()) {
    r.description = in.arrangement_file;
    r.arrangement = arrangement_from_json(read_file(in.arrangement_file));
    r.ground = arrangement_ground(*r.arrangement);
  } else if (!in.coords_file.empty()) {
    r.description = in.coords_file;
    r.arrangement = l2_from_coordinates(lines_from_text(read_file(in.coords_file)));
    r.ground = arrangement_ground(*r.arrangement);
  } else {
    r.description = in.graph_file;
    r.graph = graph_from_text(read_file(in.graph_file));
    r.ground = r.graph->edge_ground_set();
  }
  if (!in.net_file.empty()) r.candidate = net_candidate_from_json(read_file(in.net_file));
  return r;
}

MonomialIdeal base_ideal(const ResolvedInput& r) {
  if (r.arrangement) return build_J(FlatFamily::from_arrangement(*r.arrangement, r.ground));
  return build_J(FlatFamily::from_graph(*r.graph));
}

// --ideal J | J2 | JX | JY | JPi
MonomialIdeal select_ideal(const ResolvedInput& r, const std::string& which) {
  if (which == "J" || which.empty()) return base_ideal(r);
  if (which == "J2") return quadratic_part(base_ideal(r));
  if (which == "JX" || which == "JY" || which == "JPi") {
    if (!r.candidate)
      throw invalid_input("--ideal " + which + " needs a net candidate (--net or a catalog "
                          "entry that has one)");
    if (which == "JX") return j_x(r.ground, *r.candidate);
    if (which == "JPi") return j_pi(r.ground, *r.candidate);
    if (!r.arrangement) throw invalid_input("--ideal JY needs an arrangement input");
    return split_JY(*r.arrangement, *r.candidate);
  }
  throw invalid_input("unknown --ideal '" + which + "' (expected J, J2, JX, JY or JPi)");
}

void print_ideal(const MonomialIdeal& ideal, const std::string& format) {
  if (format == "json") {
    std::cout << ideal_to_json(ideal) << "\n";
    return;
  }
  if (ideal.is_zero()) {
    std::cout << "0 (zero ideal on " << ideal.ground().n << " variables)\n";
    return;
  }
  for (Monomial m : ideal.gens()) std::cout << ideal.ground().render(m) << "\n";
}

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("NETDUAL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

int run(int argc, char** argv) {
  CLI::App app{"monomial Orlik-Solomon ideals, Alexander duality and nets"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- catalog ------------------------------------------------------------
  auto* cmd_catalog = app.add_subcommand("catalog", "List or dump built-in arrangements");
  std::string catalog_entry;
  cmd_catalog->add_option("name", catalog_entry, "Entry to dump (omit to list)");

  // ---- ideal / dual / primary --------------------------------------------
  InputFlags ideal_in, dual_in, primary_in;
  std::string ideal_which = "J", dual_which = "J", primary_which = "J";
  bool ideal_dualize = false;

  auto* cmd_ideal = app.add_subcommand("ideal", "Print the monomial OS ideal's generators");
  add_input_flags(cmd_ideal, ideal_in, true);
  cmd_ideal->add_option("--ideal", ideal_which, "J (default), J2, JX, JY or JPi");
  cmd_ideal->add_flag("--dual", ideal_dualize, "Print the Alexander dual instead");

  auto* cmd_dual = app.add_subcommand("dual", "Print the Alexander dual's generators");
  add_input_flags(cmd_dual, dual_in, true);
  cmd_dual->add_option("--ideal", dual_which, "J (default), J2, JX, JY or JPi");

  auto* cmd_primary = app.add_subcommand("primary", "Print the primary decomposition");
  add_input_flags(cmd_primary, primary_in, true);
  cmd_primary->add_option("--ideal", primary_which, "J (default), J2, JX, JY or JPi");

  // ---- betti ---------------------------------------------------------------
  InputFlags betti_in;
  std::string betti_which = "J", betti_subject = "ideal", betti_field = "q";
  int betti_kn = 0, betti_threads = 0;
  bool betti_dual = false, betti_exhaustive = false, betti_oracle = false,
       betti_multigraded = false;
  auto* cmd_betti = app.add_subcommand("betti", "Betti table via Hochster's formula");
  add_input_flags(cmd_betti, betti_in, true);
  cmd_betti->add_option("--kn", betti_kn, "Use the complete-graph ideal J(K_n)");
  cmd_betti->add_option("--ideal", betti_which, "J (default), J2, JX, JY or JPi");
  cmd_betti->add_option("--subject", betti_subject, "ideal (default) or quotient")
      ->check(CLI::IsMember({"ideal", "quotient"}));
  cmd_betti->add_option("--field", betti_field, "q (exact rationals, default) or gf:p");
  cmd_betti->add_flag("--dual", betti_dual, "Table of the Alexander dual");
  cmd_betti->add_flag("--exhaustive", betti_exhaustive,
                      "Sweep all squarefree multidegrees (validation mode)");
  cmd_betti->add_flag("--oracle", betti_oracle,
                      "Also run the Koszul Tor oracle and diff (n <= 12)");
  cmd_betti->add_flag("--multigraded", betti_multigraded,
                      "Include multigraded entries in JSON output");
  cmd_betti->add_option("--threads", betti_threads,
                        "Worker threads for the multidegree sweep (NETDUAL_THREADS)");

  // ---- hilbert --------------------------------------------------------------
  InputFlags hilbert_in;
  int hilbert_kn = 0;
  bool hilbert_dual = false;
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series numerators");
  add_input_flags(cmd_hilbert, hilbert_in, false);
  cmd_hilbert->add_option("--kn", hilbert_kn, "Closed form for S/J(K_n)");
  cmd_hilbert->add_flag("--dual", hilbert_dual, "Closed form for S/J(K_n)^v");

  // ---- fvector ---------------------------------------------------------------
  InputFlags fvec_in;
  int fvec_kn = 0;
  auto* cmd_fvec = app.add_subcommand("fvector", "f-polynomial of the Stanley-Reisner complex");
  add_input_flags(cmd_fvec, fvec_in, false);
  cmd_fvec->add_option("--kn", fvec_kn, "Closed form for Delta_{J(K_n)}");

  // ---- cutpoly ----------------------------------------------------------------
  InputFlags cut_in;
  int cut_kn = 0, cut_threads = 0, cut_max_j = 0;
  auto* cmd_cut = app.add_subcommand("cutpoly", "Cut polynomial of a quadratic ideal");
  add_input_flags(cmd_cut, cut_in, false);
  cmd_cut->add_option("--kn", cut_kn, "Quadratic part of J(K_n)");
  cmd_cut->add_option("--threads", cut_threads, "Worker threads (NETDUAL_THREADS)");
  cmd_cut->add_option("--max-j", cut_max_j,
                      "Only compute c_j for j up to this bound (subset-size sweep)");

  // ---- net-check / blocks-check -----------------------------------------------
  InputFlags net_in, blocks_in;
  auto* cmd_net = app.add_subcommand("net-check", "Decide the net property by both criteria");
  add_input_flags(cmd_net, net_in, true);
  auto* cmd_blocks =
      app.add_subcommand("blocks-check", "Are all within-block intersections normal crossings?");
  add_input_flags(cmd_blocks, blocks_in, true);

  // ---- fy-slack ------------------------------------------------------------------
  InputFlags fy_in;
  int fy_k = 0, fy_d = 0;
  long long fy_x = -1, fy_mu = -1;
  auto* cmd_fy = app.add_subcommand("fy-slack", "Euler-characteristic slack of a (k,d) net");
  add_input_flags(cmd_fy, fy_in, true);
  cmd_fy->add_option("--k", fy_k, "Block count");
  cmd_fy->add_option("--d", fy_d, "Block size");
  cmd_fy->add_option("--x-size", fy_x, "|X| (defaults to d^2)");
  cmd_fy->add_option("--mu-sum", fy_mu,
                     "Sum of mu(p) over within-block intersection points "
                     "(defaults to k*C(d,2): all normal crossings)");

  // --format may appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage and parse problems are exit 1
  }

  // ---------------------------------------------------------------------------
  if (*cmd_catalog) {
    if (catalog_entry.empty()) {
      for (const std::string& name : catalog_names()) std::cout << name << "\n";
      return 0;
    }
    CatalogEntry e = catalog(catalog_entry);
    if (format == "json") {
      std::cout << catalog_entry_to_json(e) << "\n";
    } else {
      std::cout << e.name << ": " << e.description << "\n";
      GroundSet g = arrangement_ground(e.arrangement);
      std::cout << "lines: " << e.arrangement.line_count() << "\n";
      std::cout << "multiple points:";
      for (Subset p : e.arrangement.multiple_points()) std::cout << " " << g.render_indices(p);
      std::cout << "\nimplicit double points: " << e.arrangement.double_pairs().size() << "\n";
      if (e.candidate) {
        std::cout << "net candidate blocks:";
        for (Subset b : e.candidate->blocks) std::cout << " " << g.render_indices(b);
        std::cout << "\n|X| = " << e.candidate->points.size() << "\n";
      }
      if (!e.coordinates.empty()) {
        std::cout << "coordinates (a b c):\n";
        for (const RationalLine& l : e.coordinates) std::cout << "  " << l.to_string() << "\n";
      }
    }
    return 0;
  }

  if (*cmd_ideal || *cmd_dual) {
    const InputFlags& in = *cmd_ideal ? ideal_in : dual_in;
    const std::string& which = *cmd_ideal ? ideal_which : dual_which;
    bool dualize = *cmd_dual || ideal_dualize;
    ResolvedInput r = resolve(in);
    MonomialIdeal ideal = select_ideal(r, which);
    if (dualize) ideal = alexander_dual(ideal);
    print_ideal(ideal, format);
    return 0;
  }

  if (*cmd_primary) {
    ResolvedInput r = resolve(primary_in);
    MonomialIdeal ideal = select_ideal(r, primary_which);
    PrimaryDecomposition pd = primary_decomposition(ideal);
    if (format == "json") {
      MonomialIdeal as_ideal = MonomialIdeal::make(ideal.ground(), pd.components);
      std::cout << ideal_to_json(as_ideal) << "\n";
    } else {
      for (Subset c : pd.components) {
        std::cout << "(";
        bool first = true;
        for (int i : c.elements()) {
          std::cout << (first ? "" : ",") << ideal.ground().label(i);
          first = false;
        }
        std::cout << ")\n";
      }
    }
    return 0;
  }

  if (*cmd_betti) {
    MonomialIdeal ideal = [&] {
      if (betti_kn > 0) {
        if (betti_which != "J" && betti_which != "J2")
          throw invalid_input("--kn supports --ideal J or J2 only");
        MonomialIdeal j = j_complete_graph(betti_kn);
        return betti_which == "J2" ? quadratic_part(j) : j;
      }
      return select_ideal(resolve(betti_in), betti_which);
    }();
    if (betti_dual) ideal = alexander_dual(ideal);
    FieldChoice field = FieldChoice::parse(betti_field);
    HochsterOptions options;
    options.exhaustive = betti_exhaustive;
    options.threads = thread_count(betti_threads);
    BettiTable table = hochster_betti(ideal, field, options);
    if (betti_oracle) {
      BettiTable oracle = koszul_tor_oracle(ideal, field);
      check_internal(table == oracle, "Hochster table and Koszul oracle differ");
    }
    BettiTable shown = betti_subject == "quotient" ? table.as_quotient() : table;
    if (format == "json") {
      std::cout << betti_to_json(shown, betti_multigraded) << "\n";
    } else {
      std::cout << shown.render_text();
      std::cout << "pdim = " << shown.pdim() << ", reg = " << shown.reg() << "  ["
                << field.name() << "]";
      if (betti_oracle) std::cout << "  (oracle: agree)";
      std::cout << "\n";
    }
    return 0;
  }

  if (*cmd_hilbert) {
    HilbertSeries series;
    if (hilbert_kn > 0) {
      if (hilbert_dual) {
        series = theoremB_dual(hilbert_kn);
        // Cross-check the closed form against the computed dual table.
        MonomialIdeal dual = alexander_dual(j_complete_graph(hilbert_kn));
        HilbertSeries k = k_polynomial_from_betti(hochster_betti(dual, FieldChoice::rationals()));
        check_internal(k.numerator == series.numerator,
                       "dual closed form disagrees with the computed betti alternating sum");
      } else {
        series = theoremB_primal(hilbert_kn);
        HilbertSeries computed =
            hilbert_numerator(sr_complex(j_complete_graph(hilbert_kn)));
        check_internal(series == computed,
                       "primal closed form disagrees with the computed h-vector");
      }
    } else {
      if (hilbert_dual) throw invalid_input("--dual requires --kn");
      ResolvedInput r = resolve(hilbert_in);
      series = hilbert_numerator(sr_complex(base_ideal(r)));
    }
    if (format == "json")
      std::cout << series_to_json(series) << "\n";
    else
      std::cout << series.to_string() << "\n";
    return 0;
  }

  if (*cmd_fvec) {
    IntPolynomial f;
    if (fvec_kn > 0) {
      f = f_formula_kn(fvec_kn);
      check_internal(f == f_polynomial(sr_complex(j_complete_graph(fvec_kn))),
                     "f-vector closed form disagrees with the face count");
    } else {
      ResolvedInput r = resolve(fvec_in);
      f = f_polynomial(sr_complex(base_ideal(r)));
    }
    if (format == "json")
      std::cout << polynomial_to_json(f) << "\n";
    else
      std::cout << f.to_string_descending("x") << "\n";
    return 0;
  }

  if (*cmd_cut) {
    MonomialIdeal ideal = cut_kn > 0 ? quadratic_part(j_complete_graph(cut_kn))
                                     : quadratic_part(base_ideal(resolve(cut_in)));
    int threads = thread_count(cut_threads);
    IntPolynomial c;
    if (cut_max_j > 0) {
      std::vector<long long> coeffs(cut_max_j + 1, 0);
      for (int j = 2; j <= cut_max_j; ++j) coeffs[j] = cut_coefficient(ideal, j);
      c = IntPolynomial(std::move(coeffs));
    } else {
      c = cut_polynomial(ideal, threads);
    }
    if (format == "json") {
      std::cout << polynomial_to_json(c) << "\n";
    } else {
      int top = cut_max_j > 0 ? cut_max_j : std::max(2, c.degree());
      for (int j = 2; j <= top; ++j)
        std::cout << "c_" << j << " = " << c.coefficient(j) << "\n";
    }
    return 0;
  }

  if (*cmd_net || *cmd_blocks) {
    ResolvedInput r = resolve(*cmd_net ? net_in : blocks_in);
    if (!r.arrangement) throw invalid_input("net checks need an arrangement input");
    if (!r.candidate)
      throw invalid_input("no net candidate: pass --net or use a catalog entry with one");

    if (*cmd_blocks) {
      bool nc = blocks_normal_crossing(*r.arrangement, *r.candidate);
      if (format == "json")
        std::cout << "{\"blocks_normal_crossing\": " << (nc ? "true" : "false") << "}\n";
      else
        std::cout << (nc ? "all within-block intersections are normal crossings\n"
                         : "some block contains a multiple point\n");
      return 0;
    }

    NetVerdict direct = net_check_direct(*r.arrangement, *r.candidate);
    NetVerdict dual = net_check_dual(r.ground, *r.candidate);
    check_internal(!(direct.is_net && !dual.is_net),
                   "a verified net failed the dual criterion; this is a bug");
    if (format == "json") {
      std::cout << verdict_to_json(direct, r.ground) << "\n";
    } else {
      int k = r.candidate->k(), d = r.candidate->d();
      if (direct.is_net) {
        std::cout << "NET (k=" << k << ", d=" << d << "); |X|=" << r.candidate->points.size()
                  << "=d^2; dual criterion PASS; direct criterion PASS\n";
        if (k != 3 && k != 4)
          std::cout << "note: a net must have k in {3,4}; k=" << k
                    << " cannot occur for an actual line arrangement\n";
      } else {
        std::cout << "NOT A NET (k=" << k << ", d=" << d << "); direct criterion FAIL: "
                  << direct.certificate->describe(r.ground) << "; dual criterion "
                  << (dual.is_net ? "PASS (not conclusive for d >= 3)" : "FAIL") << "\n";
      }
    }
    return 0;
  }

  if (*cmd_fy) {
    int k = fy_k, d = fy_d;
    long long x_size = fy_x, mu_sum = fy_mu;
    bool extra;
    if (!fy_in.catalog_name.empty() || !fy_in.arrangement_file.empty() ||
        !fy_in.coords_file.empty()) {
      ResolvedInput r = resolve(fy_in);
      if (!r.candidate) throw invalid_input("fy-slack needs a net candidate");
      k = r.candidate->k();
      d = r.candidate->d();
      x_size = static_cast<long long>(r.candidate->points.size());
      mu_sum = 0;
      for (Subset b : r.candidate->blocks) {
        for (Subset p : r.arrangement->multiple_points())
          if (p.subset_of(b)) mu_sum += LineArrangement::mu(p);
        for (Subset p : r.arrangement->double_pairs())
          if (p.subset_of(b)) mu_sum += 1;
      }
    }
    if (k < 3 || d < 2) throw invalid_input("fy-slack needs --k >= 3 and --d >= 2 (or an input)");
    if (x_size < 0) x_size = static_cast<long long>(d) * d;
    if (mu_sum < 0) mu_sum = static_cast<long long>(k) * binomial(d, 2);
    long long slack = fy_slack(k, d, x_size, mu_sum);
    NetCandidate shape;
    for (int b = 0; b < k; ++b) {
      Subset block;
      for (int i = 0; i < d; ++i) block = block.with(b * d + i);
      shape.blocks.push_back(block);
    }
    extra = extra_fibers_required(shape);
    if (format == "json") {
      std::cout << "{\"k\": " << k << ", \"d\": " << d << ", \"slack\": " << slack
                << ", \"extra_fibers_required\": " << (extra ? "true" : "false") << "}\n";
    } else {
      std::cout << "slack = " << slack << " (k=" << k << ", d=" << d << ", |X|=" << x_size
                << ", within-block mu sum=" << mu_sum << ")\n";
      std::cout << "extra singular fibers required: " << (extra ? "yes" : "no") << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const size_cap_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const internal_check_error& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
