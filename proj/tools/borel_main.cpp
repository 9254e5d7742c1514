// Command-line front end: enumerate saturated strongly stable ideals by
// Hilbert polynomial, almost-lexsegment ideals, or ideals by Hilbert series
// numerator; analyze single ideals; print lex ideals, bound data, and count
// tables.
//
// Exit codes: 0 success, 1 verification failure, 2 bad polynomial or
// numerator input, 3 ring too small, 4 invalid ideal input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "borel/enumerate.hpp"
#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"
#include "borel/io.hpp"
#include "borel/oracle.hpp"

namespace {

using namespace borel;

struct PolyFlags {
  std::string poly;
  std::string coeffs;
  std::string gotzmann;
};

void add_poly_flags(CLI::App* cmd, PolyFlags& in) {
  CLI::Option* a = cmd->add_option(
      "--poly", in.poly,
      "Hilbert polynomial in z; rational coefficients a/b, '*' optional, "
      "powers z^k, e.g. \"3/2*z^2+5/2*z\"");
  CLI::Option* b = cmd->add_option(
      "--coeffs", in.coeffs, "comma-separated coefficients, z^i at position i");
  CLI::Option* c = cmd->add_option(
      "--gotzmann", in.gotzmann,
      "comma-separated b-vector (positive, non-increasing)");
  a->excludes(b)->excludes(c);
  b->excludes(c);
}

HilbertPolynomial resolve_poly(const PolyFlags& in) {
  if (!in.gotzmann.empty()) return parse_gotzmann_list(in.gotzmann);
  QPoly q;
  if (!in.poly.empty()) {
    q = parse_polynomial(in.poly);
  } else if (!in.coeffs.empty()) {
    q = parse_coeff_list(in.coeffs);
  } else {
    throw PolynomialError(
        "no polynomial given; use --poly, --coeffs, or --gotzmann");
  }
  if (q.is_zero()) {
    throw PolynomialError("zero polynomial rejected (p != 0 required)");
  }
  return decompose(q);
}

struct OutputFlags {
  std::string format = "text";
  bool count_only = false;
  bool unsorted = false;
  int workers = 1;
};

void add_output_flags(CLI::App* cmd, OutputFlags& out) {
  cmd->add_option("--format", out.format, "text or json (JSON-lines records)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--count-only", out.count_only, "print only the count");
  cmd->add_flag("--unsorted", out.unsorted,
                "emit in search order instead of sorted order");
  cmd->add_option("--workers", out.workers, "worker threads")
      ->check(CLI::Range(1, 256));
}

EnumerateOptions enum_options(const OutputFlags& out) {
  EnumerateOptions opts;
  opts.workers = out.workers;
  opts.sort_output = !out.unsorted;
  return opts;
}

// Streams the result set: text form per line (the lex ideal marked) and a
// count=N trailer, or one JSON record per line and a summary object.
void emit_ideals(const std::vector<StronglyStableIdeal>& ideals,
                 const StronglyStableIdeal* lex, const OutputFlags& out,
                 const nlohmann::json& echo) {
  if (out.count_only) {
    std::cout << ideals.size() << "\n";
    return;
  }
  if (out.format == "json") {
    for (const StronglyStableIdeal& I : ideals) {
      nlohmann::json rec = analysis_record(I);
      rec["lex"] = lex != nullptr && I == *lex;
      std::cout << rec.dump() << "\n";
    }
    nlohmann::json summary{{"count", ideals.size()}, {"input", echo}};
    std::cout << summary.dump() << "\n";
    return;
  }
  for (const StronglyStableIdeal& I : ideals) {
    std::cout << to_text(I);
    if (lex != nullptr && I == *lex) std::cout << " [lex]";
    std::cout << "\n";
  }
  std::cout << "count=" << ideals.size() << "\n";
}

// The opt-in --verify pass: structural invariants, agreement with the
// requested input, and the slow recomputations from the oracle module.
int verify_ideals(const std::vector<StronglyStableIdeal>& ideals,
                  const HilbertPolynomial* want_hp,
                  const SeriesNumerator* want_g) {
  for (const StronglyStableIdeal& I : ideals) {
    std::string label = to_text(I);
    if (!is_minimal_generating_set(I.gens) || !is_strongly_stable(I) ||
        !is_saturated(I)) {
      std::cerr << "verify: " << label << " is not in canonical form\n";
      return 1;
    }
    HilbertPolynomial hp = hilbert_polynomial_of(I);
    if (want_hp != nullptr && !(hp == *want_hp)) {
      std::cerr << "verify: " << label << " has the wrong Hilbert polynomial\n";
      return 1;
    }
    SeriesNumerator g = series_numerator_of(I);
    if (want_g != nullptr && !(g == *want_g)) {
      std::cerr << "verify: " << label << " has the wrong series numerator\n";
      return 1;
    }
    long b0 = hp.is_zero() ? 0 : hp.b[0].get_si();
    int d = hp.is_zero() ? 0 : hp.degree();
    for (long j = b0; j <= b0 + d + 1; ++j) {
      if (oracle::hilbert_function(I, j) != evaluate(hp, j)) {
        std::cerr << "verify: " << label
                  << " disagrees with the counting oracle at degree " << j
                  << "\n";
        return 1;
      }
    }
    int depth = std::max<int>(g.is_zero() ? 1 : g.degree() + 1, regularity(I));
    if (!oracle::series_consistency_check(I, depth)) {
      std::cerr << "verify: " << label << " fails the series recomputation\n";
      return 1;
    }
  }
  return 0;
}

std::vector<StronglyStableIdeal> sorted_copy(
    std::vector<StronglyStableIdeal> v) {
  std::sort(v.begin(), v.end(), ideal_less);
  return v;
}

int run_enumerate_hp(int vars, const PolyFlags& pf, const OutputFlags& of,
                     bool verify, bool use_oracle, bool almost_lex_only,
                     bool max_betti) {
  HilbertPolynomial p = resolve_poly(pf);
  AmbientRing ring{vars};
  if (!p.is_zero() && p.degree() > ring.n() - 1) {
    std::cerr << "note: deg p = " << p.degree() << " needs more than " << vars
              << " variables; no such ideal exists\n";
  }
  std::vector<StronglyStableIdeal> out =
      enumerate_by_hp(p, ring, enum_options(of));
  if (use_oracle) {
    std::vector<StronglyStableIdeal> naive = oracle::naive_enumerate_by_hp(p, ring);
    if (sorted_copy(out) != naive) {
      std::cerr << "oracle: fenced enumeration disagrees with the naive "
                   "deduplicated search ("
                << out.size() << " vs " << naive.size() << " ideals)\n";
      return 1;
    }
  }
  if (almost_lex_only) {
    std::vector<StronglyStableIdeal> kept;
    for (StronglyStableIdeal& I : out) {
      if (is_almost_lex(I)) kept.push_back(std::move(I));
    }
    out = std::move(kept);
  }
  if (max_betti) out = max_betti_filter(out);
  if (verify) {
    int rc = verify_ideals(out, &p, nullptr);
    if (rc != 0) return rc;
  }
  // the lex ideal exists whenever the enumeration is non-empty; an empty
  // run (deg p too large for the ring) must not fail over the missing tag
  StronglyStableIdeal lex{ring, {}};
  const StronglyStableIdeal* lex_tag = nullptr;
  if (!out.empty()) {
    lex = lex_ideal(p, ring);
    lex_tag = &lex;
  }
  nlohmann::json echo{{"command", "enumerate-hp"},
                      {"vars", vars},
                      {"poly", to_text(to_qpoly(p))}};
  emit_ideals(out, lex_tag, of, echo);
  return 0;
}

int run_enumerate_almost_lex(int vars, const PolyFlags& pf,
                             const OutputFlags& of, bool verify,
                             bool max_betti) {
  HilbertPolynomial p = resolve_poly(pf);
  AmbientRing ring{vars};
  AlmostLexRun run = enumerate_almost_lex(p, ring, enum_options(of));
  std::vector<StronglyStableIdeal> out = std::move(run.ideals);
  if (max_betti) out = max_betti_filter(out);
  if (verify) {
    for (const StronglyStableIdeal& I : out) {
      if (!is_almost_lex(I)) {
        std::cerr << "verify: " << to_text(I) << " is not almost-lexsegment\n";
        return 1;
      }
    }
    int rc = verify_ideals(out, &p, nullptr);
    if (rc != 0) return rc;
  }
  StronglyStableIdeal lex{ring, {}};
  const StronglyStableIdeal* lex_tag = nullptr;
  if (!out.empty()) {
    lex = lex_ideal(p, ring);
    lex_tag = &lex;
  }
  nlohmann::json echo{{"command", "enumerate-almost-lex"},
                      {"vars", vars},
                      {"poly", to_text(to_qpoly(p))},
                      {"start", to_text(run.start)},
                      {"lex_expansions", run.lex_expansions.get_str()}};
  if (!of.count_only && of.format == "text") {
    std::cerr << "start ideal " << to_text(run.start) << ", "
              << run.lex_expansions.get_str() << " lex expansions\n";
  }
  emit_ideals(out, lex_tag, of, echo);
  return 0;
}

int run_enumerate_series(int vars, const std::string& numerator,
                         const OutputFlags& of, bool verify) {
  SeriesNumerator g = parse_numerator_list(numerator);
  AmbientRing ring{vars};
  std::vector<StronglyStableIdeal> out =
      enumerate_by_series(g, ring, enum_options(of));
  if (verify) {
    int rc = verify_ideals(out, nullptr, &g);
    if (rc != 0) return rc;
  }
  nlohmann::json echo{{"command", "enumerate-series"},
                      {"vars", vars},
                      {"numerator", numerator}};
  emit_ideals(out, nullptr, of, echo);
  return 0;
}

int run_analyze(const std::string& input, int vars, const OutputFlags& of) {
  std::string text;
  std::size_t at = input.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && (input[at] == '(' || input[at] == '{')) {
    text = input;
  } else if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) {
      throw InvalidIdealError("cannot open ideal file: " + input);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  StronglyStableIdeal I = parse_ideal(text, vars);
  if (auto v = find_borel_violation(I)) {
    Monomial missing = v->gen.div_var(v->to).times_var(v->from);
    std::cerr << "not strongly stable: generator " << to_text(v->gen)
              << " requires " << to_text(missing)
              << " in the ideal (exchange x" << v->to << " -> x" << v->from
              << ")\n";
    return 4;
  }
  if (!is_saturated(I)) {
    std::cerr << "not saturated: a generator is divisible by the last "
                 "variable x"
              << I.ring.n() << "\n";
    return 4;
  }
  nlohmann::json rec = analysis_record(I);
  if (of.format == "json") {
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "ideal: " << to_text(I) << "\n";
  std::cout << "betti: " << rec["betti"].dump() << "\n";
  std::cout << "regularity: " << rec["regularity"].dump() << "\n";
  std::cout << "series numerator: " << rec["series_numerator"].dump() << "\n";
  std::cout << "hilbert polynomial: "
            << rec["hp"]["text"].get<std::string>() << "\n";
  std::cout << "b-vector: " << rec["hp"]["gotzmann"].dump() << "\n";
  std::cout << "almost lex: "
            << (rec["almost_lex"].get<bool>() ? "yes" : "no") << "\n";
  return 0;
}

int run_lex_ideal(int vars, const PolyFlags& pf, const OutputFlags& of) {
  HilbertPolynomial p = resolve_poly(pf);
  StronglyStableIdeal L = lex_ideal(p, AmbientRing{vars});
  if (of.format == "json") {
    std::cout << ideal_to_json(L).dump() << "\n";
  } else {
    std::cout << to_text(L) << "\n";
  }
  return 0;
}

int run_bounds(int vars, const PolyFlags& pf) {
  HilbertPolynomial p = resolve_poly(pf);
  AmbientRing ring{vars};
  if (p.degree() > ring.n() - 1) {
    throw RingTooSmallError("deg p = " + std::to_string(p.degree()) +
                            " needs at least " + std::to_string(p.degree() + 2) +
                            " variables");
  }
  std::string bs, as;
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    if (i > 0) bs += ",";
    bs += p.b[i].get_str();
  }
  std::vector<Int> a = p.a_vector();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) as += ",";
    as += a[i].get_str();
  }
  std::cout << "polynomial: " << to_text(to_qpoly(p)) << "\n";
  std::cout << "b-vector: " << bs << "\n";
  std::cout << "a-vector: " << as << "\n";
  std::cout << "regularity bound: " << p.b[0].get_str() << "\n";
  std::cout << "stability threshold: " << stability_threshold(p).get_str()
            << "\n";
  std::cout << "count upper bound: " << count_upper_bound(p, ring.n()).get_str()
            << "\n";
  return 0;
}

int run_table(const std::string& polys, const std::string& vars_list,
              bool stability, bool count_only, int workers) {
  std::vector<std::string> rows;
  {
    std::stringstream ss(polys);
    std::string part;
    while (std::getline(ss, part, ';')) rows.push_back(part);
  }
  std::vector<int> cols;
  {
    std::stringstream ss(vars_list);
    std::string part;
    while (std::getline(ss, part, ',')) cols.push_back(std::stoi(part));
  }
  if (rows.empty() || cols.empty()) {
    throw PolynomialError("table needs --polys and --vars");
  }
  EnumerateOptions opts;
  opts.workers = workers;

  auto cell = [&](const HilbertPolynomial& p, int nv) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<StronglyStableIdeal> out = enumerate_by_hp(p, AmbientRing{nv}, opts);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    char buf[64];
    if (count_only) {
      std::snprintf(buf, sizeof buf, "%zu", out.size());
    } else {
      std::snprintf(buf, sizeof buf, "%zu (%.2fs)", out.size(), dt.count());
    }
    return std::string(buf);
  };

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"p \\ n"};
  for (int nv : cols) header.push_back("n=" + std::to_string(nv - 1));
  if (stability) {
    header.push_back("n=n*");
    header.push_back("n=n*+1");
  }
  grid.push_back(header);
  for (const std::string& row : rows) {
    PolyFlags pf;
    pf.poly = row;
    HilbertPolynomial p = resolve_poly(pf);
    std::vector<std::string> line{to_text(to_qpoly(p))};
    for (int nv : cols) line.push_back(cell(p, nv));
    if (stability) {
      long t = stability_threshold(p).get_si();
      line.push_back(std::to_string(t) + ": " + cell(p, static_cast<int>(t) + 1));
      line.push_back(std::to_string(t + 1) + ": " + cell(p, static_cast<int>(t) + 2));
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const std::vector<std::string>& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  for (const std::vector<std::string>& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::cout << line[i];
      if (i + 1 < line.size()) {
        std::cout << std::string(width[i] - line[i].size() + 2, ' ');
      }
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enumeration and analysis of saturated strongly stable monomial "
      "ideals with prescribed Hilbert polynomial or series"};
  app.require_subcommand(1);

  int vars = 0;
  PolyFlags pf;
  OutputFlags of;
  bool verify = false;
  bool use_oracle = false;
  bool almost_lex_only = false;
  bool max_betti = false;

  CLI::App* hp = app.add_subcommand(
      "enumerate-hp",
      "all saturated strongly stable ideals with Hilbert polynomial p");
  hp->add_option("--vars", vars, "number of variables n+1")->required();
  add_poly_flags(hp, pf);
  add_output_flags(hp, of);
  hp->add_flag("--verify", verify, "re-check every output with the oracle");
  hp->add_flag("--oracle", use_oracle,
               "also run the naive deduplicated search and compare");
  hp->add_flag("--almost-lex-only", almost_lex_only,
               "keep only almost-lexsegment ideals");
  hp->add_flag("--max-betti", max_betti,
               "keep only ideals with componentwise-maximal Betti numbers");

  CLI::App* al = app.add_subcommand(
      "enumerate-almost-lex",
      "all almost-lexsegment ideals with Hilbert polynomial p");
  al->add_option("--vars", vars, "number of variables n+1")->required();
  add_poly_flags(al, pf);
  add_output_flags(al, of);
  al->add_flag("--verify", verify, "re-check every output with the oracle");
  al->add_flag("--max-betti", max_betti,
               "keep only ideals with componentwise-maximal Betti numbers");

  std::string numerator;
  CLI::App* se = app.add_subcommand(
      "enumerate-series",
      "all saturated strongly stable ideals with Hilbert series numerator g");
  se->add_option("--vars", vars, "number of variables n+1")->required();
  se->add_option("--numerator", numerator,
                 "comma-separated integers, coefficient of t^i at position i")
      ->required();
  add_output_flags(se, of);
  se->add_flag("--verify", verify, "re-check every output with the oracle");

  std::string analyze_input;
  CLI::App* an = app.add_subcommand(
      "analyze", "Betti numbers, regularity, Hilbert data of one ideal");
  an->add_option("input", analyze_input,
                 "ideal: inline \"(x0^2, x0*x1)\" or JSON, a file path, or - "
                 "for stdin")
      ->required();
  an->add_option("--vars", vars,
                 "ring size for the text form (default: max index + 2)");
  an->add_option("--format", of.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* lx = app.add_subcommand("lex-ideal",
                                    "the lex ideal L_p of a Hilbert polynomial");
  lx->add_option("--vars", vars, "number of variables n+1")->required();
  add_poly_flags(lx, pf);
  lx->add_option("--format", of.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* bo = app.add_subcommand(
      "bounds", "b-vector, a-vector, regularity and count bounds");
  bo->add_option("--vars", vars, "number of variables n+1")->required();
  add_poly_flags(bo, pf);

  std::string polys, vars_list;
  bool stability = false;
  CLI::App* tb = app.add_subcommand("table", "count table over (p, n) cells");
  tb->add_option("--polys", polys, "';'-separated polynomials, one per row")
      ->required();
  tb->add_option("--vars", vars_list, "comma-separated ring sizes n+1")
      ->required();
  tb->add_flag("--stability", stability,
               "append columns at the stability threshold n* and n*+1");
  tb->add_flag("--count-only", of.count_only, "cells without timings");
  tb->add_option("--workers", of.workers, "worker threads")
      ->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  try {
    if (hp->parsed()) {
      if (vars < 2) throw RingTooSmallError("need at least 2 variables");
      return run_enumerate_hp(vars, pf, of, verify, use_oracle,
                              almost_lex_only, max_betti);
    }
    if (al->parsed()) {
      if (vars < 2) throw RingTooSmallError("need at least 2 variables");
      return run_enumerate_almost_lex(vars, pf, of, verify, max_betti);
    }
    if (se->parsed()) {
      if (vars < 2) throw RingTooSmallError("need at least 2 variables");
      return run_enumerate_series(vars, numerator, of, verify);
    }
    if (an->parsed()) return run_analyze(analyze_input, vars == 0 ? -1 : vars, of);
    if (lx->parsed()) {
      if (vars < 2) throw RingTooSmallError("need at least 2 variables");
      return run_lex_ideal(vars, pf, of);
    }
    if (bo->parsed()) {
      if (vars < 2) throw RingTooSmallError("need at least 2 variables");
      return run_bounds(vars, pf);
    }
    if (tb->parsed()) {
      return run_table(polys, vars_list, stability, of.count_only, of.workers);
    }
  } catch (const PolynomialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingTooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidIdealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
