// nracover command-line driver.
//
// Subcommands:
//   solve <file> [--cert <out>] [--pruned] [--order v1,v2,...]
//       Decide the conjunction; print "sat (vars)=(values)", "unsat", or
//       "incomplete".  Exit 0 on sat/unsat, 2 on incomplete.
//   check <cert> <file>
//       Validate a certificate against the problem file from scratch; print
//       the verdict.  Exit 0 if valid, 1 if invalid.
//   cad <file> [--list-cells|--count]
//       Build the full sign-invariant decomposition for the constraint
//       polynomials; print the leaf count (default) or one line per leaf.
//   dump-covering <cert> --csv <out>
//       Flatten the certificate's covering intervals into CSV for plotting.
//
// Every I/O or input-parse failure prints a message to stderr and exits 3.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nracover/cad.hpp"
#include "nracover/certificate.hpp"
#include "nracover/covering.hpp"
#include "nracover/errors.hpp"
#include "nracover/frontend.hpp"

namespace {

using namespace nracover;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << bytes;
  out.flush();
  if (!out) throw Error("cannot write '" + path + "'");
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Files ending in ".smt2" hold SMT-LIB scripts; everything else is read as
/// the line-oriented native format.
ParsedProblem parse_file(const std::string& path) {
  const std::string text = read_file(path);
  return has_suffix(path, ".smt2") ? parse_smtlib(text) : parse_native(text);
}

/// Witness coordinates print as full rationals ("0/1", "-3/2"); irrational
/// coordinates fall back to the root-of-polynomial rendering.
std::string value_str(const RealAlgebraic& v) {
  return v.is_rational() ? v.rational().str() : v.str();
}

std::string witness_line(const VarOrderPtr& order, const SamplePoint& w) {
  std::string names;
  std::string values;
  for (unsigned i = 0; i < order->size(); ++i) {
    if (i > 0) {
      names += ",";
      values += ", ";
    }
    names += order->name(Variable{i});
    values += value_str(w.at(i));
  }
  return "sat (" + names + ")=(" + values + ")";
}

Formula pick_order(const ParsedProblem& p,
                   const std::vector<std::string>& order_names) {
  if (order_names.empty()) return p.formula;
  return with_order(p, order_names);
}

int run_solve(const std::string& file, const std::string& cert_out, bool pruned,
              const std::vector<std::string>& order_names) {
  const ParsedProblem p = parse_file(file);
  const Formula f = pick_order(p, order_names);
  if (f.constraints.empty()) {
    // An empty conjunction holds everywhere; report the origin.
    const SamplePoint zeros(f.order->size(), RealAlgebraic(Rational(0)));
    std::cout << witness_line(f.order, zeros) << "\n";
    return 0;
  }
  const CoveringResult r = decide(f);
  switch (r.kind) {
    case CoveringResult::Kind::Sat:
      std::cout << witness_line(f.order, r.witness) << "\n";
      return 0;
    case CoveringResult::Kind::Unsat:
      if (!cert_out.empty()) {
        const Certificate c =
            pruned ? prune_certificate(r.certificate) : r.certificate;
        write_file(cert_out, serialize(c));
      }
      std::cout << "unsat\n";
      return 0;
    case CoveringResult::Kind::Incomplete:
      std::cout << "incomplete\n";
      return 2;
  }
  return 3;  // unreachable
}

int run_check(const std::string& cert_path, const std::string& file) {
  const Certificate cert = deserialize(read_file(cert_path));
  const ParsedProblem p = parse_file(file);
  Formula f = p.formula;
  // A certificate produced under a caller-chosen --order names the same
  // variables in a different sequence; align before comparing.  Anything
  // that is not a permutation is left for the checker to flag.
  if (cert.variables != p.variables &&
      std::is_permutation(cert.variables.begin(), cert.variables.end(),
                          p.variables.begin(), p.variables.end())) {
    f = with_order(p, cert.variables);
  }
  const Verdict v = check_certificate(cert, f);
  std::cout << v.str() << "\n";
  return v.valid ? 0 : 1;
}

int run_cad(const std::string& file, bool list) {
  const ParsedProblem p = parse_file(file);
  std::vector<MultiPoly> polys;
  polys.reserve(p.formula.constraints.size());
  for (const Constraint& c : p.formula.constraints) polys.push_back(c.poly);
  const CadTree tree = build_cad(polys, p.formula.order);
  if (list) {
    for (const std::string& line : list_cells(tree)) std::cout << line << "\n";
  } else {
    std::cout << tree.leaf_count() << "\n";
  }
  return 0;
}

/// Bounds are quoted because algebraic values render with commas; a literal
/// '"' cannot occur in them, so no escaping is needed.
std::string csv_bound(const Bound& b) { return "\"" + b.str() + "\""; }

void dump_rows(const std::vector<CoveringInterval>& intervals, int level,
               std::ostream& os) {
  for (const CoveringInterval& iv : intervals) {
    os << level << "," << csv_bound(iv.lower) << "," << csv_bound(iv.upper)
       << "," << (iv.lower.is_value() && iv.lower.closed ? 1 : 0) << ","
       << (iv.upper.is_value() && iv.upper.closed ? 1 : 0) << ",";
    for (size_t i = 0; i < iv.reasons.size(); ++i) {
      if (i > 0) os << ";";
      os << iv.reasons[i];
    }
    os << "\n";
    dump_rows(iv.children, level + 1, os);
  }
}

int run_dump(const std::string& cert_path, const std::string& csv_out) {
  const Certificate cert = deserialize(read_file(cert_path));
  std::ostringstream os;
  os << "level,lower,upper,closed_lower,closed_upper,reasons\n";
  dump_rows(cert.covering, 1, os);
  write_file(csv_out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact satisfiability solver for conjunctions of polynomial "
      "constraints over the reals (cylindrical algebraic coverings)"};
  app.require_subcommand(1);

  std::string solve_file;
  std::string cert_out;
  bool pruned = false;
  std::vector<std::string> order_names;
  CLI::App* solve = app.add_subcommand("solve", "Decide a problem file");
  solve->add_option("file", solve_file, "Problem file (.smt2 or native)")
      ->required();
  solve->add_option("--cert", cert_out,
                    "Write the UNSAT certificate (JSON) to this path");
  solve->add_flag("--pruned", pruned,
                  "Prune the certificate to minimal subcovers before writing");
  solve->add_option("--order", order_names,
                    "Comma-separated variable order overriding declaration "
                    "order (e.g. y,x)")
      ->delimiter(',');

  std::string check_cert;
  std::string check_file;
  CLI::App* check =
      app.add_subcommand("check", "Validate a certificate against a problem");
  check->add_option("cert", check_cert, "Certificate JSON file")->required();
  check->add_option("file", check_file, "Problem file (.smt2 or native)")
      ->required();

  std::string cad_file;
  bool list_flag = false;
  bool count_flag = false;
  CLI::App* cad = app.add_subcommand(
      "cad", "Build the sign-invariant cylindrical decomposition");
  cad->add_option("file", cad_file, "Problem file (.smt2 or native)")
      ->required();
  CLI::Option* list_opt =
      cad->add_flag("--list-cells", list_flag, "Print one line per leaf cell");
  cad->add_flag("--count", count_flag, "Print the leaf count (default)")
      ->excludes(list_opt);

  std::string dump_cert;
  std::string csv_out;
  CLI::App* dump = app.add_subcommand(
      "dump-covering", "Flatten a certificate's intervals to CSV");
  dump->add_option("cert", dump_cert, "Certificate JSON file")->required();
  dump->add_option("--csv", csv_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (solve->parsed())
      return run_solve(solve_file, cert_out, pruned, order_names);
    if (check->parsed()) return run_check(check_cert, check_file);
    if (cad->parsed()) return run_cad(cad_file, list_flag);
    if (dump->parsed()) return run_dump(dump_cert, csv_out);
  } catch (const NullificationError& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;  // unreachable: require_subcommand(1)
}
