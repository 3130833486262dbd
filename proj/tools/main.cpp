#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cliffbreak/claims.hpp"
#include "cliffbreak/expr.hpp"
#include "cliffbreak/lie.hpp"
#include "cliffbreak/report.hpp"
#include "cliffbreak/structure.hpp"
#include "cliffbreak/version.hpp"

using namespace cliffbreak;

namespace {

std::vector<Multivector> eval_all(const AlgebraDescriptor& d,
                                  const std::vector<std::string>& exprs) {
  std::vector<Multivector> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(eval(parse(e), d));
  return out;
}

Ring parse_ring(const std::string& s) {
  if (s == "r") return Ring::Real;
  if (s == "c") return Ring::Complex;
  if (s == "h") return Ring::Quaternion;
  throw EngineError(ErrorCode::InvalidArgument, "unknown ring '" + s + "' (want r, c or h)");
}

std::string display_name(int p, int q, Ring ring) {
  std::string s = "Cl(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (ring == Ring::Complex) s += ":c";
  if (ring == Ring::Quaternion) s += ":h";
  return s;
}

std::string class_or_error(const SubspaceBasis& s) {
  try {
    return classify_empirical(s).str();
  } catch (const EngineError& e) {
    return std::string("unclassified (") + error_code_name(e.code()) + ")";
  }
}

std::uint64_t resolve_seed(bool seed_set, std::uint64_t flag_value) {
  if (seed_set) return flag_value;
  if (const char* env = std::getenv("CLIFFBREAK_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

int run_classify(int p, int q, const std::string& ring_s, bool empirical) {
  Ring ring = parse_ring(ring_s);
  if (p < 0 || q < 0 || p + q > Signature::kMaxGenerators)
    throw EngineError(ErrorCode::InvalidArgument,
                      "signature out of range (need p, q >= 0, p + q <= " +
                          std::to_string(Signature::kMaxGenerators) + ")");
  IsoClass table = classify_table(Signature{p, q}, ring);
  std::cout << display_name(p, q, ring) << " ≅ " << table.str() << "\n";
  if (empirical) {
    IsoClass emp =
        classify_empirical(full_basis(AlgebraDescriptor::generic(p, q, ring)));
    std::cout << "empirical: " << emp.str() << "\n";
    if (!(emp == table)) {
      std::cout << "MISMATCH between table and structure classifier\n";
      return 1;
    }
  }
  return 0;
}

int run_eval(const std::string& algebra, const std::vector<std::string>& exprs) {
  AlgebraDescriptor d = parse_algebra(algebra);
  for (const auto& e : exprs) std::cout << eval(parse(e), d).str() << "\n";
  return 0;
}

int run_gens_verify(const std::string& algebra, const std::vector<std::string>& exprs) {
  AlgebraDescriptor d = parse_algebra(algebra);
  GeneratorReport rep = verify_generators(eval_all(d, exprs));
  std::cout << "generators: " << exprs.size() << "\n";
  std::cout << "pairwise anticommute: " << (rep.pairwise_anticommute ? "yes" : "no") << "\n";
  std::cout << "squares:";
  for (const auto& s : rep.squares)
    std::cout << ' ' << (s ? (*s > 0 ? "+1" : "-1") : "non-scalar");
  std::cout << "\n";
  if (rep.signature)
    std::cout << "signature: (" << rep.signature->plus << "," << rep.signature->minus
              << ")\n";
  else
    std::cout << "signature: undetermined\n";
  std::cout << "generated dimension: " << rep.generated_dimension << " of " << d.real_dim()
            << "\n";
  std::cout << "full algebra: " << (rep.full_algebra ? "yes" : "no") << "\n";
  std::cout << "pseudoscalar: " << rep.pseudoscalar.str() << "\n";
  return 0;
}

int run_centralizer(const std::string& algebra, const std::vector<std::string>& exprs,
                    const std::vector<std::string>& within) {
  AlgebraDescriptor d = parse_algebra(algebra);
  SubspaceBasis ambient =
      within.empty() ? full_basis(d) : echelonize(d, eval_all(d, within));
  SubspaceBasis z = commutant(eval_all(d, exprs), ambient);
  std::cout << "rank: " << z.rank() << "\n";
  for (const Multivector& row : z.rows()) std::cout << "  " << row.str() << "\n";
  std::cout << "class: " << class_or_error(z) << "\n";
  return 0;
}

int run_split(const std::string& algebra, const std::string& omega_expr,
              const std::vector<std::string>& gens) {
  AlgebraDescriptor d = parse_algebra(algebra);
  SubspaceBasis s =
      gens.empty() ? full_basis(d) : generated_subalgebra(eval_all(d, gens), true);
  Multivector omega = eval(parse(omega_expr), d);
  auto [plus, minus] = idempotent_split(s, omega);
  std::cout << "subalgebra rank: " << s.rank() << "\n";
  std::cout << "ideal (1+w)/2: rank " << plus.rank() << ", class " << class_or_error(plus)
            << "\n";
  std::cout << "ideal (1-w)/2: rank " << minus.rank() << ", class "
            << class_or_error(minus) << "\n";
  return 0;
}

int run_lie_verdict(const std::string& algebra, const std::vector<std::string>& exprs,
                    bool closure) {
  AlgebraDescriptor d = parse_algebra(algebra);
  std::vector<Multivector> elems = eval_all(d, exprs);
  LieBasis l = closure ? lie_closure(elems) : bivector_algebra(elems);
  RealFormVerdict v = killing_verdict(l);
  std::cout << "dimension: " << v.dimension << "\n";
  std::cout << "killing inertia: (" << v.inertia.plus << "," << v.inertia.minus << ","
            << v.inertia.zero << ")\n";
  std::cout << "real form: " << (v.name ? *v.name : "UNKNOWN_FORM") << "\n";
  return 0;
}

int run_claims_cmd(const std::string& filter, std::uint64_t seed, double tol,
                   const std::string& format) {
  ClaimContext ctx{seed, tol};
  std::vector<ClaimResult> results = run_claims(filter, ctx);
  if (format == "json")
    std::cout << render_json(results, seed);
  else
    std::cout << render_text(results);
  return tally(results).fail > 0 ? 1 : 0;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool reserved_symbol(const std::string& name) {
  if (name == "i" || name == "j" || name == "k" || name == "rev" || name == "grade")
    return true;
  if (name.size() >= 2 && name.size() <= 3 && (name[0] == 'g' || name[0] == 'e')) {
    for (std::size_t idx = 1; idx < name.size(); ++idx)
      if (!std::isdigit(static_cast<unsigned char>(name[idx]))) return false;
    return true;
  }
  return false;
}

bool valid_binding_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

int run_repl(const std::string& algebra) {
  AlgebraDescriptor d = parse_algebra(algebra);
  std::map<std::string, Multivector> bindings;
  std::cout << "algebra " << d.name() << "; `let <name> = <expr>` binds, `quit` exits\n";
  std::string line;
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    line = trim(line);
    if (line.empty()) continue;
    if (line == "quit" || line == "exit") break;
    try {
      if (line.rfind("let ", 0) == 0) {
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
          std::cout << "expected: let <name> = <expr>\n";
          continue;
        }
        std::string name = trim(line.substr(4, eq - 4));
        if (!valid_binding_name(name)) {
          std::cout << "bad binding name '" << name << "'\n";
          continue;
        }
        if (reserved_symbol(name)) {
          std::cout << "'" << name << "' is reserved\n";
          continue;
        }
        Multivector value = eval(parse(line.substr(eq + 1)), d, bindings);
        bindings.insert_or_assign(name, value);
        std::cout << name << " = " << value.str() << "\n";
      } else {
        std::cout << eval(parse(line), d, bindings).str() << "\n";
      }
    } catch (const SyntaxError& e) {
      std::cout << e.what() << "\n";
    } catch (const EngineError& e) {
      std::cout << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford-algebra engine: classification, generator frames, "
               "centralizers, splits, Lie verdicts, claim suite"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::function<int()> action;

  // classify
  int cl_p = 0, cl_q = 0;
  std::string cl_ring = "r";
  bool cl_empirical = false;
  auto* classify = app.add_subcommand("classify", "isomorphism class of Cl(p,q) over a ring");
  classify->add_option("p", cl_p, "count of +1 generators")->required();
  classify->add_option("q", cl_q, "count of -1 generators")->required();
  classify->add_option("--ring", cl_ring, "coefficient ring: r, c or h")
      ->check(CLI::IsMember({"r", "c", "h"}));
  classify->add_flag("--empirical", cl_empirical,
                     "cross-check with the internal-structure classifier");
  classify->callback(
      [&] { action = [&] { return run_classify(cl_p, cl_q, cl_ring, cl_empirical); }; });

  // eval
  std::string ev_algebra = "dirac-h";
  std::vector<std::string> ev_exprs;
  auto* ev_cmd = app.add_subcommand("eval", "evaluate expressions exactly");
  ev_cmd->add_option("--algebra", ev_algebra, "dirac-c, dirac-h or cl(p,q)[:r|c|h]");
  ev_cmd->add_option("exprs", ev_exprs, "expressions")->required()->expected(-1);
  ev_cmd->callback([&] { action = [&] { return run_eval(ev_algebra, ev_exprs); }; });

  // gens verify
  std::string gv_algebra = "dirac-h";
  std::vector<std::string> gv_exprs;
  auto* gens = app.add_subcommand("gens", "generator-frame operations");
  gens->require_subcommand(1);
  auto* gverify = gens->add_subcommand("verify", "check a would-be Clifford frame");
  gverify->add_option("--algebra", gv_algebra, "ambient algebra");
  gverify->add_option("exprs", gv_exprs, "generator expressions")->required()->expected(-1);
  gverify->callback([&] { action = [&] { return run_gens_verify(gv_algebra, gv_exprs); }; });

  // centralizer
  std::string ce_algebra = "dirac-h";
  std::vector<std::string> ce_exprs, ce_within;
  auto* cent = app.add_subcommand("centralizer", "everything commuting with the given elements");
  cent->add_option("--algebra", ce_algebra, "ambient algebra");
  cent->add_option("--within", ce_within, "restrict the ambient to this span")
      ->expected(-1);
  cent->add_option("exprs", ce_exprs, "constraint expressions")->required()->expected(-1);
  cent->callback(
      [&] { action = [&] { return run_centralizer(ce_algebra, ce_exprs, ce_within); }; });

  // split
  std::string sp_algebra = "dirac-h", sp_omega;
  std::vector<std::string> sp_gens;
  auto* split = app.add_subcommand("split", "split a subalgebra by a central involution");
  split->add_option("--algebra", sp_algebra, "ambient algebra");
  split->add_option("--omega", sp_omega, "central involution expression")->required();
  split->add_option("--gens", sp_gens, "generators of the subalgebra (default: whole algebra)")
      ->expected(-1);
  split->callback(
      [&] { action = [&] { return run_split(sp_algebra, sp_omega, sp_gens); }; });

  // lie verdict
  std::string lv_algebra = "dirac-h";
  std::vector<std::string> lv_exprs;
  bool lv_closure = false;
  auto* lie = app.add_subcommand("lie", "Lie-algebra operations");
  lie->require_subcommand(1);
  auto* verdict = lie->add_subcommand("verdict", "dimension, Killing inertia, real form");
  verdict->add_option("--algebra", lv_algebra, "ambient algebra");
  verdict->add_flag("--closure", lv_closure,
                    "close the given elements under commutator instead of taking the "
                    "bivector algebra of a frame");
  verdict->add_option("exprs", lv_exprs, "frame generators (or elements with --closure)")
      ->required()
      ->expected(-1);
  verdict->callback(
      [&] { action = [&] { return run_lie_verdict(lv_algebra, lv_exprs, lv_closure); }; });

  // claims run
  std::string cr_filter, cr_format = "text";
  std::uint64_t cr_seed = 0;
  double cr_tol = 1e-9;
  auto* claims = app.add_subcommand("claims", "claim-suite operations");
  claims->require_subcommand(1);
  auto* crun = claims->add_subcommand("run", "run the claim catalogue");
  crun->add_option("--filter", cr_filter, "id prefix filter");
  auto* seed_opt = crun->add_option("--seed", cr_seed, "seed recorded in the report");
  crun->add_option("--format", cr_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  crun->add_option("--tol", cr_tol, "numeric tolerance");
  crun->callback([&] {
    action = [&] {
      std::uint64_t seed = resolve_seed(seed_opt->count() > 0, cr_seed);
      return run_claims_cmd(cr_filter, seed, cr_tol, cr_format);
    };
  });

  // repl
  std::string rp_algebra = "dirac-h";
  auto* repl = app.add_subcommand("repl", "interactive evaluator");
  repl->add_option("--algebra", rp_algebra, "ambient algebra");
  repl->callback([&] { action = [&] { return run_repl(rp_algebra); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const EngineError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
