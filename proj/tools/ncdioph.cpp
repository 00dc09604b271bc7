#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncdioph/compile.hpp"
#include "ncdioph/pell.hpp"
#include "ncdioph/solvers.hpp"
#include "ncdioph/word_equation.hpp"

using namespace ncd;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int sign_arg(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("sign must be + or -, got " + s);
}

Poly parse_laurent(const std::string& text, const PolyRingPtr& ring) {
  return evaluate(parse_term(text, Structure::of_poly(ring)), {}).as<Poly>();
}

int cmd_chebyshev(const std::string& kind, long n) {
  if (kind != "T" && kind != "U") throw UsageError("--kind must be T or U");
  if (n < 0) throw UsageError("--n must be non-negative");
  auto ring = PolyRing::make(Field::rationals(), {"t"});
  std::cout << chebyshev(kind == "T" ? ChebyshevKind::First : ChebyshevKind::Second, n, ring).to_string() << '\n';
  return 0;
}

int cmd_pell(long n_max, const std::vector<std::string>& check, const std::vector<std::string>& family) {
  const int modes = (n_max >= 0) + !check.empty() + !family.empty();
  if (modes != 1) throw UsageError("pell needs exactly one of --n-max, --check, --family");
  if (n_max >= 0) {
    auto ring = PolyRing::make(Field::rationals(), {"t"});
    bool ok = true;
    for (const auto& p : pell_enumerate(n_max, ring).pairs) {
      bool good = pell_check(p.x, p.y);
      ok = ok && good;
      std::cout << "X = " << p.x.to_string() << ", Y = " << p.y.to_string() << (good ? "  OK" : "  FAIL") << '\n';
    }
    return ok ? 0 : 2;
  }
  auto ring = PolyRing::make(Field::gaussian(), {"t"}, true);
  if (!check.empty()) {
    bool ok = pell_check(parse_laurent(check.at(0), ring), parse_laurent(check.at(1), ring));
    std::cout << (ok ? "OK" : "FAIL") << '\n';
    return ok ? 0 : 2;
  }
  long m = std::stol(family.at(0)), n = std::stol(family.at(1));
  if (m < 0 || n < 0) throw UsageError("family indices must be non-negative");
  auto p = laurent_pell_family(static_cast<unsigned>(m), static_cast<unsigned>(n), sign_arg(family.at(2)),
                               sign_arg(family.at(3)), ring);
  std::cout << "X = " << p.x.to_string() << '\n' << "Y = " << p.y.to_string() << '\n';
  bool ok = pell_check(p.x, p.y);
  std::cout << (ok ? "OK" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

int cmd_compile(const std::string& input, const std::string& target, const std::string& witness,
                const std::string& output, bool single) {
  EqSystem sys = parse_system(read_file(input));
  Structure tgt = Structure::parse(target);
  CompileOptions opts;
  opts.single_equation = single;
  Compiled c = compile_h10(sys, tgt, opts);
  if (!output.empty()) {
    write_file(output, serialize(c.target));
    write_file(output + ".provenance.json", c.provenance_json().dump(2) + "\n");
  } else if (witness.empty()) {
    std::cout << serialize(c.target);
  }
  if (witness.empty()) return 0;
  bool ok = forward_verify(c, parse_assignment(witness, sys.structure));
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

struct SolveArgs {
  std::string input, mode = "degree", format = "text";
  std::size_t bound = 1, wordlen = 2, max_witnesses = 1;
  std::uint64_t height = 10;
  bool timing = false, no_retract = false;
};

int cmd_solve(const SolveArgs& a) {
  EqSystem sys = parse_system(read_file(a.input));
  SolveOptions opts;
  opts.bound = a.bound;
  opts.wordlen = a.wordlen;
  opts.height = a.height;
  opts.max_witnesses = a.max_witnesses;
  opts.retract = !a.no_retract;
  const auto start = std::chrono::steady_clock::now();
  SolveReport r;
  try {
    if (a.mode == "degree")
      r = solve_bounded_degree(sys, opts);
    else if (a.mode == "length")
      r = solve_bounded_length(sys, opts);
    else if (a.mode == "width")
      r = solve_bounded_width(sys, opts);
    else
      r = solve_in_field(sys, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.timing)
    r.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (a.format == "json")
    std::cout << r.to_json(sys).dump(2) << '\n';
  else
    std::cout << r.to_text(sys);
  return exit_code(r.status);
}

int cmd_wordsolve(const std::string& input, std::size_t maxlen) {
  WordSystem sys = parse_word_system(read_file(input));
  auto sols = word_solve(sys, maxlen);
  std::cout << sols.size() << (sols.size() == 1 ? " solution" : " solutions") << '\n';
  for (const auto& s : sols) std::cout << format_assignment(sys, s) << '\n';
  return sols.empty() ? 3 : 0;
}

void check_threads() {
  const char* env = std::getenv("NCDIOPH_THREADS");
  if (!env) return;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0' || n < 1) throw UsageError("NCDIOPH_THREADS must be a positive integer");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine reductions and bounded solvers for noncommutative rings", "ncdioph"};
  app.require_subcommand(1);

  auto* cheb = app.add_subcommand("chebyshev", "print T_n or U_n");
  std::string kind;
  long n = 0;
  cheb->add_option("--kind", kind, "T or U")->required();
  cheb->add_option("--n", n, "index")->required();

  auto* pell = app.add_subcommand("pell", "Pell pairs in Q[t] and Laurent families over Q(i)");
  long n_max = -1;
  std::vector<std::string> check, family;
  pell->add_option("--n-max", n_max, "list signed Chebyshev pairs up to this index");
  pell->add_option("--check", check, "X Y")->expected(2)->allow_extra_args(false);
  pell->add_option("--family", family, "m n eps delta")->expected(4)->allow_extra_args(false);

  auto* comp = app.add_subcommand("compile", "compile an int or gaussint system into a target structure");
  std::string input, target, witness, output;
  bool single = false;
  comp->add_option("input", input, "system file")->required()->check(CLI::ExistingFile);
  comp->add_option("--target", target, "target structure descriptor")->required();
  comp->add_option("--witness", witness, "source solution, e.g. \"x1=2, x2=-1\"");
  comp->add_option("-o,--output", output, "output file; FILE.provenance.json is written next to it");
  comp->add_flag("--single-equation", single, "fold the system into one equation (free algebras)");

  auto* solve = app.add_subcommand("solve", "bounded solvers");
  SolveArgs sa;
  solve->add_option("input", sa.input, "system file")->required()->check(CLI::ExistingFile);
  solve->add_option("--mode", sa.mode, "degree, length, width or field")
      ->check(CLI::IsMember({"degree", "length", "width", "field"}));
  solve->add_option("--bound", sa.bound, "degree, total length or width bound");
  solve->add_option("--wordlen", sa.wordlen, "word length bound for width mode");
  solve->add_option("--height", sa.height, "height bound for searches over Q and Q(i)");
  solve->add_option("--max-witnesses", sa.max_witnesses, "0 lists every solution within the bounds");
  solve->add_option("--format", sa.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--timing", sa.timing, "report elapsed milliseconds");
  solve->add_flag("--no-retract", sa.no_retract, "degree mode: keep letters that do not occur");

  auto* wsolve = app.add_subcommand("wordsolve", "word equations by bounded search");
  std::string winput;
  std::size_t maxlen = 3;
  wsolve->add_option("input", winput, "word equation file")->required()->check(CLI::ExistingFile);
  wsolve->add_option("--maxlen", maxlen, "maximal length of each variable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    check_threads();
    if (*cheb) return cmd_chebyshev(kind, n);
    if (*pell) return cmd_pell(n_max, check, family);
    if (*comp) return cmd_compile(input, target, witness, output, single);
    if (*solve) return cmd_solve(sa);
    if (*wsolve) return cmd_wordsolve(winput, maxlen);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
