#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <regex>

#include "apg/bernoulli.hpp"
#include "apg/format.hpp"
#include "apg/gamma.hpp"
#include "apg/selftest.hpp"
#include "apg/taylor.hpp"
#include "bench_tables.hpp"

using namespace apg;

namespace {

// Plain decimals ("-1.25e3") become exact rationals.
std::optional<mpq_class> decimal_rational(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re) || (m[2].length() == 0 && m[3].length() == 0)) return std::nullopt;
  long e = m[4].matched ? std::stol(m[4].str()) : 0;
  if (std::labs(e) > 100000) return std::nullopt;
  std::string digits = m[2].str() + m[3].str();
  e -= static_cast<long>(m[3].length());
  mpz_class num(digits.empty() ? "0" : digits, 10), ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
  mpq_class q = e >= 0 ? mpq_class(num * ten) : mpq_class(num, ten);
  q.canonicalize();
  if (m[1] == "-") q = -q;
  return q;
}

int exit_usage(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbitrary-precision gamma function with rigorous error bounds"};
  app.require_subcommand(1);

  std::string fn_name = "gamma", algo_name = "auto", re_s, im_s, rat_s;
  long bits = 0, digits = 0;
  int rad_digits = 3;
  bool json = false, verbose = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one function value");
  eval->add_option("--fn", fn_name, "gamma|rgamma|lgamma|digamma");
  eval->add_option("--re", re_s, "real part (decimal string)");
  eval->add_option("--im", im_s, "imaginary part (decimal string)");
  eval->add_option("--rat", rat_s, "exact rational P/Q");
  eval->add_option("--bits", bits, "precision in bits");
  eval->add_option("--digits", digits, "precision in decimal digits");
  eval->add_option("--algo", algo_name, "auto|stirling|taylor|spouge|hyper|hyper-bs");
  eval->add_option("--radius-digits", rad_digits, "significant digits of the printed radius");
  eval->add_flag("--json", json, "JSON output");
  eval->add_flag("-v,--verbose", verbose, "log the algorithm selection");

  std::string table;
  bool csv = false;
  std::vector<long> bench_digits, bench_r, bench_n;
  CLI::App* bench = app.add_subcommand("bench", "Reproduce the benchmark tables");
  bench->add_option("--table", table, "stirling-sum|spouge-error|taylor-coeffs|timings|hyper-alpha")->required();
  bench->add_option("--digits", bench_digits, "decimal precisions");
  bench->add_option("--r", bench_r, "Spouge parameters");
  bench->add_option("--n", bench_n, "coefficient indices");
  bench->add_flag("--csv", csv, "CSV output");

  unsigned long count = 10;
  std::string format = "json";
  CLI::App* bern = app.add_subcommand("bernoulli", "Stream B_2 .. B_count");
  bern->add_option("--count", count, "largest index");
  bern->add_option("--format", format, "json|text");

  bool slow = false;
  CLI::App* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_flag("--slow", slow, "longer ranges and higher precision");

  long dump = 0;
  bool verify = false;
  CLI::App* tt = app.add_subcommand("taylor-table", "Inspect the shipped 1/Gamma Taylor table");
  tt->add_option("--dump", dump, "print the first N coefficients");
  tt->add_flag("--verify", verify, "check against the zeta recurrence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (eval->parsed()) {
    FunctionKind fn;
    AlgoKind algo;
    try {
      fn = parse_function_kind(fn_name);
      algo = parse_algo_kind(algo_name);
    } catch (const std::invalid_argument& e) {
      return exit_usage(e.what());
    }
    if (bits > 0 && digits > 0) return exit_usage("give --bits or --digits, not both");
    if (rat_s.empty() == re_s.empty()) return exit_usage("give exactly one of --re or --rat");
    if (!rat_s.empty() && !im_s.empty()) return exit_usage("--im cannot be combined with --rat");
    long p = bits > 0 ? bits : digits > 0 ? precision_from_digits(digits).bits : 128;
    if (p < 2) return exit_usage("precision must be at least 2 bits");
    int out_digits = digits > 0 ? static_cast<int>(digits) : static_cast<int>(std::ceil(p * 0.3010299956639812));
    Precision prec(p);
    set_selection_logging(verbose);

    GammaArg arg;
    try {
      std::optional<mpq_class> q;
      if (!rat_s.empty()) {
        q = mpq_class(rat_s, 10);
        if (q->get_den() == 0) return exit_usage("zero denominator");
        q->canonicalize();
      } else if (im_s.empty() || decimal_rational(im_s) == mpq_class(0)) {
        q = decimal_rational(re_s);
      }
      if (q) {
        arg = GammaArg::rational(*q, prec);
      } else {
        arg = GammaArg::ball(ComplexBall::from_strings(re_s, im_s.empty() ? "0" : im_s, Precision(p + 64)));
      }
    } catch (const std::exception& e) {
      return exit_usage(std::string("bad argument: ") + e.what());
    }

    EvalResult r;
    try {
      r = evaluate(fn, arg, prec, algo);
    } catch (const AlgorithmUnavailable& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    bool ok = r.value.is_finite();
    if (json) {
      nlohmann::json j;
      j["fn"] = to_string(fn);
      j["algo"] = to_string(r.algo);
      j["bits"] = p;
      j["re"] = to_string(r.value.re, out_digits, rad_digits);
      j["im"] = to_string(r.value.im, out_digits, rad_digits);
      j["note"] = r.note;
      j["ok"] = ok;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_string(r.value, out_digits, rad_digits) << "\n";
    }
    if (!ok) {
      std::cerr << "error: " << (r.note.empty() ? "result is indeterminate" : r.note) << "\n";
      return 1;
    }
    return 0;
  }

  if (bench->parsed()) {
    if (table == "stirling-sum") {
      apgtool::bench_stirling_sum(bench_digits.empty() ? std::vector<long>{100, 1000, 10000} : bench_digits, csv,
                                  std::cout);
    } else if (table == "spouge-error") {
      apgtool::bench_spouge_error(bench_r.empty() ? std::vector<long>{10, 100, 1000} : bench_r, csv, std::cout);
    } else if (table == "taylor-coeffs") {
      apgtool::bench_taylor_coeffs(bench_n.empty() ? std::vector<long>{1, 10, 100, 1000, 10000, 100000} : bench_n,
                                   csv, std::cout);
    } else if (table == "timings") {
      apgtool::bench_timings(bench_digits.empty() ? std::vector<long>{10, 30, 100, 300, 1000, 3000} : bench_digits,
                             csv, std::cout);
    } else if (table == "hyper-alpha") {
      apgtool::bench_hyper_alpha(bench_digits.empty() ? std::vector<long>{1000, 3000} : bench_digits, csv,
                                 std::cout);
    } else {
      return exit_usage("unknown table: " + table);
    }
    return 0;
  }

  if (bern->parsed()) {
    if (format != "json" && format != "text") return exit_usage("unknown format: " + format);
    std::map<unsigned long, mpq_class> got;
    bernoulli_batch(count, [&](unsigned long n, const mpq_class& b) {
      got.emplace(n, b);
      return true;
    });
    for (const auto& [n, b] : got) {
      if (format == "json")
        std::cout << nlohmann::json{{"n", n},
                                    {"num", b.get_num().get_str()},
                                    {"den", b.get_den().get_str()},
                                    {"b", b.get_str()}}
                         .dump()
                  << "\n";
      else
        std::cout << "B_" << n << " = " << b.get_str() << "\n";
    }
    return 0;
  }

  if (self->parsed()) {
    SelftestReport rep = run_selftest(slow, [](const std::string& line) { std::cout << line << std::endl; });
    std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
    return rep.failed == 0 ? 0 : 1;
  }

  if (tt->parsed()) {
    const TaylorTable& t = shipped_taylor_table();
    std::cout << "N = " << t.N << ", precision = " << t.prec_bits << " bits\n";
    for (long i = 0; i < dump && static_cast<size_t>(i) < t.N; i++)
      std::cout << "a_" << i + 1 << " = " << to_string(t.coeffs[static_cast<size_t>(i)], 25) << "\n";
    if (verify) {
      size_t n = std::min<size_t>(t.N, 64);
      auto ref = rgamma_coeffs_recurrence(n, Precision(t.prec_bits));
      for (size_t i = 0; i < n; i++)
        if (!overlaps(ref[i], t.coeffs[i])) {
          std::cout << "mismatch at a_" << i + 1 << "\n";
          return 1;
        }
      std::cout << "first " << n << " coefficients agree with the recurrence\n";
    }
    return 0;
  }
  return 2;
}
