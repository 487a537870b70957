// Regenerates data/rgamma_taylor.txt. Not run by the build.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "apg/taylor.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compute the reciprocal gamma Taylor table"};
  size_t n = 536;
  long prec = 3456;
  std::string out = "rgamma_taylor.txt";
  app.add_option("-n,--count", n, "number of coefficients");
  app.add_option("-p,--prec", prec, "precision in bits");
  app.add_option("-o,--out", out, "output file");
  CLI11_PARSE(app, argc, argv);
  try {
    apg::TaylorTable t = apg::build_taylor_table(n, apg::Precision(prec));
    std::ofstream f(out);
    f << apg::serialize_taylor_table(t);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
