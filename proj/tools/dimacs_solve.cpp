// Minimal DIMACS front end for the built-in CDCL engine. Prints the usual
// competition-style "s ..." verdict plus "v ..." model lines, so it can
// serve as the external process backend in tests and cross-checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dfadec/sat/solver.hpp"

namespace {

struct Instance {
  std::size_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;
};

bool parse_dimacs(std::istream& in, Instance& inst) {
  std::string tok;
  std::vector<std::int32_t> current;
  bool have_header = false;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      std::size_t clauses = 0;
      if (!(in >> fmt >> inst.num_vars >> clauses) || fmt != "cnf") return false;
      have_header = true;
      continue;
    }
    std::int32_t lit;
    try {
      lit = std::stoi(tok);
    } catch (...) {
      return false;
    }
    if (lit == 0) {
      inst.clauses.push_back(current);
      current.clear();
    } else {
      current.push_back(lit);
    }
  }
  if (!current.empty()) inst.clauses.push_back(current);
  return have_header;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <file.cnf>\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  Instance inst;
  if (!parse_dimacs(in, inst)) {
    std::cerr << "malformed DIMACS input\n";
    return 1;
  }

  dfadec::sat::Solver solver(inst.num_vars);
  for (const auto& clause : inst.clauses) solver.add_clause(clause);

  switch (solver.solve()) {
    case dfadec::sat::Outcome::Sat: {
      std::cout << "s SATISFIABLE\n";
      std::cout << "v";
      for (std::size_t v = 1; v <= inst.num_vars; ++v)
        std::cout << ' ' << (solver.model()[v] ? static_cast<long>(v) : -static_cast<long>(v));
      std::cout << " 0\n";
      return 10;
    }
    case dfadec::sat::Outcome::Unsat:
      std::cout << "s UNSATISFIABLE\n";
      return 20;
    case dfadec::sat::Outcome::Timeout:
      std::cout << "s UNKNOWN\n";
      return 0;
  }
  return 0;
}
