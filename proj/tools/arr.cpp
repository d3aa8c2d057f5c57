#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arrlog/json_io.hpp"

namespace {

using namespace arrlog;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

unsigned max_degree() {
  if (const char* env = std::getenv("ARR_MAX_DEGREE")) {
    long v = std::atol(env);
    if (v >= 0) return unsigned(v);
  }
  return 4;
}

void print_analysis(const AnalysisReport& r, const Arrangement& a) {
  std::cout << "n = " << r.n << ", k = " << r.k << ", rank = " << r.rank
            << (r.essential ? " (essential)" : " (not essential)") << "\n";
  if (r.gates) {
    std::cout << "dim D1 = " << r.gates->dim_d1 << ", dim D2 = " << r.gates->dim_d2
              << ", dim T = " << r.gates->dim_t << "\n";
    std::cout << "minimal quadratic derivation: " << (r.gates->derivation ? "yes" : "no") << "\n";
    if (r.gates->derivation) {
      std::cout << "  theta = (";
      for (size_t i = 0; i < a.k(); ++i)
        std::cout << (i ? ", " : "") << r.gates->derivation->components[i].to_string(a.var_names());
      std::cout << ")\n";
    }
  }
  if (r.decomposition) {
    std::cout << "decomposes into " << r.decomposition->e1 << " parts:";
    for (const auto& part : r.decomposition->parts) {
      std::cout << " {";
      for (size_t i = 0; i < part.hyperplanes.size(); ++i)
        std::cout << (i ? "," : "") << part.hyperplanes[i] + 1;
      std::cout << "}";
    }
    std::cout << "\n";
  } else if (r.essential) {
    std::cout << "irreducible (dim D1 = 1)\n";
  }
  std::cout << "classification: " << to_string(r.classification.tag);
  if (!r.classification.t_values.empty()) {
    std::cout << ", t = {";
    for (size_t i = 0; i < r.classification.t_values.size(); ++i)
      std::cout << (i ? ", " : "") << to_string(r.classification.t_values[i]);
    std::cout << "}";
  }
  if (!r.classification.note.empty()) std::cout << " (" << r.classification.note << ")";
  std::cout << "\n";
  if (r.membership)
    std::cout << "membership check (dual points on the quadratic ideals): "
              << (r.membership->overall_pass ? "pass" : "FAIL") << "\n";
  if (r.syzygy_ok) std::cout << "syzygy identity: " << (*r.syzygy_ok ? "pass" : "FAIL") << "\n";
  if (r.cubic)
    std::cout << "singular locus (" << r.cubic->point_count
              << " points) lies on a cubic: " << (r.cubic->cubic_exists ? "yes" : "no")
              << " (evaluation rank " << r.cubic->eval_rank << ")\n";
}

int exit_code_for(const AnalysisReport& r) {
  bool inconsistent = r.classification.tag == ClassTag::TheoremViolation ||
                      (r.membership && !r.membership->overall_pass) ||
                      (r.syzygy_ok && !*r.syzygy_ok);
  return inconsistent ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of hyperplane arrangements through low-degree logarithmic derivations"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  unsigned degree = 1;

  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", file, "arrangement file (text or JSON)")->required();
    cmd->add_flag("--json", as_json, "emit JSON");
    return cmd;
  };

  CLI::App* analyze_cmd = add_file_cmd("analyze", "full report: dims, decomposition, classification, membership, cubic");
  CLI::App* deriv_cmd = add_file_cmd("derivations", "basis of the degree-d logarithmic derivations");
  deriv_cmd->add_option("--degree", degree, "derivation degree")->required();
  CLI::App* decompose_cmd = add_file_cmd("decompose", "direct product decomposition from linear derivations");
  CLI::App* classify_cmd = add_file_cmd("classify", "Type1/Type2/Type3 classification of rank-3 arrangements");
  CLI::App* cubic_cmd = add_file_cmd("cubic", "is the singular locus on a cubic curve");

  CLI::App* search_cmd = app.add_subcommand("search", "random search harness over small arrangements");
  SearchConfig cfg;
  std::string out_path;
  search_cmd->add_option("--n-min", cfg.n_min, "minimum number of lines")->capture_default_str();
  search_cmd->add_option("--n-max", cfg.n_max, "maximum number of lines")->capture_default_str();
  search_cmd->add_option("--bound", cfg.bound, "coefficient bound B")->capture_default_str();
  search_cmd->add_option("--count", cfg.count, "number of samples")->required();
  search_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  search_cmd->add_option("--out", out_path, "JSONL catalog path");
  search_cmd->add_flag("--timings", cfg.timings, "include per-record timings in the catalog");
  search_cmd->add_flag("!--allow-nonessential", cfg.require_essential, "keep non-essential samples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (search_cmd->parsed()) {
      validate(cfg);
      std::ofstream out;
      if (!out_path.empty()) {
        out.open(out_path);
        if (!out) throw ValidationError("cannot open catalog for writing: " + out_path);
      }
      SearchSummary summary = run_search(cfg, [&](const std::string& line) {
        if (out.is_open()) out << line << "\n";
      });
      std::cout << format_summary(summary);
      return summary.theorem_violations > 0 ? 2 : 0;
    }

    Arrangement a = Arrangement::parse(slurp(file));

    if (analyze_cmd->parsed()) {
      AnalysisReport r = analyze(a);
      if (as_json)
        std::cout << analysis_json(r, a) << "\n";
      else
        print_analysis(r, a);
      return exit_code_for(r);
    }
    if (deriv_cmd->parsed()) {
      if (degree > max_degree())
        throw ValidationError("degree exceeds the cap (" + std::to_string(max_degree()) +
                              "); raise ARR_MAX_DEGREE to override");
      DerivationSpace space = derivation_space(a, degree);
      if (as_json) {
        std::cout << derivation_space_json(a, space) << "\n";
      } else {
        std::cout << "dim = " << space.dim() << "\n";
        for (const Derivation& th : space.basis) {
          std::cout << "  (";
          for (size_t i = 0; i < a.k(); ++i)
            std::cout << (i ? ", " : "") << th.components[i].to_string(a.var_names());
          std::cout << ")\n";
        }
      }
      return 0;
    }
    if (decompose_cmd->parsed()) {
      auto d = decompose(a);
      if (as_json) {
        std::cout << (d ? decomposition_json(*d) : std::string("null")) << "\n";
      } else if (!d) {
        std::cout << "irreducible (dim D1 = 1)\n";
      } else {
        std::cout << "e1 = " << d->e1 << "\n";
        for (const auto& part : d->parts) {
          std::cout << "  eigenvalue " << to_string(part.eigenvalue) << ": forms {";
          for (size_t i = 0; i < part.hyperplanes.size(); ++i)
            std::cout << (i ? "," : "") << part.hyperplanes[i] + 1;
          std::cout << "}\n";
        }
      }
      return 0;
    }
    if (classify_cmd->parsed()) {
      Classification c = classify(a);
      if (as_json) {
        std::cout << classification_json(c) << "\n";
      } else {
        std::cout << to_string(c.tag);
        if (!c.t_values.empty()) {
          std::cout << " t = {";
          for (size_t i = 0; i < c.t_values.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(c.t_values[i]);
          std::cout << "}";
        }
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << "\n";
      }
      return c.tag == ClassTag::TheoremViolation ? 2 : 0;
    }
    if (cubic_cmd->parsed()) {
      CubicReport r = cubic_through_singular_locus(a);
      if (as_json) {
        std::cout << cubic_json(r, a.var_names()) << "\n";
      } else {
        std::cout << r.point_count << " singular points, evaluation rank " << r.eval_rank
                  << ", cubic exists: " << (r.cubic_exists ? "yes" : "no") << "\n";
        if (r.witness) std::cout << "  witness: " << r.witness->to_string(a.var_names()) << "\n";
      }
      return 0;
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
