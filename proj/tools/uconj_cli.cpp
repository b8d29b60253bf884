// Command-line front end: root enumerations, symbolic classification with
// class-count polynomials, brute-force enumeration, verification against the
// published tables, and the family-table report.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "uconj/analyzer.hpp"
#include "uconj/brute.hpp"
#include "uconj/golden.hpp"
#include "uconj/report.hpp"
#include "uconj/verify.hpp"

using namespace uconj;

namespace {

RootSystem parse_system(const std::string& type, int rank) {
  if (type.size() != 1) throw CLI::ValidationError("type must be one letter (A, B, C, D or G)");
  return build_root_system(type[0], rank);
}

int cmd_roots(const std::string& type, int rank) {
  std::cout << emit_roots_table(parse_system(type, rank));
  return 0;
}

int cmd_classify(const std::string& type, int rank, uint32_t p, bool analyze,
                 const std::string& json_path) {
  auto rs = parse_system(type, rank);
  auto ta = analyze_type(rs, p);
  std::string json = classify_report_json(ta, analyze);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw CLI::ValidationError("cannot open " + json_path);
    out << json << "\n";
  } else {
    std::cout << json << "\n";
  }
  if (analyze) {
    if (ta.any_manual) {
      std::cerr << "warning: manual families present; no total computed\n";
      return 1;
    }
    std::cerr << "k(U) = " << ta.k_poly.str() << "\n";
  }
  return 0;
}

int cmd_bruteforce(const std::string& type, int rank, uint32_t q, bool profile) {
  auto rs = parse_system(type, rank);
  uint32_t p = 0, k = 0;
  for (uint32_t cand = 2; cand <= q; ++cand) {
    if (!is_prime_u32(cand)) continue;
    uint64_t pw = 1;
    uint32_t kk = 0;
    while (pw < q) {
      pw *= cand;
      ++kk;
    }
    if (pw == q) {
      p = cand;
      k = kk;
      break;
    }
  }
  if (!p) throw CLI::ValidationError("q must be a prime power");
  FqField f(p, k);
  auto t0 = std::chrono::steady_clock::now();
  auto inv = count_classes(rs, f);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << rs.name() << " over F_" << q << ": " << inv.total_classes()
            << " conjugacy classes (|U| = " << inv.group_order << ")\n";
  std::cout << "centralizer order histogram:\n";
  for (auto& [cent, n] : inv.centralizer_histogram)
    std::cout << "  |C| = " << cent << ": " << n << " classes\n";
  if (profile) std::cout << "elapsed: " << dt << "s\n";
  return 0;
}

int cmd_verify(const std::string& type, int rank, uint32_t p, const std::string& qlist) {
  auto rs = parse_system(type, rank);
  std::vector<uint32_t> qs;
  std::stringstream ss(qlist);
  for (std::string tok; std::getline(ss, tok, ',');) qs.push_back(uint32_t(std::stoul(tok)));
  if (qs.empty()) throw CLI::ValidationError("--q needs at least one value");

  auto tab_report = verify_tables(rs, p, qs);
  std::cout << "table check: " << tab_report.summary() << "\n";
  bool ok = tab_report.ok;
  auto ta = analyze_type(rs, p);
  for (uint32_t q : qs) {
    uint64_t order = 1;
    bool small = true;
    for (int i = 0; i < rs.nroots(); ++i) {
      order *= q;
      if (order > (uint64_t(1) << 22)) small = false;
    }
    if (!small) continue;
    uint32_t k = 0;
    uint64_t pw = 1;
    while (pw < q) {
      pw *= p;
      ++k;
    }
    FqField f(p, k);
    auto fam_report = verify_families(rs, ta, f);
    std::cout << "family check q=" << q << ": " << fam_report.summary() << "\n";
    ok = ok && fam_report.ok;
  }
  return ok ? 0 : 1;
}

int cmd_tables(const std::string& type) {
  if (type.empty()) {
    std::cout << emit_paper_tables();
  } else {
    int rank = type == "G" ? 2 : 3;
    if (type == "B2") {
      std::cout << emit_paper_table('B', 2);
    } else {
      std::cout << emit_paper_table(type[0], rank);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy classes of maximal unipotent subgroups of Chevalley groups"};
  app.require_subcommand(1);

  std::string type, json_path, qlist, ttype;
  int rank = 2;
  uint32_t p = 2, q = 2;
  bool analyze = false, profile = false;

  auto* roots = app.add_subcommand("roots", "print the positive-root enumeration");
  roots->add_option("type", type)->required();
  roots->add_option("rank", rank)->required();

  auto* classify = app.add_subcommand("classify", "symbolic classification (JSON)");
  classify->add_option("type", type)->required();
  classify->add_option("rank", rank)->required();
  classify->add_option("p", p)->required();
  classify->add_flag("--analyze", analyze, "add per-family counts and k(U)");
  classify->add_option("--json", json_path, "write JSON to a file");

  auto* brute = app.add_subcommand("bruteforce", "enumerate conjugacy classes of U(q)");
  brute->add_option("type", type)->required();
  brute->add_option("rank", rank)->required();
  brute->add_option("q", q)->required();
  brute->add_flag("--profile", profile);

  auto* verify = app.add_subcommand("verify", "check published tables and families");
  verify->add_option("type", type)->required();
  verify->add_option("rank", rank)->required();
  verify->add_option("p", p)->required();
  verify->add_option("--q", qlist, "comma-separated q list")->required();

  auto* tables = app.add_subcommand("tables", "family tables in the published layout");
  tables->add_option("--type", ttype, "restrict to one type (B2, G, B, C)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(type, rank);
    if (classify->parsed()) return cmd_classify(type, rank, p, analyze, json_path);
    if (brute->parsed()) return cmd_bruteforce(type, rank, q, profile);
    if (verify->parsed()) return cmd_verify(type, rank, p, qlist);
    if (tables->parsed()) return cmd_tables(ttype);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
