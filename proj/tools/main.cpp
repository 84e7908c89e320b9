// Command-line surface for the k-Schur library: core/partition
// conversions, h-expansions, Pieri products, tableau counts and the
// verification suites.  Exit codes: 0 success, 1 verification or
// consistency failure, 2 usage or parse error.
#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kschur/core.hpp"
#include "kschur/json_io.hpp"
#include "kschur/kbernstein.hpp"
#include "kschur/kpieri.hpp"
#include "kschur/ktableau.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"
#include "kschur/verify.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json partition_json(const kschur::Partition& p) {
  return kschur::partition_to_json(p);
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_lincomb(const kschur::LinComb& f, const std::string& format) {
  if (format == "json")
    print_json(kschur::lincomb_to_json(f));
  else
    std::cout << f.to_text() << "\n";
}

int cmd_core(const std::string& direction, int k, const std::string& text,
             const std::string& format) {
  const kschur::Partition input = kschur::Partition::parse(text);
  kschur::Partition output;
  if (direction == "to-core") {
    output = kschur::Core::from_bounded(input, k).shape();
  } else {
    output = kschur::Core(input, k).to_bounded();
  }
  if (format == "json") {
    ordered_json j;
    j["direction"] = direction;
    j["k"] = k;
    j["input"] = partition_json(input);
    j["output"] = partition_json(output);
    print_json(j);
  } else {
    std::cout << output.to_text() << "\n";
  }
  return 0;
}

kschur::LinComb expand_with(const std::string& method,
                            const kschur::Partition& lambda, int k,
                            kschur::KMatrixCache* cache) {
  if (method == "corollary") return kschur::h_expansion_via_strips(lambda, k);
  if (method == "oracle") return kschur::h_expansion_via_kostka(lambda, k, cache);
  return kschur::kschur_by_recursion(lambda, k);
}

int cmd_expand(int k, const std::string& lambda_text,
               const std::string& method, bool check,
               const std::string& cache_path, const std::string& format) {
  const kschur::Partition lambda = kschur::Partition::parse(lambda_text);
  std::unique_ptr<kschur::KMatrixCache> cache;
  if (!cache_path.empty())
    cache = std::make_unique<kschur::KMatrixCache>(cache_path);
  print_lincomb(expand_with(method, lambda, k, cache.get()), format);
  if (!check) return 0;
  const kschur::LinComb corollary = expand_with("corollary", lambda, k, nullptr);
  const kschur::LinComb oracle = expand_with("oracle", lambda, k, cache.get());
  const kschur::LinComb recursion = expand_with("recursion", lambda, k, nullptr);
  bool ok = true;
  if (!(corollary == oracle)) {
    std::cerr << "check failed: corollary and oracle expansions differ\n"
              << "  corollary: " << corollary.to_text() << "\n"
              << "  oracle:    " << oracle.to_text() << "\n";
    ok = false;
  }
  if (!(recursion ==
        kschur::LinComb::unit(kschur::Basis::kschur, lambda, k))) {
    std::cerr << "check failed: recursion is not the unit vector: "
              << recursion.to_text() << "\n";
    ok = false;
  }
  return ok ? 0 : 1;
}

int cmd_pieri(int k, int ell, const std::string& lambda_text,
              const std::string& method, const std::string& format) {
  const kschur::Partition lambda = kschur::Partition::parse(lambda_text);
  const kschur::LinComb product =
      method == "strips" ? kschur::pieri_by_strips(lambda, ell, k)
                         : kschur::multiply_h(ell, lambda, k);
  print_lincomb(product, format);
  return 0;
}

int cmd_tableaux(int k, const std::string& shape_text,
                 const std::vector<int>& weight, bool count_only,
                 const std::string& format) {
  const kschur::Core shape(kschur::Partition::parse(shape_text), k);
  const kschur::Partition mu = shape.to_bounded();
  if (count_only && format != "json") {
    std::cout << kschur::k_kostka(mu, weight, k) << "\n";
    return 0;
  }
  std::vector<kschur::KTableau> tableaux;
  std::int64_t count = 0;
  if (count_only) {
    count = kschur::k_kostka(mu, weight, k);
  } else {
    tableaux = kschur::enumerate_k_tableaux(mu, weight, k);
    count = static_cast<std::int64_t>(tableaux.size());
  }
  if (format == "json") {
    ordered_json j;
    j["k"] = k;
    j["shape"] = partition_json(shape.shape());
    j["weight"] = weight;
    j["count"] = count;
    if (!count_only) {
      ordered_json list = ordered_json::array();
      for (const kschur::KTableau& t : tableaux) list.push_back(t.rows);
      j["tableaux"] = list;
    }
    print_json(j);
  } else {
    std::cout << count << "\n";
    for (const kschur::KTableau& t : tableaux) {
      std::cout << "\n";
      for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row) {
        for (std::size_t i = 0; i < row->size(); ++i)
          std::cout << (i ? " " : "") << (*row)[i];
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int cmd_verify(int k, int max_degree, const std::string& suite, int jobs,
               const std::string& format) {
  std::vector<std::string> to_run;
  if (suite == "all") {
    for (const std::string& name : kschur::suite_names())
      if (name != "all") to_run.push_back(name);
  } else {
    to_run.push_back(suite);
  }
  bool all_passed = true;
  ordered_json reports = ordered_json::array();
  for (const std::string& name : to_run) {
    const kschur::SuiteReport report =
        kschur::run_suite(name, k, max_degree, jobs);
    all_passed = all_passed && report.passed();
    if (format == "json") {
      ordered_json j;
      j["suite"] = report.suite;
      j["k"] = report.k;
      j["max_degree"] = report.max_degree;
      j["checks"] = report.checks;
      j["failures"] = report.failures;
      j["messages"] = report.messages;
      reports.push_back(j);
    } else {
      std::cout << "suite=" << report.suite << " k=" << report.k
                << " max_degree=" << report.max_degree
                << " checks=" << report.checks
                << " failures=" << report.failures
                << " status=" << (report.passed() ? "pass" : "fail") << "\n";
    }
    for (const std::string& m : report.messages) std::cerr << m << "\n";
  }
  if (format == "json") print_json(reports);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-Schur function calculator at t = 1"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string format = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  // core to-core|to-partition --k K PARTITION
  {
    CLI::App* sub = app.add_subcommand(
        "core", "Convert between k-bounded partitions and (k+1)-cores");
    auto direction = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    sub->add_option("direction", *direction, "Conversion direction")
        ->required()
        ->check(CLI::IsMember({"to-core", "to-partition"}));
    sub->add_option("--k", *k, "Level k")->required()->check(CLI::PositiveNumber);
    sub->add_option("partition", *text, "Comma-separated parts")->required();
    add_format(sub);
    sub->callback(
        [&, direction, k, text] { exit_code = cmd_core(*direction, *k, *text, format); });
  }

  // expand --k K --lambda P [--method corollary|recursion|oracle] [--check]
  {
    CLI::App* sub = app.add_subcommand(
        "expand", "Expand a k-Schur function in the h basis");
    auto k = std::make_shared<int>(0);
    auto lambda = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("corollary");
    auto check = std::make_shared<bool>(false);
    auto cache = std::make_shared<std::string>();
    sub->add_option("--k", *k, "Level k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", *lambda, "k-bounded partition")->required();
    sub->add_option("--method", *method, "Expansion method")
        ->check(CLI::IsMember({"corollary", "recursion", "oracle"}))
        ->capture_default_str();
    sub->add_flag("--check", *check, "Cross-check all methods");
    sub->add_option("--cache", *cache, "Tableau-count cache file");
    add_format(sub);
    sub->callback([&, k, lambda, method, check, cache] {
      exit_code = cmd_expand(*k, *lambda, *method, *check, *cache, format);
    });
  }

  // pieri --k K --ell L --lambda P [--method subsets|strips]
  {
    CLI::App* sub = app.add_subcommand(
        "pieri", "Multiply a k-Schur function by a complete homogeneous h");
    auto k = std::make_shared<int>(0);
    auto ell = std::make_shared<int>(0);
    auto lambda = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("subsets");
    sub->add_option("--k", *k, "Level k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--ell", *ell, "Degree of h")->required();
    sub->add_option("--lambda", *lambda, "k-bounded partition")->required();
    sub->add_option("--method", *method, "Product rule formulation")
        ->check(CLI::IsMember({"subsets", "strips"}))
        ->capture_default_str();
    add_format(sub);
    sub->callback([&, k, ell, lambda, method] {
      exit_code = cmd_pieri(*k, *ell, *lambda, *method, format);
    });
  }

  // tableaux --k K --shape-core P --weight a,b,... [--count]
  {
    CLI::App* sub = app.add_subcommand(
        "tableaux", "Enumerate or count k-tableaux of a core shape");
    auto k = std::make_shared<int>(0);
    auto shape = std::make_shared<std::string>();
    auto weight = std::make_shared<std::vector<int>>();
    auto count = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "Level k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--shape-core", *shape, "Core shape, comma-separated")
        ->required();
    sub->add_option("--weight", *weight, "Letter multiplicities")
        ->required()
        ->delimiter(',');
    sub->add_flag("--count", *count, "Print only the number of tableaux");
    add_format(sub);
    sub->callback([&, k, shape, weight, count] {
      exit_code = cmd_tableaux(*k, *shape, *weight, *count, format);
    });
  }

  // verify --k K --max-degree N [--suite S] [--jobs J]
  {
    CLI::App* sub = app.add_subcommand(
        "verify", "Run consistency suites over all k-bounded partitions");
    auto k = std::make_shared<int>(0);
    auto max_degree = std::make_shared<int>(0);
    auto suite = std::make_shared<std::string>("all");
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--k", *k, "Level k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", *max_degree, "Largest degree to sweep")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--suite", *suite, "Suite to run")
        ->check(CLI::IsMember(kschur::suite_names()))
        ->capture_default_str();
    sub->add_option("--jobs", *jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(sub);
    sub->callback([&, k, max_degree, suite, jobs] {
      exit_code = cmd_verify(*k, *max_degree, *suite, *jobs, format);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
