// phec-verify: runs verification suites against an instance and writes a
// deterministic JSON report.  Exit code 0 iff no check was refuted.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phec/error.hpp"
#include "phec/instance.hpp"
#include "phec/suites.hpp"

namespace {

std::vector<phec::Int> parse_qspec(const std::string& s) {
  std::vector<phec::Int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.emplace_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.emplace_back(cur);
  return out;
}

std::vector<int> parse_levi(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!cur.empty()) {
      out.push_back(std::stoi(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

std::shared_ptr<const phec::Instance> resolve_instance(
    const std::string& name, const std::string& spec_path) {
  if (!name.empty() && !spec_path.empty())
    throw phec::Error("pass either --instance or --spec, not both");
  if (!name.empty()) return phec::make_instance(name);
  if (!spec_path.empty()) return phec::load_instance_toml(spec_path);
  throw phec::Error("an instance is required: --instance <name> or --spec <file>");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw phec::Error("cannot open '" + path + "' for writing");
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for pro-p Iwahori-Hecke algebra instances"};
  app.require_subcommand(0, 1);

  // `phec-verify --suite ...` acts like `phec-verify verify --suite ...`
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args[0].rfind("-", 0) == 0 && args[0] != "-h" &&
      args[0] != "--help")
    args.insert(args.begin(), "verify");

  auto* list = app.add_subcommand("list", "list suite ids in stable order");
  bool list_all = false;
  list->add_flag("--all", list_all, "include suites not yet implemented");

  auto* desc = app.add_subcommand("describe", "describe one suite");
  std::string desc_id;
  desc->add_option("suite", desc_id, "suite id")->required();

  auto* verify = app.add_subcommand("verify", "run one suite");
  std::string suite_id, inst_name, spec_path, out_path, md_path, qspec_s, levi_s;
  std::uint64_t seed = 1;
  int max_length = 6, samples = 200, omega = 2;
  verify->add_option("--suite", suite_id, "suite id")->required();
  verify->add_option("--instance", inst_name, "builtin instance name");
  verify->add_option("--spec", spec_path, "instance spec (TOML)");
  verify->add_option("--max-length", max_length, "exhaustive length budget");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--samples", samples, "randomized sample count");
  verify->add_option("--omega-budget", omega,
                     "box bound on lattice/length-zero directions");
  verify->add_option("--levi", levi_s, "parabolic subset, e.g. 0,1");
  verify->add_option("--q", qspec_s, "specialize q-classes, e.g. 3 or 3,5");
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_option("--markdown", md_path, "also write a Markdown report");

  auto* compute = app.add_subcommand("compute", "ad-hoc computations");
  compute->require_subcommand(1);
  auto* product = compute->add_subcommand("product", "multiply two elements");
  std::string c_inst, c_spec, c_q, c_levi, lhs_s, rhs_s;
  bool c_star = false;
  product->add_option("--instance", c_inst, "builtin instance name");
  product->add_option("--spec", c_spec, "instance spec (TOML)");
  product->add_option("--q", c_q, "specialize q-classes");
  product->add_option("--levi", c_levi, "compute inside this Levi algebra");
  product->add_flag("--star", c_star, "print the result in the Tstar basis");
  product->add_option("lhs", lhs_s, "left factor, e.g. 'T[s1] + q*T[e]'")
      ->required();
  product->add_option("rhs", rhs_s, "right factor")->required();
  for (const char* name : {"induce", "IH"}) {
    auto* sub = compute->add_subcommand(
        name, "planned: requires the module layer");
    sub->callback([name]() {
      throw phec::Error(std::string("compute ") + name +
                        " is not implemented yet");
    });
  }

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*list) {
      for (const std::string& id : phec::suite_ids()) {
        if (!list_all && !phec::suite_implemented(id)) continue;
        std::cout << id;
        if (!phec::suite_implemented(id)) std::cout << "  (planned)";
        std::cout << "\n";
      }
      return 0;
    }
    if (*desc) {
      std::cout << desc_id << (phec::suite_implemented(desc_id) ? "" : "  (planned)")
                << "\n\n"
                << phec::suite_describe(desc_id) << "\n";
      return 0;
    }
    if (*product) {
      auto inst = resolve_instance(c_inst, c_spec);
      std::vector<phec::Int> qv = parse_qspec(c_q);
      phec::HeckeAlg A =
          c_levi.empty()
              ? (qv.empty() ? phec::HeckeAlg::ambient(inst)
                            : phec::HeckeAlg::ambient(inst, phec::Ring::integers(), qv))
              : (qv.empty()
                     ? phec::HeckeAlg::levi(inst, parse_levi(c_levi))
                     : phec::HeckeAlg::levi(inst, parse_levi(c_levi),
                                            phec::Ring::integers(), qv));
      phec::HElem out = A.mul(A.parse(lhs_s), A.parse(rhs_s));
      if (c_star) out = A.to_basis(out, phec::Basis::Star);
      std::cout << A.str(out) << "\n";
      return 0;
    }
    if (*verify) {
      phec::SuiteParams p;
      p.inst = resolve_instance(inst_name, spec_path);
      p.seed = seed;
      p.max_length = max_length;
      p.samples = samples;
      p.omega_budget = omega;
      p.qspec = parse_qspec(qspec_s);
      if (verify->count("--levi") > 0) {
        p.levi = parse_levi(levi_s);  // "--levi \"\"" selects the empty set
        p.levi_set = true;
      }
      phec::Report rep = phec::run_suite(suite_id, p);
      const std::string json = rep.to_json();
      if (out_path.empty()) {
        std::cout << json;
      } else {
        write_file(out_path, json);
        std::cout << "suite " << rep.suite << " on " << rep.instance_name
                  << ": " << rep.count(phec::Status::Proved) << " proved, "
                  << rep.count(phec::Status::AtBudget) << " at budget, "
                  << rep.count(phec::Status::Refuted) << " refuted, "
                  << rep.count(phec::Status::Inconclusive)
                  << " inconclusive -> " << out_path << "\n";
      }
      if (!md_path.empty()) write_file(md_path, rep.to_markdown());
      return rep.exit_code();
    }
    std::cout << app.help();
    return 0;
  } catch (const phec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
