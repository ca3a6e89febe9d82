// Command-line front end: reads instance files, runs one computation per
// document, prints JSON reports (or instance files for `corpus`).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "residua/residua.hpp"

namespace {

using namespace residua;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotEqual = 2;

struct Options {
  std::string command;
  std::string theorem;
  std::string family;
  std::size_t count = 0;
  std::string file;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> field;
  std::size_t max_steps = 200000;
  std::string out;
  unsigned jobs = 1;
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class F>
ReportDocument run_on_instance(const Options& opt, const InstanceFile& doc, const F& field) {
  auto inst = build_instance(doc, field, opt.seed);
  ReportDocument report;
  report.command = opt.command;
  report.seed = inst.seed;
  report.instance = summarize(inst);
  const auto a = inst.a();
  if (opt.command == "verify") {
    auto theorem = parse_theorem(opt.theorem);
    if (!theorem) throw InvalidArgument("unknown theorem '" + opt.theorem + "'");
    auto r = verify(*theorem, inst);
    report = make_report(inst, r);
  } else if (opt.command == "gb") {
    report.lhs = basis_strings(inst.I);
  } else if (opt.command == "colon") {
    report.lhs = basis_strings(colon(a, inst.I));
  } else if (opt.command == "fitt0") {
    report.lhs = basis_strings(fitt0_quotient(inst.I, a));
  } else if (opt.command == "kitt") {
    report.lhs = basis_strings(kitt(a, inst.I));
  }
  return report;
}

ReportDocument run_document(const Options& opt, InstanceFile doc) {
  if (opt.field) doc.field = FieldSpec::parse(*opt.field);
  if (opt.seed) doc.seed = *opt.seed;
  ScopedStepLimit limit(opt.max_steps);
  ReportDocument report = doc.field.kind == FieldSpec::Kind::rationals
                              ? run_on_instance(opt, doc, RationalField())
                              : run_on_instance(opt, doc, PrimeField(doc.field.characteristic));
  report.input_hash = input_hash(format_instance(doc));
  return report;
}

/// Runs every document, `jobs` at a time; results keep document order.
std::vector<ReportDocument> run_all(const Options& opt, const std::vector<InstanceFile>& docs) {
  std::vector<std::optional<ReportDocument>> results(docs.size());
  std::vector<std::string> errors(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < docs.size(); k = next++) {
      try {
        results[k] = run_document(opt, docs[k]);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(docs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<ReportDocument> out;
  for (std::size_t k = 0; k < docs.size(); ++k) {
    if (!errors[k].empty()) {
      throw Error(docs.size() > 1 ? "document " + std::to_string(k + 1) + ": " + errors[k] : errors[k]);
    }
    out.push_back(std::move(*results[k]));
  }
  return out;
}

std::string run_corpus(const Options& opt) {
  if (opt.count == 0) throw InvalidArgument("corpus count must be positive");
  const auto spec = FieldSpec::parse(opt.field.value_or("GF(32003)"));
  const CorpusOptions copt{opt.min_vars, opt.max_vars, 20};
  const std::uint64_t seed = opt.seed.value_or(0);
  std::vector<InstanceFile> docs;
  auto collect = [&](const auto& field) {
    ScopedStepLimit limit(opt.max_steps);
    for (const auto& inst : generate_corpus(field, opt.family, opt.count, seed, copt)) {
      docs.push_back(to_instance_file(inst));
    }
  };
  if (spec.kind == FieldSpec::Kind::rationals) {
    collect(RationalField());
  } else {
    collect(PrimeField(spec.characteristic));
  }
  return format_instance_documents(docs);
}

int execute(const Options& opt) {
  std::string output;
  int code = kExitOk;
  if (opt.command == "corpus") {
    output = run_corpus(opt);
  } else {
    auto docs = parse_instance_documents(read_file(opt.file));
    if (docs.empty()) throw InvalidArgument("no instance in '" + opt.file + "'");
    auto reports = run_all(opt, docs);
    for (const auto& r : reports) {
      if (r.verdict && *r.verdict != verdict_name(Verdict::equal)) code = kExitNotEqual;
    }
    nlohmann::ordered_json j;
    if (reports.size() == 1) {
      j = to_json(reports.front());
    } else {
      j = nlohmann::ordered_json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
    }
    output = j.dump(2) + "\n";
  }
  if (opt.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + opt.out + "'");
    out << output;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual intersections of homogeneous ideals", "residua"};
  app.set_version_flag("--version", std::string(residua::kVersion));
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Seed for random choices (overrides the file)");
    sub->add_option("--field", opt.field, "Coefficient field: q for rationals, pP for GF(P)");
    sub->add_option("--max-steps", opt.max_steps, "S-pair budget per Groebner basis (0 = unlimited)")
        ->capture_default_str();
    sub->add_option("--out", opt.out, "Write output to this path instead of stdout");
  };
  auto add_file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Instance file ('-' for stdin)")->required();
    sub->add_option("--jobs", opt.jobs, "Documents processed in parallel")->check(CLI::Range(1U, 256U));
    add_common(sub);
    return sub;
  };

  add_file_command("gb", "Reduced Groebner basis of I");
  add_file_command("colon", "The colon ideal a : I");
  add_file_command("fitt0", "Fitt_0(I/a)");
  add_file_command("kitt", "The disguised residual intersection Kitt(a, I)");
  auto* verify_cmd = app.add_subcommand("verify", "Compare a : I with the formula of a theorem");
  verify_cmd->add_option("theorem", opt.theorem,
                         "thm25, cor31, cor32, cor33, thm34, cor35, thm47 or kitt-eq")
      ->required();
  verify_cmd->add_option("file", opt.file, "Instance file ('-' for stdin)")->required();
  verify_cmd->add_option("--jobs", opt.jobs, "Documents verified in parallel")->check(CLI::Range(1U, 256U));
  add_common(verify_cmd);
  auto* corpus_cmd = app.add_subcommand("corpus", "Generate seeded instances of a family");
  corpus_cmd->add_option("family", opt.family, "ci, hb2, aci or power")->required();
  corpus_cmd->add_option("count", opt.count, "Number of instances")->required();
  corpus_cmd->add_option("--min-vars", opt.min_vars, "Fewest variables (ci family)")->capture_default_str();
  corpus_cmd->add_option("--max-vars", opt.max_vars, "Most variables (ci family)")->capture_default_str();
  add_common(corpus_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    return execute(opt);
  } catch (const std::exception& e) {
    std::cerr << "residua: " << e.what() << '\n';
    return kExitError;
  }
}
