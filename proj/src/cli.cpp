#include "hecke_lab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hecke_lab/classify.hpp"
#include "hecke_lab/default_suite.hpp"
#include "hecke_lab/errors.hpp"
#include "hecke_lab/hash.hpp"
#include "hecke_lab/mod_int.hpp"

namespace hecke_lab::cli {

namespace {

Json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t effective_p(const CaseSpec& spec, const RunOptions& options) {
  const std::int64_t p = options.p.value_or(spec.p.value_or(3));
  if (!is_prime(p)) fail(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
  return p;
}

Json envelope(const char* command, const Json& input, const RunOptions& options) {
  Json hashed{{"input", input}, {"exhaustive", options.exhaustive}};
  if (options.p) hashed["p"] = *options.p;
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"input_hash", hex64(fnv1a64(hashed.dump()))}};
}

/// Runs f(i) for i in [0, n) on a small pool; the seed only shuffles the
/// scheduling order, results land by index.
template <class F>
void parallel_for(std::size_t n, int threads, std::uint64_t seed, F f) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) f(order[k]);
  };
  const auto count = static_cast<std::size_t>(std::clamp<long>(threads, 1, static_cast<long>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct SuiteEntry {
  std::string name;
  Json case_json;
  Json expect;
};

std::vector<SuiteEntry> parse_suite(const Json& suite) {
  const Json* cases = &suite;
  if (suite.is_object()) {
    if (!suite.contains("cases")) fail(ErrorCode::InvalidInput, "suite object needs a \"cases\" array");
    cases = &suite["cases"];
  }
  if (!cases->is_array()) fail(ErrorCode::InvalidInput, "suite cases must be an array");
  std::vector<SuiteEntry> out;
  for (const auto& item : *cases) {
    if (!item.is_object()) fail(ErrorCode::InvalidInput, "suite entry must be an object");
    SuiteEntry e;
    e.case_json = item.contains("case") ? item["case"] : item;
    e.expect = item.value("expect", Json::object());
    e.name = item.value("name", std::string());
    if (e.name.empty()) e.name = e.case_json.dump();
    out.push_back(std::move(e));
  }
  return out;
}

Json verify_one(const SuiteEntry& entry, const RunOptions& options, bool& internal) {
  Json row{{"name", entry.name}, {"expect", entry.expect}};
  std::vector<std::string> reasons;
  Json observed = Json::object();
  try {
    const CaseSpec spec = parse_case(entry.case_json);
    row["case"] = spec.echo;
    const DatumPtr datum = build_case(spec);
    const KeyResult r = key_result_search(datum, {effective_p(spec, options), options.exhaustive});
    observed["verdict"] = to_string(r.verdict);
    observed["r"] = r.dimension;
    if (r.verdict != Verdict::ExcludedTypeA) {
      observed["supersingular"] = r.supersingular && r.supersingular->supersingular;
      observed["sampled"] = r.supersingular && r.supersingular->sampled;
      if (!r.relations_pass) reasons.push_back("module fails the relations");
      if (!r.supersingular || !r.supersingular->supersingular) reasons.push_back("reduction is not supersingular");
    }
    if (r.verdict == Verdict::ReflectionTwist) {
      std::set<std::vector<bool>> distinct;
      for (const auto& chi : r.components) distinct.insert(chi.q_nodes);
      observed["components"] = r.components.size();
      if (static_cast<int>(distinct.size()) != datum->num_nodes() ||
          static_cast<int>(r.components.size()) != datum->num_nodes())
        reasons.push_back("reduction does not split into |S| distinct characters");
      for (const auto& rep : r.component_reports)
        if (!rep.supersingular) reasons.push_back("a component character is not supersingular");
    }
  } catch (const Error& e) {
    observed["error"] = std::string(to_string(e.code()));
    observed["message"] = e.what();
    if (entry.expect.value("error", std::string()) != to_string(e.code())) internal = internal || e.is_internal();
  }
  if (entry.expect.contains("error")) {
    if (observed.value("error", std::string()) != entry.expect["error"])
      reasons.push_back("expected error " + entry.expect["error"].dump());
  } else if (observed.contains("error")) {
    reasons.push_back("unexpected error " + observed["error"].get<std::string>());
  }
  if (entry.expect.contains("verdict") && observed.value("verdict", std::string()) != entry.expect["verdict"])
    reasons.push_back("expected verdict " + entry.expect["verdict"].dump());
  if (entry.expect.contains("r") && (!observed.contains("r") || observed["r"] != entry.expect["r"]))
    reasons.push_back("expected r = " + entry.expect["r"].dump());
  row["observed"] = observed;
  row["pass"] = reasons.empty();
  row["reasons"] = reasons;
  return row;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace

CaseSpec parse_case(const Json& input) {
  const Json& j = input.is_object() && input.contains("case") ? input["case"] : input;
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "case must be a JSON object");
  CaseSpec spec;
  try {
    const auto type = j.at("type").get<std::string>();
    if (type.size() != 1) fail(ErrorCode::InvalidType, "type must be one letter, got '" + type + "'");
    spec.type = type[0];
    const std::int64_t rank = int_field(j, "rank");
    if (rank < 1 || rank > 64) fail(ErrorCode::InvalidRank, "rank " + std::to_string(rank) + " out of range");
    spec.rank = static_cast<int>(rank);
    if (j.contains("decoration")) {
      if (!j["decoration"].is_array()) fail(ErrorCode::InvalidInput, "decoration must be a list");
      for (const auto& d : j["decoration"]) {
        if (!d.is_number_integer()) fail(ErrorCode::InvalidInput, "decoration entries must be integers");
        spec.decoration.push_back(d.get<int>());
      }
    }
    Json lattice = j.value("lattice", Json("coweight"));
    if (lattice.is_string() && lattice == "coweight") {
      spec.lattice = LatticeChoice::coweight();
    } else if (lattice.is_string() && lattice == "coroot") {
      spec.lattice = LatticeChoice::coroot();
    } else if (lattice.is_array()) {
      spec.lattice = LatticeChoice::explicit_basis(lattice.get<IntMatrix>());
    } else {
      fail(ErrorCode::InvalidInput, "lattice must be \"coweight\", \"coroot\" or a list of rows");
    }
    if (j.contains("p")) {
      spec.p = int_field(j, "p");
      if (!is_prime(*spec.p)) fail(ErrorCode::InvalidInput, std::to_string(*spec.p) + " is not prime");
    }
    spec.echo = {{"type", type}, {"rank", spec.rank}, {"decoration", spec.decoration}, {"lattice", lattice}};
    if (spec.p) spec.echo["p"] = *spec.p;
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed case: ") + e.what());
  }
  return spec;
}

DatumPtr build_case(const CaseSpec& spec) {
  return build_root_datum(spec.type, spec.rank, spec.decoration, spec.lattice);
}

Json cmd_build(const CaseSpec& spec) { return datum_summary(*build_case(spec)); }

Json cmd_characters(const CaseSpec& spec, const RunOptions& options) {
  const DatumPtr datum = build_case(spec);
  const std::int64_t p = effective_p(spec, options);
  const bool adjoint = datum->is_coweight_lattice();
  Json generic = Json::array();
  std::size_t extending = 0;
  for (const auto& chi : enumerate_characters(datum, CharMode::Generic)) {
    Json row = to_json(*datum, chi);
    const bool ext = character_extends(*datum, chi);
    extending += ext;
    row["extends"] = ext;
    Json exts = Json::array();
    for (const auto& e : character_extensions(*datum, chi)) exts.push_back(e.omega_values);
    row["extensions"] = exts;
    row["discreteness"] = adjoint ? to_json(discreteness(*datum, chi)) : Json();
    generic.push_back(std::move(row));
  }
  Json modp = Json::array();
  for (const auto& chi : enumerate_characters(datum, CharMode::ModP)) {
    Json row = to_json(*datum, chi);
    row["relations"] = check_relations(character_module_mod_p(datum, chi, p)).ok ? "pass" : "fail";
    modp.push_back(std::move(row));
  }
  return {{"m", datum->num_classes()},
          {"nodes", datum->num_nodes()},
          {"p", p},
          {"counts", {{"generic", generic.size()}, {"mod_p", modp.size()}, {"extending", extending}}},
          {"generic", generic},
          {"mod_p", modp}};
}

Json cmd_classify(const CaseSpec& spec, const RunOptions& options) {
  const DatumPtr datum = build_case(spec);
  const KeyResult r = key_result_search(datum, {effective_p(spec, options), options.exhaustive});
  Json out{{"verdict", to_string(r.verdict)}, {"certificate", certificate(*datum, r)}};
  if (r.verdict == Verdict::Character1Dim || r.verdict == Verdict::Induced2Dim) out["r"] = r.dimension;
  return out;
}

VerifyOutcome cmd_verify(const Json& suite, const RunOptions& options) {
  const auto entries = parse_suite(suite);
  std::vector<Json> rows(entries.size());
  std::vector<char> internal(entries.size(), 0);
  parallel_for(entries.size(), options.threads, options.seed, [&](std::size_t i) {
    bool flag = false;
    rows[i] = verify_one(entries[i], options, flag);
    internal[i] = flag;
  });
  VerifyOutcome outcome;
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r["pass"].get<bool>();
  Json warnings = Json::array();
  if (entries.empty()) warnings.push_back("suite has no cases");
  outcome.report = {{"summary", {{"cases", entries.size()}, {"passed", passed}, {"failed", entries.size() - passed}}},
                    {"results", rows},
                    {"warnings", warnings}};
  if (passed != entries.size()) outcome.exit_code = 1;
  if (std::any_of(internal.begin(), internal.end(), [](char c) { return c != 0; })) outcome.exit_code = 3;
  return outcome;
}

const std::string& default_suite_text() {
  static const std::string text = kDefaultSuite;
  return text;
}

int default_threads() {
  if (const char* env = std::getenv("HECKE_LAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min<long>(n, 256));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended affine Hecke algebras: characters, discrete modules, supersingular reduction", kToolName};
  app.require_subcommand(1, 1);
  std::string case_file, suite_file, json_out;
  std::int64_t p = 0;
  std::uint64_t seed = RunOptions{}.seed;
  bool exhaustive = false;
  const std::pair<const char*, const char*> commands[] = {
      {"build", "summarize the root datum, lattice and Omega groups"},
      {"characters", "list characters, extension and discreteness verdicts"},
      {"classify", "find a discrete simple module with supersingular reduction"},
      {"verify", "check a suite against its expected verdicts"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* c = sub->add_option("--case", case_file, "case file (JSON)");
    auto* s = sub->add_option("--suite", suite_file, "suite file (JSON), or 'default' for the built-in suite");
    c->excludes(s);
    sub->add_option("--p", p, "prime for the reduction (default 3)");
    sub->add_option("--seed", seed, "seed for the scheduling order");
    sub->add_flag("--exhaustive", exhaustive, "check every generator orbit, also for E7 and E8");
    sub->add_option("--json", json_out, "write the report to this file");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  auto emit = [&](const Json& report) {
    const std::string text = report.dump(2) + "\n";
    if (json_out.empty()) {
      out << text;
      return;
    }
    std::ofstream file(json_out, std::ios::binary);
    file << text;
    if (!file) {
      out << error_json("InvalidInput", "cannot write " + json_out).dump(2) << "\n";
      return;
    }
    out << "report written to " << json_out << "\n";
  };
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  RunOptions options;
  if (p != 0) options.p = p;
  options.exhaustive = exhaustive;
  options.seed = seed;
  options.threads = default_threads();
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (options.p && !is_prime(*options.p)) fail(ErrorCode::InvalidInput, std::to_string(*options.p) + " is not prime");
    if (case_file.empty() && suite_file.empty()) fail(ErrorCode::InvalidInput, "one of --case or --suite is required");
    Json input;
    if (!case_file.empty()) {
      input = read_json_file(case_file);
    } else if (suite_file == "default") {
      input = Json::parse(default_suite_text());
    } else {
      input = read_json_file(suite_file);
    }
    Json report = envelope(command.c_str(), input, options);
    if (command == "verify") {
      const Json suite = case_file.empty() ? input : Json{{"cases", Json::array({input})}};
      VerifyOutcome v = cmd_verify(suite, options);
      report.update(v.report);
      for (const auto& w : v.report["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
      code = v.exit_code;
    } else if (!case_file.empty()) {
      const CaseSpec spec = parse_case(input);
      report["case"] = spec.echo;
      if (command == "build") report["result"] = cmd_build(spec);
      if (command == "characters") report["result"] = cmd_characters(spec, options);
      if (command == "classify") report["result"] = cmd_classify(spec, options);
    } else {
      // Same command on every case of a suite; errors are reported per case.
      const auto entries = parse_suite(input);
      std::vector<Json> rows(entries.size());
      std::vector<std::string> errors(entries.size());
      std::vector<int> codes(entries.size(), 0);
      parallel_for(entries.size(), options.threads, options.seed, [&](std::size_t i) {
        try {
          const CaseSpec spec = parse_case(entries[i].case_json);
          Json row{{"name", entries[i].name}, {"case", spec.echo}};
          if (command == "build") row["result"] = cmd_build(spec);
          if (command == "characters") row["result"] = cmd_characters(spec, options);
          if (command == "classify") row["result"] = cmd_classify(spec, options);
          rows[i] = std::move(row);
        } catch (const Error& e) {
          rows[i] = {{"name", entries[i].name}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
          codes[i] = e.is_internal() ? 3 : 2;
        }
      });
      report["results"] = rows;
      for (int c : codes) code = std::max(code, c);
      if (codes.empty()) err << "warning: suite has no cases\n";
    }
    emit(report);
  } catch (const Error& e) {
    emit(error_json(to_string(e.code()), e.what()));
    code = e.is_internal() ? 3 : 2;
  } catch (const Json::exception& e) {
    emit(error_json("InvalidInput", e.what()));
    code = 2;
  } catch (const std::exception& e) {
    emit(error_json("Internal", e.what()));
    code = 3;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing.precision(3);
  timing << std::fixed << secs;
  err << command << ": " << timing.str() << " s, " << options.threads << " thread(s)\n";
  return code;
}

}  // namespace hecke_lab::cli
