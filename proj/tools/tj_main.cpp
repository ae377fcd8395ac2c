#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tj/gen.hpp"
#include "tj/io.hpp"
#include "tj/kernel.hpp"
#include "tj/solver.hpp"
#include "tj/vcdim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 64;
constexpr int kExitError = 70;

struct CommonOpts {
  std::string mode = "faithful";
  std::int64_t big_threshold = 0;
  std::int64_t indep_threshold = 0;
  bool certify = false;
  std::uint64_t state_budget = 5'000'000;
  double time_budget = 60.0;
  bool json_out = false;
  bool verify_ell = false;
};

tj::KernelConfig make_config(const CommonOpts& o) {
  tj::KernelConfig cfg;
  if (o.mode == "aggressive") {
    cfg.mode = tj::KernelMode::Aggressive;
    if (o.big_threshold <= 0 || o.indep_threshold <= 0)
      throw tj::GraphError("aggressive mode needs --big-threshold and --indep-threshold");
    cfg.big_threshold_override = o.big_threshold;
    cfg.indep_threshold_override = o.indep_threshold;
    cfg.certify = o.certify;
  } else if (o.mode != "faithful") {
    throw tj::GraphError("--mode must be faithful or aggressive");
  }
  return cfg;
}

int answer_exit(tj::Answer a) {
  switch (a) {
    case tj::Answer::Yes: return kExitYes;
    case tj::Answer::No: return kExitNo;
    default: return kExitUnknown;
  }
}

json result_record(const std::string& path, const tj::TjDecision& dec, double wall_ms,
                   std::size_t n_before, std::size_t n_after) {
  json rec;
  rec["instance"] = path;
  rec["method"] = tj::method_name(dec.method);
  rec["answer"] = tj::answer_name(dec.answer);
  rec["heuristic"] = dec.heuristic;
  rec["kernel"] = {{"n_before", n_before},
                   {"n_after", n_after},
                   {"steps", dec.kernel_trace.inner_steps},
                   {"classes_reduced", [&] {
                      int total = 0;
                      for (const auto& s : dec.kernel_trace.steps) total += s.classes_reduced;
                      return total;
                    }()}};
  rec["oracle"] = {{"states", dec.explored_states},
                   {"witness_len", dec.witness ? static_cast<int>(dec.witness->size()) : 0}};
  rec["wall_ms"] = wall_ms;
  return rec;
}

struct DecideResult {
  int exit_code;
  json record;
};

DecideResult decide_one(const std::string& path, const CommonOpts& opts, bool compare_oracle) {
  tj::Instance inst = tj::load_instance(path);
  if (opts.verify_ell && tj::contains_biclique(inst.graph, inst.ell))
    throw tj::GraphError(path + ": graph is not K_{ell,ell}-free");
  if (opts.mode == "faithful" && opts.verify_ell) inst.ell_certified = true;

  const tj::KernelConfig cfg = make_config(opts);
  tj::OracleLimits limits{opts.state_budget, opts.time_budget};
  const auto t0 = std::chrono::steady_clock::now();
  const tj::TjDecision dec = tj::decide(inst, cfg, limits);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  const std::size_t n_after =
      dec.method == tj::Method::KernelThenOracle ? dec.kernel_vertex_count
                                                 : inst.graph.vertex_count();
  json rec = result_record(path, dec, ms, inst.graph.vertex_count(), n_after);
  if (compare_oracle) {
    const tj::TjDecision oracle = tj::oracle_decide(inst, limits);
    rec["oracle_answer"] = tj::answer_name(oracle.answer);
    rec["agrees"] = oracle.answer == dec.answer;
    if (oracle.answer != dec.answer) rec["trace"] = json::parse(dec.kernel_trace.to_json());
  }
  return {answer_exit(dec.answer), rec};
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "faithful|aggressive");
  cmd->add_option("--big-threshold", opts.big_threshold, "Aggressive big-class threshold");
  cmd->add_option("--indep-threshold", opts.indep_threshold, "Aggressive rank<=1 YES threshold");
  cmd->add_flag("--certify", opts.certify, "certify Aggressive reductions with exact search");
  cmd->add_option("--state-budget", opts.state_budget, "oracle state budget");
  cmd->add_option("--time-budget", opts.time_budget, "oracle time budget (seconds)");
  cmd->add_flag("--json", opts.json_out, "emit a JSON result record");
  cmd->add_flag("--verify-ell", opts.verify_ell, "verify K_{ell,ell}-freeness before trusting it");
}

int run_batch(const std::string& dir, const CommonOpts& opts, bool compare_oracle, int jobs) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".tji") paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());

  std::vector<json> records(paths.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < paths.size(); i = next.fetch_add(1)) {
      try {
        records[i] = decide_one(paths[i], opts, compare_oracle).record;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        records[i] = {{"instance", paths[i]}, {"error", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  const int n_jobs = std::max(1, jobs);
  for (int i = 0; i < n_jobs; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int agree = 0, total = 0, errors = 0;
  for (const auto& rec : records) {
    std::cout << rec.dump() << "\n";
    if (rec.contains("error")) {
      ++errors;
      continue;
    }
    if (compare_oracle) {
      ++total;
      if (rec.value("agrees", false)) ++agree;
    }
  }
  if (compare_oracle && total > 0)
    std::cerr << "oracle agreement: " << agree << "/" << total << "\n";
  return errors == 0 ? kExitYes : kExitError;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token Jumping reconfiguration toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string path, out_path, trace_path, batch_dir;
  bool compare_oracle = false, want_witness = false, json_trace = false;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  int cap = 3;

  auto* decide = app.add_subcommand("decide", "kernelize and decide an instance");
  decide->add_option("path", path, "instance file");
  add_common(decide, opts);
  decide->add_option("--batch", batch_dir, "run every .tji file in a directory");
  decide->add_option("--jobs", jobs, "batch worker count");
  decide->add_flag("--compare-oracle", compare_oracle, "also run the oracle and report agreement");

  auto* kern = app.add_subcommand("kernelize", "write the kernelized instance and its trace");
  kern->add_option("path", path, "instance file")->required();
  kern->add_option("-o,--output", out_path, "output instance file (default stdout)");
  kern->add_option("--trace", trace_path, "trace log file");
  kern->add_flag("--json-trace", json_trace, "write the trace as JSON");
  add_common(kern, opts);

  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive BFS");
  oracle->add_option("path", path, "instance file")->required();
  oracle->add_flag("--witness", want_witness, "print the witness sequence");
  add_common(oracle, opts);

  auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of the closed-neighborhood hypergraph");
  vcdim->add_option("path", path, "instance file")->required();
  vcdim->add_option("--cap", cap, "search subsets up to cap+1");

  auto* vc1 = app.add_subcommand("vc1", "polynomial solver for VC-dimension <= 1");
  vc1->add_option("path", path, "instance file")->required();
  add_common(vc1, opts);

  auto* gen = app.add_subcommand("gen", "generate an instance file and manifest");
  std::string family = "girth5", class_sizes_str, signatures_str;
  int n = 20, k = 2, ell = 2, edge_budget = 0, anchors = 0;
  std::uint64_t seed = 0;
  gen->add_option("--family", family, "girth5|bicliquefree|vc1|twinblob")->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--k", k, "token count");
  gen->add_option("--ell", ell, "biclique parameter");
  gen->add_option("--edge-budget", edge_budget, "edge attempt budget");
  gen->add_option("--class-sizes", class_sizes_str, "twinblob class sizes, comma separated");
  gen->add_option("--signatures", signatures_str, "twinblob signatures, '|' between classes");
  gen->add_option("--x-size", anchors, "twinblob anchor count");
  gen->add_option("-o,--output", out_path, "output instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) {
      if (!batch_dir.empty()) return run_batch(batch_dir, opts, compare_oracle, jobs);
      if (path.empty()) throw tj::GraphError("decide needs an instance path or --batch");
      const DecideResult res = decide_one(path, opts, compare_oracle);
      if (opts.json_out) std::cout << res.record.dump() << "\n";
      else std::cout << res.record["answer"].get<std::string>() << "\n";
      return res.exit_code;
    }
    if (kern->parsed()) {
      const tj::Instance inst = tj::load_instance(path);
      if (opts.verify_ell && tj::contains_biclique(inst.graph, inst.ell))
        throw tj::GraphError("graph is not K_{ell,ell}-free");
      const tj::KernelOutcome outcome = tj::kernelize(inst, make_config(opts));
      std::string body;
      if (outcome.decided_yes) body = tj::decided_yes_sentinel(outcome.reason);
      else
        body = tj::serialize_instance(*outcome.reduced,
                                      static_cast<int>(inst.graph.next_fresh_id()));
      if (out_path.empty()) std::cout << body;
      else std::ofstream(out_path) << body;
      if (!trace_path.empty())
        std::ofstream(trace_path) << (json_trace ? outcome.trace.to_json()
                                                 : outcome.trace.to_text());
      return outcome.decided_yes ? kExitYes : kExitNo;
    }
    if (oracle->parsed()) {
      const tj::Instance inst = tj::load_instance(path);
      const tj::TjDecision dec =
          tj::oracle_decide(inst, {opts.state_budget, opts.time_budget});
      if (opts.json_out)
        std::cout << result_record(path, dec, 0.0, inst.graph.vertex_count(),
                                   inst.graph.vertex_count())
                         .dump()
                  << "\n";
      else std::cout << tj::answer_name(dec.answer) << "\n";
      if (want_witness && dec.witness) {
        for (const auto& s : *dec.witness) {
          for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
          std::cout << "\n";
        }
      }
      return answer_exit(dec.answer);
    }
    if (vcdim->parsed()) {
      const tj::Instance inst = tj::load_instance(path);
      const auto [dim, witness] = tj::vc_dimension_witness(inst.graph, cap);
      std::cout << dim << "\n";
      for (std::size_t i = 0; i < witness.size(); ++i)
        std::cout << (i ? " " : "") << witness[i];
      if (!witness.empty()) std::cout << "\n";
      return kExitYes;
    }
    if (vc1->parsed()) {
      const tj::Instance inst = tj::load_instance(path);
      const tj::TjDecision dec = tj::vc1_decide(inst, {opts.state_budget, opts.time_budget});
      if (opts.json_out)
        std::cout << result_record(path, dec, 0.0, inst.graph.vertex_count(),
                                   inst.graph.vertex_count())
                         .dump()
                  << "\n";
      else std::cout << tj::answer_name(dec.answer) << "\n";
      return answer_exit(dec.answer);
    }
    if (gen->parsed()) {
      tj::GenSpec spec;
      spec.seed = seed;
      spec.n = n;
      spec.k = k;
      if (family == "girth5") spec.family = tj::Girth5{edge_budget};
      else if (family == "bicliquefree") spec.family = tj::RejectionBicliqueFree{ell, edge_budget};
      else if (family == "vc1") spec.family = tj::Vc1Rejection{};
      else if (family == "twinblob") {
        tj::TwinBlob blob;
        blob.anchor_count = anchors;
        blob.class_sizes = parse_int_list(class_sizes_str, ',');
        std::stringstream ss(signatures_str);
        std::string part;
        while (std::getline(ss, part, '|')) blob.signatures.push_back(parse_int_list(part, ','));
        blob.signatures.resize(blob.class_sizes.size());
        spec.family = blob;
      } else throw tj::GraphError("unknown family " + family);

      const tj::Graph g = tj::gen_graph(spec);
      const auto inst = tj::gen_instance(g, k, seed ^ 0x9e3779b97f4a7c15ULL, ell);
      if (!inst) throw tj::GraphError("could not sample two independent k-sets");
      const std::string body = tj::serialize_instance(*inst);
      std::ofstream(out_path) << body;

      json manifest;
      manifest["family"] = family;
      manifest["n"] = n;
      manifest["k"] = k;
      manifest["ell"] = ell;
      manifest["seed"] = seed;
      manifest["rng"] = tj::rng_name();
      manifest["checksum"] = tj::checksum_hex(body);
      std::ofstream(out_path + ".manifest.json") << manifest.dump(2) << "\n";
      return kExitYes;
    }
  } catch (const tj::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
