#include "fcagen/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "fcagen/analytics.hpp"
#include "fcagen/null_model.hpp"

namespace fcagen::cli {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(const std::string& text, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid number for ") + what + ": '" + text + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += fmt(items[i]);
  }
  return out;
}

std::string beta_mode_name(const BetaMode& mode) {
  if (std::holds_alternative<BaseBeta>(mode)) return "base";
  if (std::holds_alternative<FixedBeta>(mode)) return "fixed";
  if (std::holds_alternative<UniformRandomBeta>(mode)) return "uniform-random";
  return "scaled";
}

BetaMode make_beta_mode(const std::string& name, double beta, double c) {
  if (name == "base") return BaseBeta{};
  if (name == "fixed") return FixedBeta{beta};
  if (name == "uniform-random") return UniformRandomBeta{};
  if (name == "scaled") return ScaledBeta{c};
  throw UsageError("unknown beta mode '" + name + "' (base, fixed, uniform-random, scaled)");
}

Model parse_model_kind(const std::string& name) {
  if (name == "direct") return Model::DirectCoin;
  if (name == "indirect") return Model::IndirectCoin;
  if (name == "dirichlet") return Model::Dirichlet;
  throw UsageError("unknown model '" + name + "'");
}

void ensure_directory(const fs::path& dir) {
  if (dir.empty()) throw UsageError("an output directory is required (--out)");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir.string() + "'");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_manifest(const RunConfig& config, const std::string& extra = {}) {
  write_text(config.output / "manifest.txt", to_manifest(config) + extra);
}

void require_count(const RunConfig& config) {
  if (config.count < 1) throw UsageError("--count must be at least 1");
}

// Work is chunked so large batches stream to disk with bounded memory.
constexpr std::size_t kChunk = 256;

template <class Produce, class Consume>
void chunked(std::uint64_t count, std::size_t jobs, Produce&& produce, Consume&& consume) {
  for (std::uint64_t start = 0; start < count; start += kChunk) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, count - start));
    std::vector<decltype(produce(std::uint64_t{0}))> items(n);
    parallel_for(n, jobs, [&](std::size_t i) { items[i] = produce(start + i); });
    for (std::size_t i = 0; i < n; ++i) consume(start + i, items[i]);
  }
}

void check_record(const IpiRecord& r, std::size_t attributes) {
  if (r.contranominal && (r.pseudo_intents != 0 || r.intents != (std::uint64_t{1} << attributes))) {
    throw InvariantError("context " + std::to_string(r.context_index) +
                         " contains a contranominal scale but its I-PI coordinate is not (2^|M|, 0)");
  }
}

const char* kIpiHeader = "index,intents,pseudo_intents,contranominal,objects\n";

std::string ipi_row(const IpiRecord& r) {
  return std::to_string(r.context_index) + ',' + std::to_string(r.intents) + ',' + std::to_string(r.pseudo_intents) +
         ',' + (r.contranominal ? "true" : "false") + ',' + std::to_string(r.object_count) + '\n';
}

std::uint64_t fresh_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::uint64_t numeric_suffix(const std::string& stem, std::string& prefix) {
  std::size_t cut = stem.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(stem[cut - 1]))) --cut;
  prefix = stem.substr(0, cut);
  if (cut == stem.size() || stem.size() - cut > 18) return std::numeric_limits<std::uint64_t>::max();
  return std::stoull(stem.substr(cut));
}

}  // namespace

GeneratorSpec spec_for_model(const std::string& name, std::size_t attributes, double c) {
  if (name == "varA") return GeneratorSpec::variation_a(attributes);
  if (name == "varB") return GeneratorSpec::variation_b(attributes, c);
  if (name == "coin") return GeneratorSpec::direct_coin(attributes);
  switch (parse_model_kind(name)) {
    case Model::DirectCoin: return GeneratorSpec::direct_coin(attributes);
    case Model::IndirectCoin: return GeneratorSpec::indirect_coin(attributes);
    case Model::Dirichlet: return GeneratorSpec::dirichlet(attributes);
  }
  throw UsageError("unknown model '" + name + "'");
}

std::vector<fs::path> list_contexts(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("input directory '" + dir.string() + "' is not readable");
  struct Entry {
    std::string prefix;
    std::uint64_t number;
    fs::path path;
  };
  std::vector<Entry> entries;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (!e.is_regular_file() || e.path().extension() != ".cxt") continue;
    Entry entry{{}, 0, e.path()};
    entry.number = numeric_suffix(e.path().stem().string(), entry.prefix);
    entries.push_back(std::move(entry));
  }
  if (ec) throw IoError("cannot list '" + dir.string() + "'");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.prefix, a.number, a.path) < std::tie(b.prefix, b.number, b.path);
  });
  std::vector<fs::path> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.path));
  return out;
}

std::string to_manifest(const RunConfig& config) {
  const GeneratorSpec& s = config.spec;
  std::ostringstream out;
  out << "fcagen_manifest=1\n";
  out << "version=" << kVersion << '\n';
  out << "command=" << config.command << '\n';
  out << "model=" << to_string(s.model) << '\n';
  out << "attributes=" << s.attribute_count << '\n';
  out << "beta_mode=" << beta_mode_name(s.beta_mode) << '\n';
  if (const auto* f = std::get_if<FixedBeta>(&s.beta_mode)) out << "beta_value=" << format_double(f->beta) << '\n';
  if (const auto* sc = std::get_if<ScaledBeta>(&s.beta_mode)) out << "c=" << format_double(sc->c) << '\n';
  out << "alpha=" << join(s.alpha, format_double) << '\n';
  if (const auto* fixed = std::get_if<FixedObjectCount>(&s.object_count)) {
    out << "objects=" << fixed->n << '\n';
  } else {
    out << "objects=random\n";
  }
  out << "seed=" << s.seed << '\n';
  out << "count=" << config.count << '\n';
  if (config.command == "distinct") {
    out << "models=" << join(config.models, [](const std::string& m) { return m; }) << '\n';
    out << "checkpoints=" << join(config.checkpoints, [](std::uint64_t c) { return std::to_string(c); }) << '\n';
  }
  if (config.command == "stego") out << "omit_zero=" << (config.omit_zero ? "true" : "false") << '\n';
  if (!config.input.empty()) out << "input=" << config.input << '\n';
  if (config.command == "nullmodel") {
    out << "method=" << config.method << '\n';
    out << "beta=" << format_double(config.beta) << '\n';
  }
  return out.str();
}

RunConfig from_manifest(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("manifest line without '=': " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (kv["fcagen_manifest"] != "1") throw UsageError("not an fcagen manifest");
  const auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError(std::string("manifest lacks '") + key + "'");
    return it->second;
  };

  RunConfig config;
  config.command = get("command");
  GeneratorSpec& s = config.spec;
  s.model = parse_model_kind(get("model"));
  s.attribute_count = static_cast<std::size_t>(parse_u64(get("attributes"), "attributes"));
  const std::string& mode = get("beta_mode");
  s.beta_mode = make_beta_mode(mode, mode == "fixed" ? parse_double(get("beta_value"), "beta_value") : 0.0,
                               mode == "scaled" ? parse_double(get("c"), "c") : 0.1);
  for (const auto& a : split_list(get("alpha"))) s.alpha.push_back(parse_double(a, "alpha"));
  const std::string& objects = get("objects");
  if (objects == "random") {
    s.object_count = RandomObjectCount{};
  } else {
    s.object_count = FixedObjectCount{parse_u64(objects, "objects")};
  }
  s.seed = parse_u64(get("seed"), "seed");
  config.count = parse_u64(get("count"), "count");
  if (config.command == "distinct") {
    config.models = split_list(get("models"));
    for (const auto& c : split_list(get("checkpoints"))) config.checkpoints.push_back(parse_u64(c, "checkpoints"));
  }
  if (config.command == "stego") config.omit_zero = get("omit_zero") == "true";
  if (kv.count("input")) config.input = kv["input"];
  if (config.command == "nullmodel") {
    config.method = get("method");
    config.beta = parse_double(get("beta"), "beta");
  }
  return config;
}

void cmd_generate(const RunConfig& config, std::ostream& log) {
  require_count(config);
  config.spec.validate();
  ensure_directory(config.output);
  std::string seeds;
  chunked(
      config.count, config.jobs, [&](std::uint64_t i) { return write_burmeister(generate(config.spec, i)); },
      [&](std::uint64_t i, const std::string& text) {
        write_text(config.output / ("ctx_" + std::to_string(i) + ".cxt"), text);
        seeds += "context_seed." + std::to_string(i) + '=' + std::to_string(split_seed(config.spec.seed, i)) + '\n';
      });
  write_manifest(config, seeds);
  log << "wrote " << config.count << " contexts to " << config.output.string() << '\n';
}

void cmd_ipi(const RunConfig& config, std::ostream& out, std::ostream& log) {
  std::ostringstream csv;
  csv << kIpiHeader;
  if (!config.input.empty()) {
    const std::vector<fs::path> files = list_contexts(config.input);
    chunked(
        files.size(), config.jobs,
        [&](std::uint64_t i) { return measure_context(read_burmeister_file(files[i].string()), i); },
        [&](std::uint64_t, const IpiRecord& r) {
          if (r.contranominal && r.pseudo_intents != 0) throw InvariantError("contranominal context with pseudo-intents");
          csv << ipi_row(r);
        });
    log << "measured " << files.size() << " contexts\n";
  } else {
    require_count(config);
    config.spec.validate();
    chunked(
        config.count, config.jobs, [&](std::uint64_t i) { return measure_context(generate(config.spec, i), i); },
        [&](std::uint64_t, const IpiRecord& r) {
          check_record(r, config.spec.attribute_count);
          csv << ipi_row(r);
        });
    log << "measured " << config.count << " generated contexts\n";
  }
  if (config.output.empty()) {
    out << csv.str();
  } else {
    ensure_directory(config.output);
    write_text(config.output / "ipi.csv", csv.str());
    write_manifest(config);
  }
}

void cmd_experiment_stego(const RunConfig& config, std::ostream& log) {
  require_count(config);
  config.spec.validate();
  ensure_directory(config.output);
  std::vector<IpiRecord> records;
  records.reserve(config.count);
  std::string csv = kIpiHeader;
  chunked(
      config.count, config.jobs, [&](std::uint64_t i) { return measure_context(generate(config.spec, i), i); },
      [&](std::uint64_t, const IpiRecord& r) {
        check_record(r, config.spec.attribute_count);
        csv += ipi_row(r);
        records.push_back(r);
      });
  write_text(config.output / "ipi.csv", csv);

  std::string hist = "pseudo_intents,count\n";
  for (const auto& [pi, n] : pi_histogram(records, config.omit_zero)) {
    hist += std::to_string(pi) + ',' + std::to_string(n) + '\n';
  }
  write_text(config.output / "histogram.csv", hist);

  const auto contranominal = static_cast<std::uint64_t>(
      std::count_if(records.begin(), records.end(), [](const IpiRecord& r) { return r.contranominal; }));
  std::uint64_t max_pi = 0;
  for (const auto& r : records) max_pi = std::max(max_pi, r.pseudo_intents);
  const std::string summary = "contexts=" + std::to_string(records.size()) +
                              "\ncontranominal=" + std::to_string(contranominal) +
                              "\nmax_pseudo_intents=" + std::to_string(max_pi) + '\n';
  write_text(config.output / "summary.txt", summary);
  write_manifest(config);
  log << "contranominal: " << contranominal << " of " << records.size() << " contexts\n";
}

void cmd_experiment_distinct(const RunConfig& config, std::ostream& log) {
  require_count(config);
  if (config.models.empty()) throw UsageError("--models needs at least one model");
  ensure_directory(config.output);
  RunConfig resolved = config;
  if (resolved.checkpoints.empty()) resolved.checkpoints = log_checkpoints(config.count);
  for (const std::string& name : config.models) {
    GeneratorSpec spec = spec_for_model(name, config.spec.attribute_count);
    spec.seed = config.spec.seed;
    spec.object_count = config.spec.object_count;
    DistinctCurve curve;
    try {
      curve = distinct_curve(spec, config.count, resolved.checkpoints, config.jobs);
    } catch (const ContractError& e) {
      throw UsageError(e.what());
    }
    std::string csv = "checkpoint,distinct\n";
    for (std::size_t i = 0; i < curve.checkpoints.size(); ++i) {
      if (i > 0 && curve.distinct[i] < curve.distinct[i - 1]) throw InvariantError("distinct curve decreased");
      csv += std::to_string(curve.checkpoints[i]) + ',' + std::to_string(curve.distinct[i]) + '\n';
    }
    write_text(config.output / ("distinct_" + name + ".csv"), csv);
    log << name << ": " << curve.distinct.back() << " distinct I-PI coordinates after " << config.count << '\n';
  }
  write_manifest(resolved);
}

void cmd_nullmodel(const RunConfig& config, std::ostream& log) {
  require_count(config);
  if (config.input.empty()) throw UsageError("--reference is required");
  const FormalContext reference = read_burmeister_file(config.input);
  if (reference.object_count() == 0) throw UsageError("the reference context has no objects");
  if (config.method != "permute" && config.method != "categorical" && config.method != "dirichlet") {
    throw UsageError("unknown method '" + config.method + "' (permute, categorical, dirichlet)");
  }
  RunConfig resolved = config;
  resolved.spec.attribute_count = reference.attribute_count();
  resolved.spec.object_count = FixedObjectCount{reference.object_count()};
  if (config.method == "dirichlet" && resolved.beta <= 0.0) resolved.beta = default_null_beta(reference.attribute_count());
  ensure_directory(config.output);

  const DegreeDistribution ref_degrees = degree_distribution(reference);
  std::vector<double> mean(ref_degrees.counts.size(), 0.0);
  const auto randomize = [&](std::uint64_t i) {
    Rng rng = Rng::split(resolved.spec.seed, i);
    if (resolved.method == "permute") return permutation_null(reference, rng);
    if (resolved.method == "categorical") return categorical_null(reference, rng);
    return dirichlet_null(reference, rng, resolved.beta);
  };
  chunked(
      config.count, config.jobs, [&](std::uint64_t i) { return std::optional<FormalContext>(randomize(i)); },
      [&](std::uint64_t i, const std::optional<FormalContext>& ctx) {
        const DegreeDistribution d = degree_distribution(*ctx);
        if (resolved.method == "permute" && d != ref_degrees) throw InvariantError("permutation changed row sums");
        const std::vector<double> p = d.normalized();
        for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += p[k];
        write_burmeister_file((config.output / ("null_" + std::to_string(i) + ".cxt")).string(), *ctx);
      });

  const std::vector<double> ref_p = ref_degrees.normalized();
  std::string csv = "degree,reference,mean_output\n";
  for (std::size_t k = 0; k < mean.size(); ++k) {
    csv += std::to_string(k) + ',' + format_double(ref_p[k]) + ',' +
           format_double(mean[k] / static_cast<double>(config.count)) + '\n';
  }
  write_text(config.output / "degrees.csv", csv);
  write_manifest(resolved);
  log << "wrote " << config.count << " " << config.method << " randomizations to " << config.output.string() << '\n';
}

void run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  if (config.command == "generate") return cmd_generate(config, log);
  if (config.command == "ipi") return cmd_ipi(config, out, log);
  if (config.command == "stego") return cmd_experiment_stego(config, log);
  if (config.command == "distinct") return cmd_experiment_distinct(config, log);
  if (config.command == "nullmodel") return cmd_nullmodel(config, log);
  throw UsageError("unknown command '" + config.command + "'");
}

namespace {

struct GeneratorFlags {
  std::string model = "direct";
  std::size_t attributes = 10;
  std::string beta_mode;
  double beta = 0.0;
  double c = 0.1;
  std::string alpha;
  std::uint64_t objects = 0;

  void add_to(CLI::App& app, bool model_required) {
    auto* m = app.add_option("--model", model, "direct, indirect, dirichlet, varA or varB");
    if (model_required) m->required();
    app.add_option("--attributes", attributes, "number of attributes |M|")->check(CLI::Range(1, 63));
    app.add_option("--beta-mode", beta_mode, "base, fixed, uniform-random or scaled (dirichlet only)");
    app.add_option("--beta", beta, "precision for --beta-mode fixed");
    app.add_option("--c", c, "factor for --beta-mode scaled: beta = c*(|M|+1)");
    app.add_option("--alpha", alpha, "comma-separated base measure weights over degrees 0..|M|");
    app.add_option("--objects", objects, "fixed object count (default: random in [|M|, 2^|M|])");
  }

  GeneratorSpec build() const {
    GeneratorSpec spec = spec_for_model(model, attributes, c);
    if (!beta_mode.empty()) {
      if (model == "varA" || model == "varB") throw UsageError("--beta-mode cannot be combined with " + model);
      if (spec.model != Model::Dirichlet) throw UsageError("--beta-mode needs --model dirichlet");
      spec.beta_mode = make_beta_mode(beta_mode, beta, c);
    }
    for (const auto& a : split_list(alpha)) spec.alpha.push_back(parse_double(a, "--alpha"));
    if (!spec.alpha.empty() && spec.model != Model::Dirichlet) throw UsageError("--alpha needs a dirichlet model");
    if (objects > 0) spec.object_count = FixedObjectCount{objects};
    return spec;
  }
};

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random formal contexts, I-PI coordinates and null models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::filesystem::path output;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;

  const auto common = [&](CLI::App* sub, bool needs_count) {
    sub->add_option("--out", output, "output directory");
    sub->add_option("--jobs", jobs, "worker threads (outputs do not depend on it)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "root seed (default: fresh, printed)");
    if (needs_count) sub->add_option("--count", count, "number of contexts");
  };

  GeneratorFlags gen_flags;
  auto* generate_cmd = app.add_subcommand("generate", "write random contexts as .cxt files");
  gen_flags.add_to(*generate_cmd, true);
  common(generate_cmd, true);

  GeneratorFlags ipi_flags;
  std::string ipi_input;
  auto* ipi_cmd = app.add_subcommand("ipi", "I-PI coordinates of .cxt files or of generated contexts as CSV");
  ipi_cmd->add_option("--input", ipi_input, "directory of .cxt files");
  ipi_flags.add_to(*ipi_cmd, false);
  common(ipi_cmd, true);

  auto* experiment_cmd = app.add_subcommand("experiment", "replication experiments");
  experiment_cmd->require_subcommand(1);
  GeneratorFlags stego_flags;
  bool keep_zero = false;
  auto* stego_cmd = experiment_cmd->add_subcommand("stego", "I-PI scatter data and pseudo-intent histogram");
  stego_flags.add_to(*stego_cmd, true);
  stego_cmd->add_flag("--keep-zero", keep_zero, "keep the zero bin in the histogram");
  common(stego_cmd, true);

  std::string distinct_models = "direct,varA,varB";
  std::size_t distinct_attributes = 6;
  std::string distinct_checkpoints;
  std::uint64_t distinct_objects = 0;
  auto* distinct_cmd = experiment_cmd->add_subcommand("distinct", "distinct I-PI coordinates versus contexts generated");
  distinct_cmd->add_option("--models", distinct_models, "comma-separated model names");
  distinct_cmd->add_option("--attributes", distinct_attributes)->check(CLI::Range(1, 63));
  distinct_cmd->add_option("--checkpoints", distinct_checkpoints, "comma-separated increasing counts");
  distinct_cmd->add_option("--objects", distinct_objects, "fixed object count");
  common(distinct_cmd, true);

  std::string reference;
  std::string method = "permute";
  double null_beta = 0.0;
  auto* null_cmd = app.add_subcommand("nullmodel", "randomize a reference context");
  null_cmd->add_option("--reference", reference, "reference .cxt file")->required();
  null_cmd->add_option("--method", method, "permute, categorical or dirichlet");
  null_cmd->add_option("--beta", null_beta, "dirichlet precision (default 1000*(|M|+1))");
  common(null_cmd, true);

  std::string manifest_path;
  auto* replay_cmd = app.add_subcommand("replay", "rerun the command recorded in a manifest");
  replay_cmd->add_option("--manifest", manifest_path, "manifest.txt of an earlier run")->required();
  replay_cmd->add_option("--out", output, "output directory")->required();
  replay_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig config;
    if (*replay_cmd) {
      std::ifstream in(manifest_path, std::ios::binary);
      if (!in) throw IoError("cannot read manifest '" + manifest_path + "'");
      std::stringstream text;
      text << in.rdbuf();
      config = from_manifest(text.str());
    } else {
      const bool fresh = !seed.has_value();
      const std::uint64_t root = fresh ? fresh_seed() : *seed;
      if (fresh) err << "seed: " << root << '\n';
      config.count = count;
      if (*generate_cmd) {
        config.command = "generate";
        config.spec = gen_flags.build();
      } else if (*ipi_cmd) {
        config.command = "ipi";
        config.input = ipi_input;
        if (ipi_input.empty()) {
          config.spec = ipi_flags.build();
        } else {
          config.count = 0;
        }
      } else if (*stego_cmd) {
        config.command = "stego";
        config.spec = stego_flags.build();
        config.omit_zero = !keep_zero;
      } else if (*distinct_cmd) {
        config.command = "distinct";
        config.models = split_list(distinct_models);
        for (const auto& name : config.models) spec_for_model(name, distinct_attributes);
        config.spec = GeneratorSpec::direct_coin(distinct_attributes);
        if (distinct_objects > 0) config.spec.object_count = FixedObjectCount{distinct_objects};
        for (const auto& c : split_list(distinct_checkpoints)) {
          config.checkpoints.push_back(parse_u64(c, "--checkpoints"));
        }
      } else if (*null_cmd) {
        config.command = "nullmodel";
        config.input = reference;
        config.method = method;
        config.beta = null_beta;
      }
      config.spec.seed = root;
    }
    config.output = output;
    config.jobs = jobs;
    run(config, out, err);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace fcagen::cli
