// Copyright 2026 The posetcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "posetcount/counting.hpp"
#include "posetcount/io.hpp"
#include "posetcount/oracle.hpp"
#include "posetcount/scaling.hpp"

namespace posetcount::cli {

namespace {

constexpr std::uint64_t kDefaultBenchModulus = (std::uint64_t{1} << 61) - 1;

struct Loaded {
  Poset poset;  // poset format
  std::optional<PermutationModel> model;
  Graph graph;  // graph format
};

Loaded load(const RunConfig& config) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (config.input != "-") {
    file.open(config.input);
    if (!file) throw Error("cannot open '" + config.input + "'");
    in = &file;
  }
  Loaded loaded;
  switch (config.format) {
    case Format::kPoset:
      loaded.poset = io::read_poset(*in);
      break;
    case Format::kPerm:
      loaded.model = permutation_model(io::read_permutation(*in));
      break;
    case Format::kGraph:
      loaded.graph = io::read_graph(*in);
      break;
  }
  return loaded;
}

CountMode mode_of(const RunConfig& config) {
  return config.modulus ? CountMode::modulo(*config.modulus) : CountMode{};
}

LinearExtension identity(std::size_t n) {
  std::vector<Element> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Element>(i);
  return LinearExtension::from_order(std::move(order));
}

Count minus_one(const Count& c) {
  if (!c.is_modular()) return Count(c.value() - 1);
  const mpz_class m(std::to_string(c.modulus()));
  mpz_class r = (c.value() + m - 1) % m;
  return Count(r.get_ui(), c.modulus());
}

// One side of the requested target: the poset whose chains are counted.
struct Side {
  const char* label;
  const Poset* poset;
  std::optional<OrderedInstance::PermutationTarget> permutation;
};

void print_profile(std::ostream& out, const std::string& prefix,
                   const SizeProfile& profile) {
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    out << prefix << i << ' ' << profile.counts[i] << '\n';
  }
}

void emit(const RunConfig& config, const Side& side, const Loaded& loaded,
          const std::string& prefix, std::ostream& out) {
  const Poset& p = *side.poset;
  const std::size_t n = p.size();
  const CountMode mode = mode_of(config);
  const LinearExtension le =
      side.permutation ? identity(n) : linear_extension(p);

  switch (config.variant) {
    case CliVariant::kAll: {
      Count total;
      if (side.permutation) {
        total = count_is(OrderedInstance::from_permutation(loaded.model->pi,
                                                           *side.permutation),
                         mode);
      } else {
        total = count_is(OrderedInstance::from_predecessors(p, le), mode);
      }
      if (config.validate) {
        const Count direct = count_is_fast(incomparability_graph(p), p, le,
                                           {mode, /*validate=*/true});
        if (!(direct == total)) throw Error("fast and direct counts differ");
      }
      out << prefix << (config.exclude_empty ? minus_one(total) : total)
          << '\n';
      return;
    }
    case CliVariant::kMaximal:
      out << prefix << count_maximal_is(cover_relation(p), le, mode) << '\n';
      return;
    case CliVariant::kBySize:
      out << prefix << count_is_by_size(p, le, config.k, mode).counts.back()
          << '\n';
      return;
    case CliVariant::kMaximalBySize:
      out << prefix
          << count_maximal_is_by_size(cover_relation(p), le, config.k, mode)
                 .counts.back()
          << '\n';
      return;
    case CliVariant::kProfile:
      print_profile(out, prefix, count_is_by_size(p, le, n, mode));
      return;
    case CliVariant::kMaximalProfile:
      print_profile(out, prefix,
                    count_maximal_is_by_size(cover_relation(p), le, n, mode));
      return;
    case CliVariant::kPolynomial: {
      const SizeProfile profile = count_is_by_size(p, le, n, mode);
      if (mode.is_modular()) {
        std::int64_t x = 0;
        try {
          x = std::stoll(config.x);
        } catch (const std::exception&) {
          throw UnsupportedCombination("--mod needs an integer --x");
        }
        out << prefix << evaluate_polynomial_mod(profile, x) << '\n';
      } else {
        mpq_class x;
        if (x.set_str(config.x, 10) != 0 || x.get_den() == 0) {
          throw Error("bad --x '" + config.x + "'");
        }
        x.canonicalize();
        out << prefix << evaluate_polynomial(profile, x).get_str() << '\n';
      }
      return;
    }
    case CliVariant::kAlpha: {
      // Residues cannot tell zero from a multiple of the modulus, so alpha
      // is always read off an exact profile.
      const MaximumInfo info =
          alpha_and_maximum_count(count_is_by_size(p, le, n));
      const Count count =
          mode.is_modular() ? info.count.reduced(mode.modulus) : info.count;
      out << prefix << info.alpha << ' ' << count << '\n';
      return;
    }
  }
}

std::vector<Side> sides_of(const RunConfig& config, const Loaded& loaded) {
  using PT = OrderedInstance::PermutationTarget;
  Side is_side{"independent_sets", &loaded.poset, std::nullopt};
  Side clique_side{"cliques", &loaded.poset, std::nullopt};
  if (loaded.model) {
    is_side = {"independent_sets", &loaded.model->is_poset,
               PT::kIndependentSets};
    clique_side = {"cliques", &loaded.model->clique_poset, PT::kCliques};
  }
  switch (config.target) {
    case Target::kIndependentSets:
      return {is_side};
    case Target::kCliques:
      return {clique_side};
    case Target::kBoth:
      return {is_side, clique_side};
  }
  return {};
}

int run_count(const RunConfig& config, std::ostream& out) {
  if (config.format == Format::kGraph) {
    throw UnsupportedCombination(
        "bare graphs are only accepted by 'verify'; supply a poset or a "
        "permutation");
  }
  const Loaded loaded = load(config);
  if (config.validate && !loaded.model) {
    if (auto problem = find_poset_violation(loaded.poset)) {
      throw Error("invalid poset: " + *problem);
    }
  }
  const auto sides = sides_of(config, loaded);
  for (const Side& side : sides) {
    const std::string prefix =
        sides.size() > 1 ? std::string(side.label) + " " : std::string();
    emit(config, side, loaded, prefix, out);
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

class Checker {
 public:
  Checker(std::ostream& out, CountMode mode) : out_(out), mode_(mode) {}

  void same(const std::string& name, const Count& engine,
            std::uint64_t oracle) {
    const Count expected = expect(oracle);
    report(name, engine == expected, engine.to_string(), expected.to_string());
  }

  void same(const std::string& name, const SizeProfile& engine,
            const oracle::EnumerationResult& oracle) {
    bool ok = true;
    std::string got, want;
    for (std::size_t i = 0; i < engine.counts.size(); ++i) {
      const std::uint64_t o = i < oracle.by_size.size() ? oracle.by_size[i] : 0;
      ok = ok && engine.counts[i] == expect(o);
      got += (i ? "," : "") + engine.counts[i].to_string();
      want += (i ? "," : "") + expect(o).to_string();
    }
    ok = ok && oracle.by_size.size() <= engine.counts.size();
    report(name, ok, got, want);
  }

  void holds(const std::string& name, bool ok) { report(name, ok, "", ""); }

  bool failed() const { return failed_; }

 private:
  Count expect(std::uint64_t oracle) const {
    Count c{mpz_class(std::to_string(oracle))};
    return mode_.is_modular() ? c.reduced(mode_.modulus) : c;
  }

  void report(const std::string& name, bool ok, const std::string& got,
              const std::string& want) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !got.empty()) out_ << ": engine " << got << " oracle " << want;
    out_ << '\n';
    failed_ = failed_ || !ok;
  }

  std::ostream& out_;
  CountMode mode_;
  bool failed_ = false;
};

void verify_side(Checker& check, const std::string& label, const Poset& p,
                 const LinearExtension& le, const Graph& graph, bool cliques,
                 CountMode mode) {
  using oracle::SetMode;
  const auto all = cliques ? oracle::enumerate_cliques(graph, SetMode::kAll)
                           : oracle::enumerate_is(graph, SetMode::kAll);
  const auto maximal =
      cliques ? oracle::enumerate_cliques(graph, SetMode::kMaximal)
              : oracle::enumerate_is(graph, SetMode::kMaximal);
  const ExtendedPoset ep = cover_relation(p);
  check.same(label + " all", count_is(p, le, mode), all.total);
  check.same(label + " all-fast",
             count_is_fast(incomparability_graph(p), p, le, {mode, true}),
             all.total);
  check.same(label + " maximal", count_maximal_is(ep, le, mode),
             maximal.total);
  check.same(label + " profile", count_is_by_size(p, le, p.size(), mode), all);
  check.same(label + " maximal-profile",
             count_maximal_is_by_size(ep, le, p.size(), mode), maximal);
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const Loaded loaded = load(config);
  const CountMode mode = mode_of(config);
  Checker check(out, mode);
  using oracle::SetMode;
  switch (config.format) {
    case Format::kPoset: {
      const Poset& p = loaded.poset;
      const LinearExtension le = linear_extension(p);
      check.holds("poset invariants", !find_poset_violation(p));
      verify_side(check, "independent_sets", p, le, incomparability_graph(p),
                  false, mode);
      verify_side(check, "cliques", p, le, comparability_graph(p), true, mode);
      break;
    }
    case Format::kPerm: {
      const PermutationModel& model = *loaded.model;
      const LinearExtension le = identity(model.pi.size());
      check.holds("orientation", validate_orientation(model.graph,
                                                      model.is_poset));
      verify_side(check, "independent_sets", model.is_poset, le, model.graph,
                  false, mode);
      verify_side(check, "cliques", model.clique_poset, le, model.graph, true,
                  mode);
      break;
    }
    case Format::kGraph: {
      // No orientation is known, so only the oracle itself can be checked.
      const Graph& g = loaded.graph;
      const auto all = oracle::enumerate_is(g, SetMode::kAll);
      const auto maximal = oracle::enumerate_is(g, SetMode::kMaximal);
      const auto cliques = oracle::enumerate_cliques(g, SetMode::kAll);
      const auto maximal_cliques =
          oracle::enumerate_cliques(g, SetMode::kMaximal);
      out << "independent_sets " << all.total << '\n'
          << "maximal_independent_sets " << maximal.total << '\n'
          << "cliques " << cliques.total << '\n'
          << "maximal_cliques " << maximal_cliques.total << '\n';
      std::uint64_t sum = 0;
      for (auto c : all.by_size) sum += c;
      check.holds("size classes sum to total", sum == all.total);
      check.holds("maximal sets are a subset",
                  maximal.total <= all.total &&
                      maximal_cliques.total <= cliques.total);
      break;
    }
  }
  return check.failed() ? 1 : 0;
}

// --- generate and bench -----------------------------------------------------

int run_generate(const RunConfig& config, std::ostream& out) {
  const oracle::GeneratorSpec spec{config.n, config.density, config.seed};
  switch (config.format) {
    case Format::kPoset:
      io::write_poset(out, oracle::random_poset(spec));
      break;
    case Format::kPerm:
      io::write_permutation(out, oracle::random_permutation(spec));
      break;
    case Format::kGraph:
      io::write_graph(out, incomparability_graph(oracle::random_poset(spec)));
      break;
  }
  return 0;
}

int run_bench(const RunConfig& config, std::ostream& out) {
  const CountMode mode =
      CountMode::modulo(config.modulus.value_or(kDefaultBenchModulus));
  const std::size_t largest = config.n ? config.n : 80000;
  const std::array<std::size_t, 4> doubling{largest / 8, largest / 4,
                                            largest / 2, largest};
  // n + m* roughly doubles per step for random permutations (m* ~ n^2/4).
  const std::array<std::size_t, 5> random_sizes{500, 707, 1000, 1414, 2000};

  out << "# family n m_star seconds_per_run\n";
  auto series = [&](BenchFamily family, std::span<const std::size_t> sizes) {
    const auto points = run_scaling_series(family, sizes, mode, config.seed);
    for (const auto& p : points) {
      out << family_name(family) << ' ' << p.n << ' ' << p.m_star << ' '
          << p.seconds << '\n';
    }
    out << "worst_growth " << family_name(family) << ' '
        << worst_growth_ratio(points) << '\n';
  };
  series(BenchFamily::kChain, doubling);
  series(BenchFamily::kAntichain, doubling);
  series(BenchFamily::kRandomPermutation, random_sizes);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kCount:
        return run_count(config, out);
      case Command::kProfile: {
        RunConfig profile = config;
        const bool maximal = config.variant == CliVariant::kMaximal ||
                             config.variant == CliVariant::kMaximalProfile;
        profile.variant =
            maximal ? CliVariant::kMaximalProfile : CliVariant::kProfile;
        return run_count(profile, out);
      }
      case Command::kVerify:
        return run_verify(config, out);
      case Command::kGenerate:
        return run_generate(config, out);
      case Command::kBench:
        return run_bench(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"Exact counting of independent sets and cliques in "
               "cocomparability, comparability and permutation graphs"};
  app.require_subcommand(1);

  RunConfig config;
  const std::map<std::string, Format> formats{
      {"poset", Format::kPoset}, {"perm", Format::kPerm},
      {"graph", Format::kGraph}};
  const std::map<std::string, Target> targets{
      {"independent-sets", Target::kIndependentSets},
      {"cliques", Target::kCliques},
      {"both", Target::kBoth}};
  const std::map<std::string, CliVariant> variants{
      {"all", CliVariant::kAll},
      {"maximal", CliVariant::kMaximal},
      {"by-size", CliVariant::kBySize},
      {"maximal-by-size", CliVariant::kMaximalBySize},
      {"profile", CliVariant::kProfile},
      {"maximal-profile", CliVariant::kMaximalProfile},
      {"polynomial", CliVariant::kPolynomial},
      {"alpha", CliVariant::kAlpha}};

  std::uint64_t modulus = 0;
  auto add_options = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("input", config.input, "instance file, '-' for stdin")
          ->required();
    }
    sub->add_option("--format", config.format, "poset | perm | graph")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--target", config.target,
                    "independent-sets | cliques | both")
        ->transform(CLI::CheckedTransformer(targets, CLI::ignore_case));
    sub->add_option("--variant", config.variant,
                    "all | maximal | by-size | maximal-by-size | profile | "
                    "maximal-profile | polynomial | alpha")
        ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
    sub->add_option("--k", config.k, "set size for by-size variants");
    sub->add_option("--x", config.x, "polynomial point, integer or p/q");
    sub->add_option("--mod", modulus, "count modulo this value")
        ->check(CLI::Range(std::uint64_t{2},
                           std::numeric_limits<std::uint64_t>::max()));
    sub->add_flag("--exclude-empty", config.exclude_empty,
                  "do not count the empty set");
    sub->add_flag("--validate", config.validate, "run full input validation");
    sub->add_option("--seed", config.seed, "generator seed");
    sub->add_option("--n", config.n, "instance size");
    sub->add_option("--density", config.density, "arc probability")
        ->check(CLI::Range(0.0, 1.0));
  };
  const std::array<std::pair<const char*, Command>, 5> commands{
      {{"count", Command::kCount},
       {"profile", Command::kProfile},
       {"verify", Command::kVerify},
       {"generate", Command::kGenerate},
       {"bench", Command::kBench}}};
  const std::map<Command, const char*> help{
      {Command::kCount, "print counts"},
      {Command::kProfile, "print the count of sets of every size"},
      {Command::kVerify, "compare the counters against brute force"},
      {Command::kGenerate, "write a random instance"},
      {Command::kBench, "time the linear-time counter on growing instances"}};
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(command));
    const bool needs_input =
        command != Command::kGenerate && command != Command::kBench;
    add_options(sub, needs_input);
    sub->callback([&config, command = command] { config.command = command; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (modulus != 0) config.modulus = modulus;
  return run(config, out, err);
}

}  // namespace posetcount::cli
