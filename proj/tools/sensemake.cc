// Copyright 2026 The Sensemaking Authors.
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

// sensemake: scene graphs + knowledge base -> best hypothesis set.
//
// Exit codes: 0 success, 1 bad input or search too large, 2 the chosen set
// failed re-verification (a bug).

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "sensemaking/export.h"
#include "sensemaking/hypeval.h"
#include "sensemaking/hypgen.h"
#include "sensemaking/ingest.h"
#include "sensemaking/solver.h"

namespace sensemaking {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

struct Flags {
  std::string scene_graphs;
  SceneGraphFormat format = SceneGraphFormat::kCanonical;
  std::string kb;
  KnowledgeBaseFormat kb_format = KnowledgeBaseFormat::kCanonicalTsv;
  std::string config;
  int max_path_len = kDefaultMaxPathLength;
  double exact_match_r = kDefaultExactMatchValue;
  SolverStrategy solver = SolverStrategy::kLocalSearch;
  std::string weights = "1,1,1";
  bool pareto = false;
  std::string out;
  std::string dot;
  std::uint64_t seed = SolverOptions{}.seed;
  int workers = 1;
};

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return kExitInput;
}

absl::StatusOr<ObjectiveWeights> ParseWeights(const std::string& text) {
  const std::vector<std::string> parts = absl::StrSplit(text, ',');
  double w[3];
  if (parts.size() != 3) {
    return absl::InvalidArgumentError("--weights needs three comma-separated numbers");
  }
  for (int i = 0; i < 3; ++i) {
    if (!absl::SimpleAtod(parts[i], &w[i])) {
      return absl::InvalidArgumentError(absl::StrCat("bad weight '", parts[i], "'"));
    }
  }
  ObjectiveWeights weights{w[0], w[1], w[2]};
  if (absl::Status s = weights.Validate(); !s.ok()) return s;
  return weights;
}

absl::Status WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  return absl::OkStatus();
}

void PrintObjectives(const SolutionSet& s) {
  std::cout << absl::StrFormat(
      "objectives: connectivity=%d density=%.4f support=%.4f scalar=%.4f\n",
      s.objectives.connectivity, s.objectives.density, s.objectives.support,
      s.scalar_score);
}

int Run(const Flags& flags) {
  absl::StatusOr<ObjectiveWeights> weights = ParseWeights(flags.weights);
  if (!weights.ok()) return Fail(weights.status());

  CategoryConfig config = CategoryConfig::Default();
  if (!flags.config.empty()) {
    absl::StatusOr<std::string> text = ReadFileToString(flags.config);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<CategoryConfig> parsed = ParseCategoryConfig(*text);
    if (!parsed.ok()) return Fail(parsed.status());
    config = *std::move(parsed);
  }

  absl::StatusOr<std::string> kb_text = ReadFileToString(flags.kb);
  if (!kb_text.ok()) return Fail(kb_text.status());
  absl::StatusOr<KnowledgeBase> kb =
      LoadKnowledgeBase(*kb_text, flags.kb_format, config);
  if (!kb.ok()) return Fail(kb.status());

  absl::StatusOr<std::string> sg_text = ReadFileToString(flags.scene_graphs);
  if (!sg_text.ok()) return Fail(sg_text.status());
  absl::StatusOr<SceneGraphSequence> parsed =
      ParseSceneGraphs(*sg_text, flags.format);
  if (!parsed.ok()) return Fail(parsed.status());
  const SceneGraphSequence sequence = LinkConcepts(*std::move(parsed), *kb);

  GenerationOptions gen;
  gen.max_path_len = flags.max_path_len;
  gen.exact_match_r = flags.exact_match_r;
  const HypothesisPool pool(GenerateAll(sequence, *kb, gen));

  std::map<HypothesisKind, int> counts;
  for (const Hypothesis& h : pool.hypotheses()) ++counts[h.kind];
  std::cout << absl::StrFormat(
      "hypotheses: is=%d sequence=%d affective=%d\n",
      counts[HypothesisKind::kReferentialIs],
      counts[HypothesisKind::kCausalSequence], counts[HypothesisKind::kAffective]);

  SolverOptions options;
  options.strategy = flags.solver;
  options.weights = *weights;
  options.seed = flags.seed;
  options.workers = flags.workers;
  options.collect_pareto = flags.pareto;
  absl::StatusOr<SolveResult> result = Solve(pool, sequence, options);
  if (!result.ok()) return Fail(result.status());
  const SolutionSet& best = result->best;

  absl::StatusOr<std::vector<FeasibilityViolation>> violations =
      CheckFeasible(best.accepted, pool, sequence);
  if (!violations.ok() || !violations->empty()) {
    std::cerr << "internal error: solver returned an infeasible set\n";
    if (violations.ok()) {
      for (const FeasibilityViolation& v : *violations) {
        std::cerr << "  " << v.message << "\n";
      }
    }
    return kExitInvariant;
  }

  PrintObjectives(best);
  absl::StatusOr<std::vector<bool>> mask = pool.MaskOf(best.accepted);
  std::cout << "accepted: " << best.accepted.size() << "\n";
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!(*mask)[i]) continue;
    std::cout << absl::StrFormat("  %-40s %s\n", pool.at(i).id,
                                 FormatDecimal(EffectiveScore(pool, i, *mask)));
  }
  if (flags.pareto) {
    std::cout << "pareto front: " << result->pareto_front.size() << "\n";
    for (const SolutionSet& s : result->pareto_front) {
      std::cout << absl::StrFormat("  connectivity=%d density=%.4f support=%.4f\n",
                                   s.objectives.connectivity,
                                   s.objectives.density, s.objectives.support);
    }
  }

  if (!flags.out.empty() || !flags.dot.empty()) {
    absl::StatusOr<SensemakingGraph> graph =
        BuildSensemakingGraph(sequence, pool, best);
    if (!graph.ok()) return Fail(graph.status());
    if (!flags.out.empty()) {
      if (absl::Status s = WriteFile(flags.out, ExportJson(*graph)); !s.ok()) {
        return Fail(s);
      }
    }
    if (!flags.dot.empty()) {
      if (absl::Status s = WriteFile(flags.dot, ExportDot(*graph)); !s.ok()) {
        return Fail(s);
      }
    }
  }
  return kExitOk;
}

}  // namespace
}  // namespace sensemaking

int main(int argc, char** argv) {
  using sensemaking::Flags;
  Flags flags;
  CLI::App app{"Infer a coherent interpretation of an image sequence."};
  app.add_option("--scene-graphs", flags.scene_graphs, "Scene-graph file")
      ->required();
  app.add_option("--format", flags.format, "Scene-graph format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, sensemaking::SceneGraphFormat>{
              {"canonical", sensemaking::SceneGraphFormat::kCanonical},
              {"visual-genome", sensemaking::SceneGraphFormat::kVisualGenome}},
          CLI::ignore_case));
  app.add_option("--kb", flags.kb, "Knowledge-base file")->required();
  app.add_option("--kb-format", flags.kb_format, "Knowledge-base format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, sensemaking::KnowledgeBaseFormat>{
              {"tsv", sensemaking::KnowledgeBaseFormat::kCanonicalTsv},
              {"conceptnet", sensemaking::KnowledgeBaseFormat::kConceptNetDump}},
          CLI::ignore_case));
  app.add_option("--config", flags.config, "Relation category config (JSON)");
  app.add_option("--max-path-len", flags.max_path_len, "Longest KB path")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--exact-match-r", flags.exact_match_r,
                 "Evidence for a shared participant")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--solver", flags.solver, "exhaustive or local-search")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, sensemaking::SolverStrategy>{
              {"exhaustive", sensemaking::SolverStrategy::kExhaustive},
              {"local-search", sensemaking::SolverStrategy::kLocalSearch}},
          CLI::ignore_case));
  app.add_option("--weights", flags.weights, "w1,w2,w3");
  app.add_flag("--pareto", flags.pareto, "Report the Pareto front");
  app.add_option("--out", flags.out, "Write the merged graph as JSON");
  app.add_option("--dot", flags.dot, "Write the merged graph as Graphviz DOT");
  app.add_option("--seed", flags.seed, "Local-search seed");
  app.add_option("--workers", flags.workers, "Exhaustive-search threads")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sensemaking::kExitInput;
  }
  return sensemaking::Run(flags);
}
