// Copyright 2026 The symgauss Authors
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

#include "doctest.h"
#include "support.hpp"
#include "symgauss/commands.hpp"
#include "symgauss/error.hpp"
#include "symgauss/model_file.hpp"
#include "symgauss/regularity.hpp"

using namespace symgauss;
namespace cli = symgauss::cli;

namespace {

cli::ModelInput fixture(const std::string& name) { return cli::ModelInput::load(testing::data_path(name)); }
cli::DataInput data(const std::string& name) { return cli::DataInput::load(testing::data_path(name)); }

ErrorKind parse_error_kind(std::string_view text) {
  try {
    build_colored_graph(parse_model(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

cli::CommandOutput run(const std::function<cli::CommandOutput()>& f) { return cli::guarded("test", f); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("model files parse in both coloring modes") {
  const auto a = build_colored_graph(fixture("frets.model").spec);
  const auto b = build_colored_graph(fixture("frets_rcop.model").spec);
  CHECK(a == b);
  const auto spec = parse_model(
      "# comment\n[vertices]\nx, y z\n[edges]\nx -- y, y -- z\n[generators]\nx -> z, z -> x\n");
  REQUIRE(spec.generators.has_value());
  CHECK(spec.generators->front().images() == std::vector<int>{2, 1, 0});
  CHECK(build_colored_graph(spec).vertex_coloring() == Partition::from_blocks(3, {{0, 2}, {1}}));
}

TEST_CASE("model file errors") {
  std::string bad = "[vertices]\na b\n[edges]\na -- c\n[vertex_classes]\na b\n[edge_classes]\na -- c\n";
  CHECK(parse_error_kind(bad) == ErrorKind::ValidationError);
  CHECK(parse_error_kind("[vertices]\na b\n[bogus]\n") == ErrorKind::ParseError);
  CHECK(parse_error_kind("a b\n") == ErrorKind::ParseError);
  CHECK(parse_error_kind("[vertices]\na b\n[edges]\na -- b\n[vertex_classes]\na\nb\n") == ErrorKind::ValidationError);
  CHECK(parse_error_kind("[vertices]\na b\n[vertex_classes]\na\nb\n[generators]\n(a b)\n") ==
        ErrorKind::ValidationError);
  CHECK(parse_error_kind("[vertices]\na b c\n[edges]\na -- b\n[generators]\n(a c)\n") == ErrorKind::NotAutomorphism);
  try {
    parse_model("[vertices]\na b\n[edges]\na b\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("parse, serialize, parse is the identity") {
  for (const char* name : {"frets.model", "frets_rcop.model", "marks.model", "behrens_fisher.model"}) {
    const auto spec = fixture(name).spec;
    CHECK(parse_model(serialize_model(spec)) == spec);
  }
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_colored_graph(rng, 1, 8);
    const auto spec = testing::spec_from(g, testing::random_partition(rng, g.num_vertices()));
    const auto back = parse_model(serialize_model(spec));
    CHECK(back == spec);
    CHECK(build_colored_graph(back) == g);
  }
}

TEST_CASE("partition strings") {
  const auto g = build_colored_graph(fixture("frets.model").spec);
  CHECK(resolve_partition("singletons", g) == Partition::singletons(4));
  CHECK(resolve_partition("classes", g) == g.vertex_coloring());
  CHECK(resolve_partition("{L2,L1},{B1,B2}", g) == g.vertex_coloring());
  CHECK_THROWS_AS(resolve_partition("{B1,B2}{B2,L1,L2}", g), Error);
  CHECK_THROWS_AS(resolve_partition("{B1,B2", g), Error);
}

TEST_CASE("csv columns are matched by name") {
  const std::vector<std::string> v = {"a", "b"};
  const auto d = parse_csv("b,a\n1,2\n3,4\n", v);
  CHECK(d.rows()(0, 0) == 2);
  CHECK(d.rows()(1, 1) == 3);
  auto kind = [&](std::string_view text) {
    try {
      parse_csv(text, v);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind("a\n1\n2\n") == ErrorKind::ColumnMismatch);
  CHECK(kind("a,b,c\n1,2,3\n4,5,6\n") == ErrorKind::ColumnMismatch);
  CHECK(kind("a,a\n1,2\n3,4\n") == ErrorKind::ColumnMismatch);
  CHECK(kind("a,b\n1,x\n3,4\n") == ErrorKind::ParseError);
  CHECK(kind("a,b\n1,2,3\n3,4\n") == ErrorKind::ParseError);
}

TEST_CASE("check command verdicts") {
  const auto ok = cli::cmd_check(fixture("frets.model"), std::nullopt);
  CHECK(ok.exit_code == cli::kExitOk);
  CHECK(ok.report["result"]["mle_equals_ls"] == true);

  const auto bad = cli::cmd_check(fixture("frets.model"), std::string("{B1,B2}{L1}{L2}"));
  CHECK(bad.report["result"]["mle_equals_ls"] == false);
  const auto& w = bad.report["result"]["mean_witnesses"];
  REQUIRE(w.size() == 1);
  CHECK(w[0]["kind"] == "neighbor_count");
  CHECK(w[0].contains("edge_class"));

  const auto overlap = run([] { return cli::cmd_check(fixture("frets.model"), std::string("{B1,B2}{B2,L1,L2}")); });
  CHECK(overlap.exit_code == cli::kExitValidation);
  CHECK(overlap.report["error"]["kind"] == "ValidationError");
}

TEST_CASE("refine and orbits commands") {
  const auto r = cli::cmd_refine(fixture("frets.model"));
  CHECK(r.report["result"]["refinement"] == "{B1,B2}{L1,L2}");
  CHECK(r.report["result"]["valid_partition_count"] == 2);

  auto mono = fixture("frets.model");
  mono.spec.vertex_classes = std::vector<std::vector<std::string>>{{"B1", "B2", "L1", "L2"}};
  CHECK(cli::cmd_refine(mono).report["result"]["refinement"] == "{B1,B2}{L1,L2}");

  const auto bf = cli::cmd_refine(fixture("behrens_fisher.model"));
  CHECK(bf.report["result"]["refinement"] == "{x}{y}");

  const auto o = cli::cmd_orbits(fixture("marks.model"));
  CHECK(o.exit_code == cli::kExitOk);
  CHECK(o.report["result"]["vertex_classes"] == "{al}{an,ve}{me,st}");
  CHECK(o.report["result"]["vertex_regular"] == true);

  auto broken = fixture("frets_rcop.model");
  broken.spec.generators->push_back(Permutation::from_cycles(broken.spec.vertices, {{"B1", "L1"}}));
  const auto e = run([&] { return cli::cmd_orbits(broken); });
  CHECK(e.exit_code == cli::kExitValidation);
  CHECK(e.report["error"]["kind"] == "NotAutomorphism");
  CHECK(e.report["error"]["message"].get<std::string>().find("generator 1") != std::string::npos);
}

TEST_CASE("fit and lrt commands") {
  const auto f = cli::cmd_fit(fixture("marks.model"), data("marks.csv"), std::string("singletons"));
  CHECK(f.exit_code == cli::kExitOk);
  CHECK(f.report["result"]["method"] == "closed_form_mean");
  CHECK(f.report["result"]["mu_hat"]["al"].get<double>() == doctest::Approx(50.6023).epsilon(1e-5));

  const auto missing =
      run([] { return cli::cmd_fit(fixture("frets.model"), cli::DataInput::from_text("x.csv", "B1,B2,L1\n1,2,3\n4,5,6\n"), std::nullopt); });
  CHECK(missing.exit_code == cli::kExitValidation);
  CHECK(missing.report["error"]["kind"] == "ColumnMismatch");

  const auto same = cli::cmd_lrt(fixture("frets.model"), data("frets.csv"), std::string("classes"), std::string("classes"));
  CHECK(same.report["result"]["lrt"]["statistic"] == 0.0);
  CHECK(same.report["result"]["lrt"]["p_value"] == 1.0);

  const auto nonnested = run([] {
    return cli::cmd_lrt(fixture("frets.model"), data("frets.csv"), std::string("singletons"), std::string("classes"));
  });
  CHECK(nonnested.exit_code == cli::kExitValidation);
  CHECK(nonnested.report["error"]["kind"] == "NonNestedModels");
}

TEST_CASE("oracle command") {
  const auto ok = cli::cmd_oracle(fixture("frets.model"), std::nullopt, 20, 1);
  CHECK(ok.exit_code == cli::kExitOk);
  for (const char* k : {"sampled_verdict", "generator_verdict", "combinatorial_verdict"}) CHECK(ok.report["result"][k] == true);
  CHECK(ok.report["rng"]["algorithm"] == std::string(kRngAlgorithm));

  const auto no = cli::cmd_oracle(fixture("frets.model"), std::string("{B1,B2}{L1}{L2}"), 20, 1);
  CHECK(no.exit_code == cli::kExitOk);
  for (const char* k : {"sampled_verdict", "generator_verdict", "combinatorial_verdict"}) CHECK(no.report["result"][k] == false);

  const auto s = cli::cmd_oracle(fixture("marks.model"), std::string("singletons"), 20, 1);
  CHECK(s.report["result"]["combinatorial_verdict"] == true);
  CHECK(s.report["result"]["consistent"] == true);
}

TEST_CASE("reports are byte identical across runs") {
  const auto a = cli::cmd_oracle(fixture("marks.model"), std::string("classes"), 25, 99);
  const auto b = cli::cmd_oracle(fixture("marks.model"), std::string("classes"), 25, 99);
  CHECK(cli::render_structured(a.report) == cli::render_structured(b.report));
  const auto fa = cli::cmd_fit(fixture("frets.model"), data("frets.csv"), std::nullopt);
  const auto fb = cli::cmd_fit(fixture("frets.model"), data("frets.csv"), std::nullopt);
  CHECK(cli::render_structured(fa.report) == cli::render_structured(fb.report));
  CHECK(cli::render_human(fa.report) == cli::render_human(fb.report));
}

TEST_CASE("exit code mapping") {
  CHECK(cli::exit_code_for(ErrorKind::ParseError) == 2);
  CHECK(cli::exit_code_for(ErrorKind::ColumnMismatch) == 2);
  CHECK(cli::exit_code_for(ErrorKind::NotConverged) == 3);
  CHECK(cli::exit_code_for(ErrorKind::InternalInconsistency) == 4);
}

}  // TEST_SUITE
