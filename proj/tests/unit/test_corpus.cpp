#include <doctest.h>

#include "hlsbench/corpus.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;
using hlsbench::testing::copy_tree;
using hlsbench::testing::fixture_dir;

TEST_SUITE_BEGIN("corpus");

TEST_CASE("empty directory loads as empty corpus") {
  TempDir tmp("corpus-empty");
  Corpus corpus = load_corpus(tmp.path());
  CHECK(corpus.tasks.empty());
}

TEST_CASE("fixture corpus loads 10 tasks in id order") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  REQUIRE(corpus.tasks.size() == 10);
  for (std::size_t i = 0; i < corpus.tasks.size(); ++i) {
    char expected[16];
    std::snprintf(expected, sizeof(expected), "design_%03zu", i + 1);
    CHECK(corpus.tasks[i].id == expected);
  }
  CHECK(corpus.manifest_version == "1.0.0");
  CHECK(corpus.tasks[3].dse_spec_path.has_value());   // design_004 carries dse.yaml
  CHECK(!corpus.tasks[0].dse_spec_path.has_value());
}

TEST_CASE("loading twice yields identical corpora") {
  Corpus a = load_corpus(fixture_dir() / "corpus");
  Corpus b = load_corpus(fixture_dir() / "corpus");
  CHECK(a == b);
}

TEST_CASE("missing testbench reports task and file") {
  TempDir tmp("corpus-missing");
  copy_tree(fixture_dir() / "corpus", tmp.path());
  fs::remove(tmp.path() / "design_003" / "testbench.cpp");
  try {
    load_corpus(tmp.path());
    FAIL("expected MissingFile");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingFile);
    CHECK(contains(e.what(), "design_003"));
    CHECK(contains(e.what(), "testbench"));
  }
}

TEST_CASE("signature absent from reference is rejected at load") {
  TempDir tmp("corpus-sig");
  copy_tree(fixture_dir() / "corpus", tmp.path());
  write_file(tmp.path() / "design_002" / "meta.yaml",
             "top_function: \"int missing_fn(int z)\"\n");
  try {
    load_corpus(tmp.path());
    FAIL("expected SignatureMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SignatureMismatch);
    CHECK(contains(e.what(), "design_002"));
  }
}

TEST_CASE("unsupported manifest major version is rejected") {
  TempDir tmp("corpus-manifest");
  copy_tree(fixture_dir() / "corpus", tmp.path());
  write_file(tmp.path() / "manifest.yaml", "version: \"2.0.0\"\n");
  try {
    load_corpus(tmp.path());
    FAIL("expected ManifestVersion");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ManifestVersion);
  }
}

TEST_CASE("nonexistent root is an IO error") {
  try {
    load_corpus("/nonexistent/corpus/root");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}

TEST_CASE("signature matching tolerates whitespace differences") {
  CHECK(normalize_signature("int  top ( int a )") == normalize_signature("int top(int a)"));
  CHECK(normalize_signature("void f(const int a[16],\n    int b)") ==
        normalize_signature("void f(const int a[16], int b)"));
}

TEST_CASE("validate_task on clean fixtures yields no findings") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  for (const BenchmarkTask& task : corpus.tasks) {
    ValidationReport findings = validate_task(task);
    CHECK_MESSAGE(findings.empty(), task.id);
  }
}

TEST_CASE("validate_task is pure") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  BenchmarkTask task = corpus.tasks[0];
  task.instruction.clear();
  ValidationReport first = validate_task(task);
  ValidationReport second = validate_task(task);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].code == second[i].code);
    CHECK(first[i].message == second[i].message);
  }
}

TEST_CASE("validate_task flags broken tasks") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  BenchmarkTask task = corpus.tasks[0];

  SUBCASE("testbench never calls the top function") {
    task.testbench_source = "int main() { return 0; }\n";
    ValidationReport findings = validate_task(task);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == "TB_NO_CALL");
    CHECK(findings[0].severity == Severity::Error);
  }
  SUBCASE("empty instruction") {
    task.instruction = "  \n";
    ValidationReport findings = validate_task(task);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == "EMPTY_INSTRUCTION");
    CHECK(findings[0].severity == Severity::Error);
  }
  SUBCASE("testbench without the return-0 convention warns") {
    task.testbench_source =
        "void vec_add(const int*, const int*, int*);\n"
        "int main() { int a[16], b[16], o[16]; vec_add(a, b, o); }\n";
    ValidationReport findings = validate_task(task);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == "TB_NO_RETURN0");
    CHECK(findings[0].severity == Severity::Warning);
  }
  SUBCASE("bad id") {
    task.id = "task_one";
    ValidationReport findings = validate_task(task);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == "BAD_ID");
  }
}

TEST_CASE("write_corpus round-trips through load_corpus") {
  Corpus original = load_corpus(fixture_dir() / "corpus");
  TempDir tmp("corpus-rt");
  write_corpus(original, tmp / "copy");
  Corpus reloaded = load_corpus(tmp / "copy");
  CHECK(reloaded == original);
}

TEST_CASE("write_corpus rejects duplicate ids") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  corpus.tasks.push_back(corpus.tasks.front());
  TempDir tmp("corpus-dup");
  try {
    write_corpus(corpus, tmp / "dup");
    FAIL("expected DuplicateId");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateId);
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("prompts");

TEST_CASE("describe_design prompt embeds the code verbatim") {
  std::string prompt = render_authoring_prompt(AuthoringPromptKind::DescribeDesign,
                                               {{"code", "int f(){return 0;}"}});
  CHECK(contains(prompt, "Describe the functionality of the HLS design"));
  CHECK(contains(prompt, "int f(){return 0;}"));
}

TEST_CASE("port_verilog prompt embeds all three inputs") {
  std::string prompt = render_authoring_prompt(
      AuthoringPromptKind::PortVerilog, {{"prompt", "An up counter."},
                                         {"reference_code", "module ctr(); endmodule"},
                                         {"testbench", "module tb(); endmodule"}});
  CHECK(contains(prompt, "generate the reference design and the testbench"));
  CHECK(contains(prompt, "An up counter."));
  CHECK(contains(prompt, "module ctr(); endmodule"));
  CHECK(contains(prompt, "module tb(); endmodule"));
  CHECK(contains(prompt, "It should also always return 0"));
}

TEST_CASE("port_verilog with empty inputs is MissingPlaceholder") {
  try {
    render_authoring_prompt(AuthoringPromptKind::PortVerilog, {});
    FAIL("expected MissingPlaceholder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingPlaceholder);
  }
}

TEST_CASE("codegen prompt carries the instruction and the requirements") {
  BenchmarkTask task;
  task.instruction = "Add two ints";
  std::string prompt = render_codegen_prompt(task);
  CHECK(contains(prompt, "Output only synthesizable C++ code"));
  CHECK(contains(prompt, "Insert suitable HLS pragmas"));
  CHECK(contains(prompt, "Add two ints"));

  int numbered = 0;
  for (const std::string& line : split_lines(prompt)) {
    std::string t = trim(line);
    if (t.size() > 2 && std::isdigit(static_cast<unsigned char>(t[0])) && t[1] == '.') {
      ++numbered;
    }
  }
  CHECK(numbered == 5);
}

TEST_CASE("codegen prompt stays well-formed for an empty instruction") {
  BenchmarkTask task;
  std::string prompt = render_codegen_prompt(task);
  CHECK(contains(prompt, "### Instruction:"));
  CHECK(contains(prompt, "### Response:"));
}

TEST_SUITE_END();
