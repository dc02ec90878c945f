#include <doctest.h>

#include <sstream>

#include "mds/commands.hpp"
#include "mds/error.hpp"
#include "support.hpp"

using namespace mds;
namespace fs = std::filesystem;

namespace {

RunConfig fixture_config(const fs::path& out) {
  RunConfig cfg;
  cfg.corpus_root = testing::kFixtures / "corpus";
  cfg.output_dir = out;
  return cfg;
}

std::string run_tree(const fs::path& root) {
  std::string all;
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += fs::relative(f, root).string() + "\n" + testing::slurp(f);
  return all;
}

}  // namespace

TEST_CASE("config resolution") {
  RunConfig cfg = fixture_config("out");
  cfg.measures = {"NoSuchMeasure"};
  try {
    cfg.resolve();
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(exit_code_for(e.kind()) == kExitConfig);
  }

  RunConfig h2 = fixture_config("out");
  h2.h_levels = {2};
  h2.measures = {"Access-h3"};
  CHECK_THROWS_AS(h2.resolve(), Error);

  RunConfig rate = fixture_config("out");
  rate.compression_rate = 1.5;
  CHECK_THROWS_AS(rate.resolve(), Error);

  RunConfig other = fixture_config("out");
  other.language = "xx";
  CHECK_THROWS_AS(other.resolve(), Error);

  RunConfig ok = fixture_config("out");
  ok.resolve();
  CHECK(ok.selected_measures().size() == 39);
  CHECK(ok.systems().size() == 78);
  ok.h_levels = {2};
  CHECK(ok.selected_measures().size() < 39);
}

TEST_CASE("fingerprint") {
  RunConfig a = fixture_config("out");
  a.resolve();
  RunConfig b = a;
  b.cluster = "c01_flood";
  CHECK(a.fingerprint() == b.fingerprint());
  RunConfig c = a;
  c.seed = 2;
  CHECK(a.fingerprint() != c.fingerprint());
  CHECK(a.fingerprint().size() == 16);
}

TEST_CASE("summarize matches the reviewed extract") {
  testing::TempDir tmp;
  RunConfig cfg = fixture_config(tmp.path());
  cfg.cluster = "c01_flood";
  cfg.network_model = "noun";
  cfg.measures = {"Dg"};
  std::ostringstream log;
  REQUIRE(cmd_summarize(cfg, log) == kExitOk);
  cfg.resolve();
  const fs::path txt = run_directory(cfg) / "summaries" / "c01_flood" / "noun" / "plain" / "Dg.txt";
  CHECK(testing::slurp(txt) == testing::slurp(testing::kGolden / "c01_flood-noun-Dg.txt"));
}

TEST_CASE("runs are reproducible byte for byte") {
  testing::TempDir one, two;
  for (const auto* dir : {&one, &two}) {
    RunConfig cfg = fixture_config(dir->path());
    cfg.measures = {"Dg", "PR-w", "GAccess", "AbsT"};
    cfg.ard = "both";
    cfg.random_runs = 5;
    std::ostringstream log;
    REQUIRE(cmd_summarize(cfg, log) == kExitOk);
    REQUIRE(cmd_evaluate(cfg, log) == kExitOk);
  }
  CHECK(run_tree(one.path()) == run_tree(two.path()));
}

TEST_CASE("evaluation without references") {
  testing::TempDir tmp;
  RunConfig cfg = fixture_config(tmp.path());
  cfg.corpus_root = testing::kFixtures;
  cfg.measures = {"Dg"};
  std::ostringstream log;
  try {
    cmd_evaluate(cfg, log);
    FAIL("expected a data error");
  } catch (const Error& e) {
    CHECK(exit_code_for(e.kind()) == kExitData);
    CHECK(std::string(e.what()).find("unevaluable") != std::string::npos);
  }
}

TEST_CASE("inspect writes the debug tables") {
  testing::TempDir tmp;
  RunConfig cfg = fixture_config(tmp.path());
  cfg.corpus_root = testing::kFixtures;
  cfg.measures = {"Dg", "SP"};
  std::ostringstream log;
  REQUIRE(cmd_inspect(cfg, "brazil", log) == kExitOk);
}

TEST_CASE("unknown cluster") {
  testing::TempDir tmp;
  RunConfig cfg = fixture_config(tmp.path());
  cfg.cluster = "nope";
  std::ostringstream log;
  CHECK_THROWS_AS(cmd_summarize(cfg, log), Error);
}

TEST_CASE("error lines") {
  CHECK(error_line(Error(ErrorKind::Data, "bad\nthing")) == "error: data: bad thing");
}
