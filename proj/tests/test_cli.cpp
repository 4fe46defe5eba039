#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wordnet_fixture.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "summa_cli_test";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

int run(const std::string& args, const fs::path& stdout_to = {}) {
  std::string cmd = std::string(SUMMA_CLI_PATH) + " " + args;
  if (!stdout_to.empty()) cmd += " > " + stdout_to.string();
  cmd += " 2> " + (kWork / "stderr.log").string();
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

struct Workspace {
  Workspace() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
    fixture::write_mini_wordnet(kWork / "wn");
    spit(kWork / "doc.txt",
         "The flood damaged many homes across the state. Rescue teams worked through the night "
         "to reach stranded villagers. Officials said the flood costs would exceed early "
         "estimates. Helicopters dropped food and medicine to remote mountain villages. The "
         "government promised quick compensation for every family. Weather forecasts warned of "
         "more heavy rain in the coming days. Roads remained blocked by landslides in three "
         "districts. Hospitals treated hundreds of injured people after the flood.\n");
  }
};

const Workspace& workspace() {
  static Workspace w;
  return w;
}

}  // namespace

TEST_CASE("summarize respects the word budget and writes a sidecar") {
  workspace();
  const int rc = run("summarize --method lsa:lsass --length 30 " + (kWork / "doc.txt").string() +
                     " --output " + (kWork / "s1.txt").string());
  REQUIRE(rc == 0);
  const std::string summary = slurp(kWork / "s1.txt");
  CHECK_FALSE(summary.empty());
  // word budget: count whitespace-separated tokens
  std::istringstream ss(summary);
  int words = 0;
  std::string tok;
  while (ss >> tok) ++words;
  CHECK(words <= 30);

  const std::string sidecar = slurp(kWork / "s1.txt.json");
  CHECK(sidecar.find("\"selected\"") != std::string::npos);
  CHECK(sidecar.find("\"word_count\"") != std::string::npos);
}

TEST_CASE("identical inputs produce byte-identical outputs") {
  workspace();
  const std::string base = "summarize --method lsa:lsacs --length 40 " +
                           (kWork / "doc.txt").string() + " --output ";
  REQUIRE(run(base + (kWork / "d1.txt").string()) == 0);
  REQUIRE(run(base + (kWork / "d2.txt").string()) == 0);
  CHECK(slurp(kWork / "d1.txt") == slurp(kWork / "d2.txt"));
  CHECK(slurp(kWork / "d1.txt.json") == slurp(kWork / "d2.txt.json"));
}

TEST_CASE("the lexnet pipeline runs with the reference configuration") {
  workspace();
  const int rc = run("summarize --method lexnet --centrality subgraph --wsd simple --theta 0.10 "
                     "--length 40 --wordnet " +
                     (kWork / "wn").string() + " " + (kWork / "doc.txt").string() + " --output " +
                     (kWork / "lx.txt").string());
  REQUIRE(rc == 0);
  CHECK_FALSE(slurp(kWork / "lx.txt").empty());
}

TEST_CASE("the ilp pipeline runs with hybrid relevance") {
  workspace();
  const int rc = run("summarize --method ilp --relevance hybrid:subgraph+betweenness "
                     "--redundancy lexnet --length 40 --wordnet " +
                     (kWork / "wn").string() + " " + (kWork / "doc.txt").string() + " --output " +
                     (kWork / "ilp.txt").string());
  REQUIRE(rc == 0);
  CHECK_FALSE(slurp(kWork / "ilp.txt").empty());
}

TEST_CASE("config errors exit with 2") {
  workspace();
  CHECK(run("summarize --method nonsense " + (kWork / "doc.txt").string()) == 2);
  CHECK(run("summarize --method lexnet " + (kWork / "doc.txt").string()) == 2);  // no --wordnet
  CHECK(run("summarize --method hybrid --weights 1,2 " + (kWork / "doc.txt").string()) == 2);
}

TEST_CASE("io errors exit with 3") {
  workspace();
  CHECK(run("summarize --method hybrid " + (kWork / "missing.txt").string()) == 3);
  CHECK(run("evaluate --system " + (kWork / "doc.txt").string() + " --reference " +
            (kWork / "nothere.txt").string()) == 3);
}

TEST_CASE("self-evaluation yields F = 1 for every metric") {
  workspace();
  const int rc = run("evaluate --system " + (kWork / "doc.txt").string() + " --reference " +
                     (kWork / "doc.txt").string() + " --limit-words 0",
                     kWork / "eval.csv");
  REQUIRE(rc == 0);
  std::istringstream csv(slurp(kWork / "eval.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "metric,precision,recall,f,ci_low,ci_high");
  int rows = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.find(",1.000000,1.000000,1.000000") != std::string::npos);
  }
  CHECK(rows == 6);
}

TEST_CASE("evaluate accepts several references") {
  workspace();
  spit(kWork / "ref1.txt", "rescue teams worked through the night\n");
  spit(kWork / "ref2.txt", "the flood damaged homes\n");
  spit(kWork / "ref3.txt", "roads remained blocked\n");
  const int rc = run("evaluate --system " + (kWork / "doc.txt").string() + " --reference " +
                     (kWork / "ref1.txt").string() + " --reference " +
                     (kWork / "ref2.txt").string() + " --reference " +
                     (kWork / "ref3.txt").string() + " --limit-words 0",
                     kWork / "eval3.csv");
  REQUIRE(rc == 0);
  CHECK(slurp(kWork / "eval3.csv").find("ROUGE-1,") != std::string::npos);
}

TEST_CASE("corpus runs produce per-document rows and an aggregate") {
  workspace();
  spit(kWork / "corpus/docs/a.txt",
       "The flood damaged the town. Rescue teams arrived by night. Officials counted the "
       "costs. Roads were blocked everywhere.\n");
  spit(kWork / "corpus/docs/b.txt",
       "Hospitals treated injured people. Volunteers collected supplies quickly. The army "
       "brought boats and trucks. Weather reports warned of rain.\n");
  spit(kWork / "corpus/models/a.txt", "The flood damaged the town. Rescue teams arrived.\n");
  spit(kWork / "corpus/models/b.txt", "Hospitals treated injured people. The army helped.\n");

  const int rc = run("corpus --docs " + (kWork / "corpus/docs").string() + " --models " +
                     (kWork / "corpus/models").string() +
                     " --method hybrid --length 20 --limit-words 0 --ci --seed 7",
                     kWork / "corpus.csv");
  REQUIRE(rc == 0);
  const std::string csv = slurp(kWork / "corpus.csv");
  CHECK(csv.find("a,ROUGE-1,") != std::string::npos);
  CHECK(csv.find("b,ROUGE-1,") != std::string::npos);
  CHECK(csv.find("AGGREGATE,ROUGE-1,") != std::string::npos);

  // aggregate F equals the mean of the two per-document F values
  std::istringstream in(csv);
  std::string line;
  double fa = -1, fb = -1, fagg = -1, lo = -1, hi = -1;
  while (std::getline(in, line)) {
    auto cols = [&] {
      std::vector<std::string> out;
      std::stringstream ls(line);
      std::string c;
      while (std::getline(ls, c, ',')) out.push_back(c);
      return out;
    }();
    if (cols.size() >= 5 && cols[1] == "ROUGE-1") {
      if (cols[0] == "a") fa = std::stod(cols[4]);
      if (cols[0] == "b") fb = std::stod(cols[4]);
      if (cols[0] == "AGGREGATE" && cols.size() >= 7) {
        fagg = std::stod(cols[4]);
        lo = std::stod(cols[5]);
        hi = std::stod(cols[6]);
      }
    }
  }
  REQUIRE(fa >= 0);
  REQUIRE(fb >= 0);
  REQUIRE(fagg >= 0);
  CHECK(fagg == doctest::Approx((fa + fb) / 2).epsilon(1e-5));
  CHECK(lo <= fagg + 1e-9);
  CHECK(hi >= fagg - 1e-9);

  // deterministic repeat
  REQUIRE(run("corpus --docs " + (kWork / "corpus/docs").string() + " --models " +
              (kWork / "corpus/models").string() +
              " --method hybrid --length 20 --limit-words 0 --ci --seed 7",
              kWork / "corpus2.csv") == 0);
  CHECK(slurp(kWork / "corpus.csv") == slurp(kWork / "corpus2.csv"));
}

TEST_CASE("corpus continues past failing documents with a nonzero exit") {
  workspace();
  spit(kWork / "broken/docs/good.txt", "A fine sentence lives here. Another one follows.\n");
  spit(kWork / "broken/docs/empty.txt", "");
  spit(kWork / "broken/models/good.txt", "A fine sentence.\n");
  const int rc = run("corpus --docs " + (kWork / "broken/docs").string() + " --models " +
                     (kWork / "broken/models").string() + " --method hybrid --limit-words 0",
                     kWork / "broken.csv");
  CHECK(rc == 1);
  CHECK(slurp(kWork / "broken.csv").find("good,ROUGE-1,") != std::string::npos);
}

TEST_CASE("config files feed defaults and reject unknown keys") {
  workspace();
  spit(kWork / "run.conf", "method = lsa:lsass\nlength = 25\n");
  const int rc = run("summarize --config " + (kWork / "run.conf").string() + " " +
                     (kWork / "doc.txt").string() + " --output " + (kWork / "c1.txt").string());
  REQUIRE(rc == 0);
  std::istringstream ss(slurp(kWork / "c1.txt"));
  int words = 0;
  std::string tok;
  while (ss >> tok) ++words;
  CHECK(words <= 25);

  spit(kWork / "bad.conf", "method = hybrid\nnot_a_key = 1\n");
  CHECK(run("summarize --config " + (kWork / "bad.conf").string() + " " +
            (kWork / "doc.txt").string()) == 2);
}

TEST_CASE("metrics selection filters the report") {
  workspace();
  const int rc = run("evaluate --system " + (kWork / "doc.txt").string() + " --reference " +
                     (kWork / "doc.txt").string() + " --metrics 1,L --limit-words 0",
                     kWork / "filtered.csv");
  REQUIRE(rc == 0);
  const std::string csv = slurp(kWork / "filtered.csv");
  CHECK(csv.find("ROUGE-1,") != std::string::npos);
  CHECK(csv.find("ROUGE-L,") != std::string::npos);
  CHECK(csv.find("ROUGE-2,") == std::string::npos);
  CHECK(csv.find("ROUGE-S*") == std::string::npos);

  CHECK(run("evaluate --system " + (kWork / "doc.txt").string() + " --reference " +
            (kWork / "doc.txt").string() + " --metrics bogus") == 2);
}

TEST_CASE("fit-weights reads the training CSV") {
  workspace();
  spit(kWork / "train.csv",
       "position,tfidf,aggsim,centroid,sentiment,label\n"
       "0.9,0.2,0.1,0.8,0.5,1\n"
       "0.8,0.1,0.2,0.7,0.4,1\n"
       "0.1,0.05,0.3,0.1,0.0,0\n"
       "0.2,0.02,0.2,0.2,0.1,0\n");
  const int rc = run("fit-weights --training " + (kWork / "train.csv").string(),
                     kWork / "fit.csv");
  REQUIRE(rc == 0);
  const std::string csv = slurp(kWork / "fit.csv");
  CHECK(csv.find("position,tfidf,aggsim,centroid,sentiment,intercept,accuracy") !=
        std::string::npos);
  CHECK(csv.find("1.000000,") != std::string::npos);  // separable toy data fits exactly

  spit(kWork / "bad_train.csv", "position,tfidf,aggsim,centroid,sentiment,label\n1,2,3\n");
  CHECK(run("fit-weights --training " + (kWork / "bad_train.csv").string()) == 3);
}

TEST_CASE("dump flags write inspection files") {
  workspace();
  const int rc = run("summarize --method lsa:lsass --length 30 " + (kWork / "doc.txt").string() +
                     " --dump-matrix " + (kWork / "matrix.csv").string() + " --output " +
                     (kWork / "dm.txt").string());
  REQUIRE(rc == 0);
  CHECK(slurp(kWork / "matrix.csv").rfind("term,s1,", 0) == 0);

  const int rc2 = run("summarize --method ilp --wordnet " + (kWork / "wn").string() +
                      " --length 30 " + (kWork / "doc.txt").string() + " --dump-network " +
                      (kWork / "net.csv").string() + " --dump-instance " +
                      (kWork / "inst.csv").string() + " --output " + (kWork / "di.txt").string());
  REQUIRE(rc2 == 0);
  CHECK(slurp(kWork / "net.csv").rfind("sent,1,", 0) == 0);
  CHECK(slurp(kWork / "inst.csv").rfind("n,", 0) == 0);
}

TEST_CASE("hybrid uses the sentiment lexicon and custom weights") {
  workspace();
  spit(kWork / "sentiment.tsv", "flood\t-0.8\nrescue\t0.6\ndisaster\t-0.9\n");
  const int rc = run("summarize --method hybrid --sentiment-lexicon " +
                     (kWork / "sentiment.tsv").string() +
                     " --weights 0.4469,0.8440,0.1878,0.4545,0.4978 --length 40 " +
                     (kWork / "doc.txt").string() + " --output " + (kWork / "hw.txt").string());
  REQUIRE(rc == 0);
  const std::string sidecar = slurp(kWork / "hw.txt.json");
  CHECK(sidecar.find("0.4469") != std::string::npos);
  CHECK(sidecar.find("\"scores\"") != std::string::npos);
}

TEST_CASE("SGML documents are unwrapped before summarization") {
  workspace();
  spit(kWork / "duc.sgml",
       "<DOC>\n<DOCNO> AP0001 </DOCNO>\n<HEADLINE>Ignore this headline entirely</HEADLINE>\n"
       "<TEXT>\nThe flood damaged many homes. Rescue teams worked all night.\n</TEXT>\n</DOC>\n");
  const int rc = run("summarize --method hybrid --length 20 " + (kWork / "duc.sgml").string() +
                     " --output " + (kWork / "sg.txt").string());
  REQUIRE(rc == 0);
  const std::string summary = slurp(kWork / "sg.txt");
  CHECK(summary.find("flood") != std::string::npos);
  CHECK(summary.find("headline") == std::string::npos);
}

TEST_CASE("percent budgets scale with the document") {
  workspace();
  const int rc = run("summarize --method hybrid --percent 25 " + (kWork / "doc.txt").string() +
                     " --output " + (kWork / "pct.txt").string());
  REQUIRE(rc == 0);
  std::istringstream ss(slurp(kWork / "pct.txt"));
  int words = 0;
  std::string tok;
  while (ss >> tok) ++words;
  CHECK(words > 0);
  CHECK(words <= 20);  // the fixture document has fewer than 80 words
}

TEST_CASE("input files are never modified") {
  workspace();
  const std::string before = slurp(kWork / "doc.txt");
  run("summarize --method hybrid " + (kWork / "doc.txt").string() + " --output " +
      (kWork / "ro.txt").string());
  CHECK(slurp(kWork / "doc.txt") == before);
}
