#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hopf_fusion/builtins.hpp"
#include "hopf_fusion/presentation.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(HOPF_FUSION_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(HOPF_FUSION_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST(Cli, ValidateBuiltins) {
  EXPECT_EQ(run("validate --builtin kC2@p=5").code, 0);
  Outcome o = run("validate --builtin dual-kS3@p=7");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("result: pass"), std::string::npos);
}

TEST(Cli, ValidateCorruptedFileFailsWithWitness) {
  auto h = hopf_fusion::make_builtin("kS3", 7);
  std::string text = hopf_fusion::write_presentation(h);
  auto pos = text.find("MULT\n0 0 0 1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 12, "MULT\n0 0 1 1");
  Outcome o = run("validate --input " + temp_file("corrupt.hsc", text));
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("fail"), std::string::npos);
}

TEST(Cli, PipelineFullRun) {
  Outcome o = run("pipeline --builtin kC2@p=5 --through qdims");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("summary: pass=36 fail=0 skipped=0"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("pipeline --builtin kC2@p=2").code, 3);
  EXPECT_EQ(run("pipeline --builtin kS3@p=3").code, 3);
  EXPECT_EQ(run("pipeline --builtin kX9@p=7").code, 2);
  EXPECT_EQ(run("pipeline --input /nonexistent/file").code, 2);
  EXPECT_EQ(run("pipeline").code, 2);
  EXPECT_EQ(run("pipeline --builtin kC2@p=5 --through nowhere").code, 2);
  EXPECT_EQ(run("export --builtin kC2@p=5").code, 2);
  std::string bad = temp_file("bad.hsc", "hopf-sc v1 p=5 dim=2\nMULT\n0 0 9 1\n");
  EXPECT_EQ(run("validate --input " + bad).code, 2);
  std::string sweedler = std::string(HOPF_FUSION_TEST_DATA) + "/sweedler.hsc";
  EXPECT_EQ(run("validate --input " + sweedler).code, 0);
  EXPECT_EQ(run("pipeline --input " + sweedler).code, 2);
}

TEST(Cli, ExportTables) {
  Outcome n = run("export --builtin kS3@p=7 --table N");
  Outcome l = run("export --builtin kS3@p=7 --table L");
  EXPECT_EQ(n.code, 0);
  EXPECT_EQ(n.out, l.out);
  EXPECT_NE(n.out.find("2 2 0 1\n2 2 1 1\n2 2 2 1\n"), std::string::npos);
  EXPECT_EQ(n.out, run("export --builtin kS3@p=7 --table N --seed 99").out);

  Outcome s = run("export --builtin kC2@p=5 --table smash");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("labels: V0xW0 V0xW1", 0), 0u);
  Outcome c = run("export --builtin kC2@p=5 --table C");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("labels: V0xW0 V1xW0 V0xW2 V1xW2\n", 0), 0u);
}

TEST(Cli, PipelineFromFileMatchesBuiltin) {
  auto h = hopf_fusion::make_builtin("dual-kC3", 5);
  std::string path = temp_file("dc3.hsc", hopf_fusion::write_presentation(h));
  Outcome file = run("pipeline --input " + path);
  Outcome builtin = run("pipeline --builtin dual-kC3@p=5");
  EXPECT_EQ(file.code, 0);
  auto body = [](const std::string& s) { return s.substr(s.find("seed:")); };
  EXPECT_EQ(body(file.out), body(builtin.out));
}
