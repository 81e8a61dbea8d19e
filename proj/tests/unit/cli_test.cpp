#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "commands.hpp"
#include "parsers.hpp"

using namespace fixcalc;

namespace {

const std::string kData = DATA_DIR;

struct Result {
  int status;
  std::string out;
};

// stdout only; stderr goes to the test log.
Result run(const std::string& args) {
  const std::string cmd = std::string(FIXCALC_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fixcalc_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

// ---- parsers ----------------------------------------------------------------

TEST(ParseGrammar, ExpressionFile) {
  const auto g = parse_grammar(read_file(kData + "/expr.grammar"));
  EXPECT_EQ(g.productions().size(), 7U);
  EXPECT_EQ(g.nonterminals(), (std::vector<std::string>{"exp", "term", "factor"}));
  EXPECT_EQ(g.productions()[1].rhs[1], fixpoint::analyses::GrammarElem::terminal("+"));
}

TEST(ParseGrammar, EpsilonAndSemicolon) {
  const auto g = parse_grammar("A : ;\nB : \"b\" A\n");
  EXPECT_TRUE(g.productions()[0].rhs.empty());
  EXPECT_EQ(g.productions()[1].rhs.size(), 2U);
}

TEST(ParseGrammar, ErrorsCarryPosition) {
  try {
    parse_grammar("A : \"a\"\nB \"b\"\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
  }
  EXPECT_THROW(parse_grammar("A : \"open\n"), ParseError);
  EXPECT_THROW(parse_grammar("# only a comment\n"), fixpoint::analyses::GrammarError);
  EXPECT_THROW(parse_grammar("A : B\n"), fixpoint::analyses::GrammarError);
}

TEST(ParseProgram, Precedence) {
  using K = fixpoint::analyses::Expr::Kind;
  const auto p = parse_program("fun f(x, y) = if x then y + 1 else f(y, x) + x");
  const auto& body = p.definitions()[0].body;
  ASSERT_EQ(body.kind, K::cond);
  EXPECT_EQ(body.args[1].kind, K::add);
  ASSERT_EQ(body.args[2].kind, K::add);
  EXPECT_EQ(body.args[2].args[0].kind, K::call);

  const auto q = parse_program("fun h(a, b, c) = a + b + c");
  const auto& sum = q.definitions()[0].body;
  ASSERT_EQ(sum.kind, K::add);
  EXPECT_EQ(sum.args[0].kind, K::add);  // left-associative
  EXPECT_EQ(sum.args[1].name, "c");
}

TEST(ParseProgram, Errors) {
  try {
    parse_program("fun f(x) = x +\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW(parse_program("fun f(x) = if x then x"), ParseError);
  EXPECT_THROW(parse_program("fun if(x) = x"), ParseError);
  EXPECT_THROW(parse_program("fun f(x) = g(x)"), fixpoint::analyses::ProgramError);
  EXPECT_THROW(parse_program("fun f(x) = y"), fixpoint::analyses::ProgramError);
}

// ---- commands ---------------------------------------------------------------

TEST(Commands, First) {
  EXPECT_EQ(cmd_first(kData + "/expr.grammar", std::nullopt, {}),
            "first(exp) = { \"(\", \"name\", \"number\" }\n");
  EXPECT_EQ(cmd_first(kData + "/epsilon.grammar", std::string("A"), {}), "first(A) = { ε }\n");
  Options ascii;
  ascii.style = fixpoint::RenderStyle::ascii;
  EXPECT_EQ(cmd_first(kData + "/epsilon.grammar", std::nullopt, ascii), "first(A) = { eps }\n");
  EXPECT_THROW(cmd_first(kData + "/expr.grammar", std::string("nope"), {}), UsageError);
}

TEST(Commands, FirstStats) {
  Options opts;
  opts.stats = true;
  const std::string out = cmd_first(kData + "/expr.grammar", std::nullopt, opts);
  EXPECT_NE(out.find("#rhs="), std::string::npos);
  EXPECT_NE(out.find("#cmp="), std::string::npos);
}

TEST(Commands, Strict) {
  const std::string sum = cmd_strict(kData + "/sum.prog", "f:0,1", {});
  EXPECT_NE(sum.find("strict(f, [0,1]) = 0"), std::string::npos);
  EXPECT_NE(sum.find("f is strict in parameter 0"), std::string::npos);

  const std::string cond = cmd_strict(kData + "/cond.prog", "g:1,0,1", {});
  EXPECT_NE(cond.find("strict(g, [1,0,1]) = 1"), std::string::npos);
  EXPECT_NE(cond.find("g is not strict in parameter 1"), std::string::npos);

  const std::string all_defined = cmd_strict(kData + "/sum.prog", "f:1,1", {});
  EXPECT_EQ(all_defined.find("parameter"), std::string::npos);

  EXPECT_THROW(cmd_strict(kData + "/sum.prog", "f:0", {}), UsageError);
  EXPECT_THROW(cmd_strict(kData + "/sum.prog", "f0,1", {}), UsageError);
  EXPECT_THROW(cmd_strict(kData + "/sum.prog", "f:0,2", {}), UsageError);
}

TEST(Commands, BenchRowsInOrder) {
  const std::string out = cmd_bench(kData + "/expr.grammar", {});
  std::size_t pos = 0;
  for (const char* row : {"Kleene", "Dep", "TD", "W", "TDF", "TDF-sub"}) {
    pos = out.find(row, pos);
    ASSERT_NE(pos, std::string::npos) << row;
  }
  const std::string trivial = temp_file("trivial.grammar", "A : \"a\"\n");
  EXPECT_NE(cmd_bench(trivial, {}).find("TDF-sub"), std::string::npos);
}

TEST(Commands, HofDemo) {
  const std::string out = cmd_hof_demo({});
  EXPECT_NE(out.find("g: [1,{[1]->1}] => (1, [[],[[1]]])\n"), std::string::npos);
  EXPECT_NE(out.find("top: [1] => (1, [])\n"), std::string::npos);
  EXPECT_NE(out.find("ft [1] = 1"), std::string::npos);
}

TEST(Commands, Oscillate) {
  const std::string out = cmd_demo_oscillate({});
  EXPECT_NE(out.find("cycle detected"), std::string::npos);
  EXPECT_NE(out.find("fix = 2"), std::string::npos);
  EXPECT_EQ(out.substr(out.rfind('\n', out.size() - 2) + 1), "lfp G (1) = 2\n");
}

// ---- the executable ---------------------------------------------------------

TEST(Executable, ExitCodes) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("first " + kData + "/expr.grammar").status, 0);
  EXPECT_EQ(run("first /nonexistent/file.grammar 2>/dev/null").status, 2);
  EXPECT_EQ(run("strict " + kData + "/sum.prog --query f:0 2>/dev/null").status, 2);
  EXPECT_EQ(run("first " + kData + "/expr.grammar --solver gauss 2>/dev/null").status, 2);
  EXPECT_EQ(run("bench " + temp_file("empty.grammar", "") + " 2>/dev/null").status, 2);
  EXPECT_EQ(run("2>/dev/null").status, 2);
}

TEST(Executable, DeterministicOutput) {
  for (const std::string& args : std::vector<std::string>{"hof-demo", "demo-oscillate", "bench " + kData + "/expr.grammar"}) {
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Executable, EverySolverGivesSameFirstSet) {
  const std::string expected = run("first " + kData + "/expr.grammar").out;
  for (const char* s : {"kleene", "dep", "td", "w", "tdf", "tdf-sub"}) {
    EXPECT_EQ(run("first " + kData + "/expr.grammar --solver " + s).out, expected) << s;
  }
}
