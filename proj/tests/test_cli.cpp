#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args) {
  std::string cmd = std::string(GEOMUL_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string script(const std::string& name) { return std::string(GEOMUL_SCRIPTS_DIR) + "/" + name; }

std::string read(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("geomul-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("eval") {
  TempDir tmp;
  Result r = cli("eval 2 4");
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");
  CHECK(cli("eval 1/2 1/3").out == "1/6\n");
  CHECK(cli("eval 2 -4").out == "-8\n");

  fs::path svg = tmp.path / "out.svg";
  fs::path trace = tmp.path / "trace.json";
  Result neg = cli("eval -2 -4 --svg " + svg.string() + " --trace " + trace.string());
  CHECK(neg.status == 0);
  CHECK(neg.out == "8\n");
  CHECK(count(read(svg), "class=\"parallel-mark") == 2);
  CHECK(read(trace).find("read_x_intercept") != std::string::npos);

  CHECK(cli("eval two 4").status == 2);
  CHECK(cli("eval 1/0 4").status == 2);
  CHECK(cli("eval 1").status == 2);
  CHECK(cli("").status == 2);
}

TEST_CASE("verify") {
  TempDir tmp;
  Result signs = cli("verify --suite signs --cases 100 --seed 7");
  CHECK(signs.status == 0);
  CHECK(signs.out.find("seed: 7") != std::string::npos);
  CHECK(signs.out.find("cases: 100") != std::string::npos);
  CHECK(signs.out.find("103 passed") != std::string::npos);

  CHECK(cli("verify --suite repeated --cases 1").status == 0);
  CHECK(cli("verify --suite nothing").status == 2);
  CHECK(cli("verify --cases 0").status == 2);

  fs::path a = tmp.path / "a.json";
  fs::path b = tmp.path / "b.json";
  CHECK(cli("verify --suite fractions --cases 30 --seed 5 --report " + a.string()).status == 0);
  CHECK(cli("verify --suite fractions --cases 30 --seed 5 --report " + b.string()).status == 0);
  std::string text = read(a);
  CHECK_FALSE(text.empty());
  CHECK(text == read(b));
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("run") {
  for (const char* name : {"example1.geo", "example2.geo", "example3.geo", "lemma5.geo", "theorem9.geo"}) {
    CAPTURE(name);
    Result r = cli("run " + script(name));
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  Result ex1 = cli("run " + script("example1.geo"));
  CHECK(ex1.out.find("example1.geo:8:1: pass") != std::string::npos);

  Result bad = cli("run " + script("bad_syntax.geo"));
  CHECK(bad.status == 2);
  CHECK(bad.out.find("bad_syntax.geo:3:10: parse error") != std::string::npos);

  TempDir tmp;
  fs::path failing = tmp.path / "failing.geo";
  std::ofstream(failing) << "assert eq(gmul(2, 3), 7)\n";
  Result f = cli("run " + failing.string());
  CHECK(f.status == 1);
  CHECK(f.out.find("failing.geo:1:1: FAIL") != std::string::npos);

  fs::path runtime = tmp.path / "runtime.geo";
  std::ofstream(runtime) << "line H = through (0, 1) (4, 0)\nline M = parallel through (0, 2) to H\n"
                            "point X = intersect(H, M)\n";
  Result rt = cli("run " + runtime.string());
  CHECK(rt.status == 2);
  CHECK(rt.out.find(":3:") != std::string::npos);
  CHECK(rt.out.find("runtime error") != std::string::npos);

  CHECK(cli("run " + (tmp.path / "missing.geo").string()).status == 2);
}

TEST_CASE("render") {
  TempDir tmp;
  fs::path fig = tmp.path / "fig1.svg";
  CHECK(cli("render " + script("example1.geo") + " -o " + fig.string()).status == 0);
  CHECK(count(read(fig), "class=\"parallel-mark") == 2);

  fs::path lemma = tmp.path / "lemma5.svg";
  CHECK(cli("render " + script("lemma5.geo") + " -o " + lemma.string()).status == 0);
  CHECK(count(read(lemma), "class=\"parallel-mark") == 3);

  fs::path empty = tmp.path / "empty.geo";
  std::ofstream(empty) << "# nothing here\n";
  fs::path axes = tmp.path / "axes.svg";
  CHECK(cli("render " + empty.string() + " -o " + axes.string()).status == 0);
  std::string svg = read(axes);
  CHECK(count(svg, "<line") == 2);
  CHECK(count(svg, "class=\"axis") == 2);

  CHECK(cli("render " + script("bad_syntax.geo") + " -o " + (tmp.path / "x.svg").string()).status == 2);
  CHECK(cli("render " + script("example1.geo") + " -o " + (tmp.path / "no/such/dir.svg").string()).status == 1);
}
