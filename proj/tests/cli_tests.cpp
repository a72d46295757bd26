#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trainbench/cli.hpp"
#include "trainbench/io.hpp"

using namespace trainbench;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return CliRun{code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() /
                 ("trainbench_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / (std::to_string(counter++) + "_" + name);
}

const std::string kInstance =
    "lemma 1\n"
    "train 2\n"
    "0 1\n"
    "1 2\n"
    "0 1 R\n"
    "1 2 R\n";

}  // namespace

TEST_CASE("lemma reads stdin and prints the coloring, evidence and verdict") {
  const auto run = cli({"lemma"}, kInstance);
  CHECK(run.code == 0);
  CHECK(run.out ==
        "0 R\n"
        "1 B\n"
        "2 B\n"
        "req 0 1 homogeneous R witness 2\n"
        "req 0 0 homogeneous R witness 1\n"
        "OK\n");
}

TEST_CASE("lemma accepts an instance file and leaves it untouched") {
  const fs::path path = temp_file("instance.txt");
  atomic_write_file(path, kInstance);
  const std::string before = read_file(path);

  const auto run = cli({"lemma", path.string()});
  CHECK(run.code == 0);
  CHECK(run.out.find("OK") != std::string::npos);
  CHECK(read_file(path) == before);
}

TEST_CASE("lemma rejects instances with uncovered pairs") {
  const auto run = cli({"lemma"},
                       "lemma 1\n"
                       "train 2\n"
                       "0 1\n"
                       "0 1 R\n"
                       "1 2 R\n");  // fine: single-set train, all covered
  CHECK(run.code == 0);

  const auto missing = cli({"lemma"},
                           "lemma 1\n"
                           "train 2\n"
                           "0 1\n"
                           "1 2\n"
                           "0 1 R\n");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("uncolored") != std::string::npos);
}

TEST_CASE("lemma rejects malformed instances") {
  CHECK(cli({"lemma"}, "").code == 2);
  CHECK(cli({"lemma"}, "lemma 2\ntrain 2\n0 1\n0 1 R\n").code == 2);
  CHECK(cli({"lemma"}, "lemma 1\ntrain 2\n0 1\n2 3\n0 1 R\n").code == 2);
}

TEST_CASE("diag writes dumps and manifests atomically and reproducibly") {
  const fs::path dump = temp_file("dump.txt");
  const auto run = cli({"diag", "--preds", "true", "--bound", "3", "--dump",
                        dump.string()});
  CHECK(run.code == 0);
  CHECK(read_file(dump) == "0 1 R\n0 2 R\n1 2 B\n");

  const fs::path manifest = dump.string() + ".manifest";
  REQUIRE(fs::exists(manifest));
  const std::string first_manifest = read_file(manifest);
  CHECK(first_manifest.find("subcommand diag") != std::string::npos);
  CHECK(first_manifest.find("output " + dump.string()) != std::string::npos);

  // Rerun: identical dump, identical manifest.
  const auto rerun = cli({"diag", "--preds", "true", "--bound", "3", "--dump",
                          dump.string()});
  CHECK(rerun.code == 0);
  CHECK(read_file(dump) == "0 1 R\n0 2 R\n1 2 B\n");
  CHECK(read_file(manifest) == first_manifest);
}

TEST_CASE("diag emits certificate lines") {
  const auto run = cli({"diag", "--preds", "true", "--bound", "3",
                        "--certify", "1", "3"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "0 1 R\n"
        "0 2 R\n"
        "1 2 B\n"
        "CERT 0 0 1 R 1 2 B\n");

  const auto nocert = cli({"diag", "--preds", "false", "--bound", "3",
                           "--certify", "1", "3"});
  CHECK(nocert.code == 0);
  CHECK(nocert.out.find("NOCERT 0") != std::string::npos);
}

TEST_CASE("bad flags exit with usage") {
  CHECK(cli({"diag", "--preds", "true", "--bound", "-1"}).code == 2);
  CHECK(cli({"diag", "--bound", "3"}).code == 2);  // --preds required
  CHECK(cli({"diag", "--preds", "nope", "--bound", "3"}).code == 2);
  const auto unknown = cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(!unknown.err.empty());
  CHECK(cli({}).code == 2);
}

TEST_CASE("help is not an error") {
  const auto run = cli({"--help"});
  CHECK(run.code == 0);
  CHECK(run.out.find("lemma") != std::string::npos);
  CHECK(run.out.find("verify") != std::string::npos);
}

TEST_CASE("drive writes regime logs") {
  const fs::path dump = temp_file("drive_dump.txt");
  const fs::path log = temp_file("drive_log.txt");
  const auto run = cli({"drive", "--halt", "2", "--enum", "2:true", "--enum",
                        "6:mod:2:0", "--bound", "8", "--dump", dump.string(),
                        "--log", log.string()});
  CHECK(run.code == 0);
  const std::string log_text = read_file(log);
  CHECK(log_text.find("0 prehalt 0\n") == 0);
  CHECK(log_text.find("2 diag 1\n") != std::string::npos);
  CHECK(log_text.find("6 diag 2\n") != std::string::npos);

  const auto never = cli({"drive", "--halt", "never", "--bound", "3"});
  CHECK(never.code == 0);
  CHECK(never.out.find("0 1 R\n") != std::string::npos);

  CHECK(cli({"drive", "--halt", "never", "--enum", "2:true", "--bound", "3"})
            .code == 2);
  CHECK(cli({"drive", "--halt", "soon", "--bound", "3"}).code == 2);
}

TEST_CASE("verify checks totality") {
  const fs::path dump = temp_file("verify_dump.txt");
  cli({"diag", "--preds", "true,mod:2:0", "--bound", "12", "--dump",
       dump.string()});

  CHECK(cli({"verify", dump.string(), "--total", "12"}).code == 0);
  CHECK(cli({"verify", dump.string(), "--total", "13"}).code == 1);

  const fs::path corrupt = temp_file("corrupt.txt");
  atomic_write_file(corrupt, "0 1 R\n1 2 B\n");
  CHECK(cli({"verify", corrupt.string(), "--total", "3"}).code == 1);
}

TEST_CASE("verify checks homogeneity claims") {
  const fs::path dump = temp_file("hom_dump.txt");
  atomic_write_file(dump, "0 1 R\n0 2 R\n1 2 B\n");

  const auto hom = cli({"verify", dump.string(), "--hom", "0 1"});
  CHECK(hom.code == 0);
  CHECK(hom.out == "R\n");

  const auto mixed = cli({"verify", dump.string(), "--hom", "0,1,2"});
  CHECK(mixed.code == 1);
  CHECK(mixed.out == "NONHOMOGENEOUS\n");

  const auto vac = cli({"verify", dump.string(), "--hom", "2"});
  CHECK(vac.code == 0);
  CHECK(vac.out == "vacuous\n");

  CHECK(cli({"verify", dump.string(), "--hom", "0 9"}).code == 2);
}

TEST_CASE("verify re-checks certificates against the dump") {
  const fs::path dump = temp_file("cert_dump.txt");
  const fs::path cert = temp_file("certs.txt");
  atomic_write_file(dump, "0 1 R\n0 2 R\n1 2 B\n");
  atomic_write_file(cert, "CERT 0 0 1 R 1 2 B\n");

  const auto ok = cli({"verify", dump.string(), "--cert", cert.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "cert 0 ok\n");

  atomic_write_file(cert, "CERT 0 0 1 R 0 2 B\n");  // (0,2) is R, not B
  CHECK(cli({"verify", dump.string(), "--cert", cert.string()}).code == 1);

  atomic_write_file(cert, "CERT 0 0 1 R 1 2 R\n");  // colors equal
  CHECK(cli({"verify", dump.string(), "--cert", cert.string()}).code == 1);

  atomic_write_file(cert, "NOCERT 0\n");
  CHECK(cli({"verify", dump.string(), "--cert", cert.string()}).code == 0);

  atomic_write_file(cert, "garbage\n");
  CHECK(cli({"verify", dump.string(), "--cert", cert.string()}).code == 2);
}

TEST_CASE("verify needs exactly one claim") {
  const fs::path dump = temp_file("claims.txt");
  atomic_write_file(dump, "0 1 R\n");
  CHECK(cli({"verify", dump.string()}).code == 2);
  CHECK(cli({"verify", dump.string(), "--total", "2", "--hom", "0 1"}).code ==
        2);
}

TEST_CASE("sweep prints the report and exits by failure count") {
  const auto run = cli({"sweep", "--trains", "1", "--universe", "4",
                        "--max-len", "2"});
  CHECK(run.code == 0);
  CHECK(run.out.find("instances ") == 0);
  CHECK(run.out.find("\nfailures 0\n") != std::string::npos);

  CHECK(cli({"sweep", "--trains", "1", "--universe", "30"}).code == 2);
  CHECK(cli({"sweep", "--mode", "bogus"}).code == 2);
}

TEST_CASE("explicit manifest paths are honored") {
  const fs::path manifest = temp_file("explicit.manifest");
  const auto run = cli({"diag", "--preds", "true", "--bound", "2",
                        "--manifest", manifest.string()});
  CHECK(run.code == 0);
  REQUIRE(fs::exists(manifest));
  const std::string text = read_file(manifest);
  CHECK(text.find("subcommand diag") != std::string::npos);
  CHECK(text.find("flag --bound 2") != std::string::npos);
  CHECK(text.find("output stdout") != std::string::npos);
}
