// Drives the built CLI binary end to end: exit codes, output schemas, and
// byte-level determinism of seeded runs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sr/fourier.hpp"
#include "sr/json_io.hpp"
#include "sr/torus.hpp"

namespace fs = std::filesystem;
using namespace sr;

namespace {

int g_failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "[FAIL] " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& cmd) {
  int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  if (rc == -1) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <srtool path> <scratch dir>\n";
    return 2;
  }
  const std::string tool = argv[1];
  const fs::path dir = argv[2];
  fs::create_directories(dir);

  // Usage errors exit with 2.
  expect(run(tool + " --definitely-not-a-flag") == 2, "unknown flag exits 2");
  expect(run(tool + " gen --construction nosuch --epsilon 0.1") == 2, "bad construction exits 2");
  expect(run(tool + " distance --metric wasserstein --a missing.json --b missing.json") == 2,
         "missing input exits 2");

  // Generation + verification round trip.
  fs::path pair = dir / "onedim.json";
  expect(run(tool + " gen --construction onedim --epsilon 0.1 --output " + pair.string() +
             " --emit-combs " + (dir / "od").string()) == 0,
         "gen onedim succeeds");
  expect(run(tool + " verify --construction onedim --input " + pair.string()) == 0,
         "verify onedim passes");

  // Regeneration path: verify without --input rebuilds from --d/--epsilon.
  expect(run(tool + " verify --construction onedim --epsilon 0.1") == 0,
         "verify onedim regenerates when no input given");

  fs::path report = dir / "grid_report.json";
  expect(run(tool + " gen --construction grid --d 2 --epsilon 0.15 --output " +
             (dir / "grid.json").string()) == 0,
         "gen grid succeeds");
  expect(run(tool + " verify --construction grid --input " + (dir / "grid.json").string() +
             " --output " + report.string()) == 0,
         "verify grid passes");
  json rj = load_json(report.string());
  expect(rj.at("pass").get<bool>(), "grid report pass flag");
  expect(rj.at("clauses")[0].at("measured").get<double>() <= 1e-10,
         "grid report records the coefficient deviation");

  // Verification failure exits 1: swap the pair's weights (mass stays 1 but
  // the coefficient and transport clauses break).
  json tampered = load_json(pair.string());
  tampered["d2"]["weights"][0] = 0.2;
  tampered["d2"]["weights"][1] = 0.8;
  save_json(tampered, (dir / "tampered.json").string());
  expect(run(tool + " verify --construction onedim --input " + (dir / "tampered.json").string()) ==
             1,
         "tampered pair fails with exit 1");

  // Distance on the emitted combs prints the known value.
  fs::path distj = dir / "dist.json";
  expect(run(tool + " distance --metric wasserstein --a " + (dir / "od.d1.json").string() +
             " --b " + (dir / "od.d2.json").string() + " --output " + distj.string()) == 0,
         "distance wasserstein succeeds");
  expect(std::abs(load_json(distj.string()).at("value").get<double>() - 0.1) <= 1e-6,
         "wasserstein value is eps");

  fs::path hhj = dir / "hh.json";
  expect(run(tool + " distance --metric hh --eps-dist 0.49 --a " + (dir / "od.d1.json").string() +
             " --b " + (dir / "od.d2.json").string() + " --output " + hhj.string()) == 0,
         "distance hh succeeds");
  json hh = load_json(hhj.string());
  expect(std::abs(hh.at("lower").get<double>() - 0.2) <= 1e-6, "hh lower is 2 eps");
  expect(std::abs(hh.at("upper").get<double>() - 0.2) <= 1e-6, "hh upper is 2 eps");

  // Reconstruction from a table written through the library.
  DiracComb f({TorusPoint({0.2}), TorusPoint({0.7})}, {0.6, 0.4});
  FourierTable u = table_of(f, IndexSet::linf(1, 24));
  save_json(table_to_json(u), (dir / "table.json").string());
  fs::path comb = dir / "recon.json";
  expect(run(tool + " reconstruct --input " + (dir / "table.json").string() +
             " --d 1 --epsilon 0.25 --bandlimit 24 --jackson-n 4 --grid-K 64 --kappa 0.01 "
             "--mode signed --output " +
             comb.string()) == 0,
         "reconstruct succeeds");
  json cj = load_json(comb.string());
  expect(cj.contains("params") && cj.at("params").at("K").get<long long>() == 64,
         "reconstruction output embeds effective params");
  DiracComb g = comb_from_json(cj);
  expect(g.is_normalized(1e-9), "reconstruction output normalized");

  fs::path comb2 = dir / "recon_dist.json";
  expect(run(tool + " reconstruct --input " + (dir / "table.json").string() +
             " --d 1 --epsilon 0.25 --bandlimit 24 --jackson-n 4 --grid-K 64 --kappa 0.01 "
             "--mode distribution --output " +
             comb2.string()) == 0,
         "distribution reconstruct succeeds");
  DiracComb gd = comb_from_json(load_json(comb2.string()));
  expect(gd.is_distribution(1e-9), "distribution output is a distribution");

  // Identical config + seed => byte-identical outputs.
  std::string gen_random = tool +
      " gen --construction random --d 1 --epsilon 0.0005 --M 32 --n 16 --kappa 0.9 "
      "--max-retries 20000 --seed 11 --output ";
  expect(run(gen_random + (dir / "r1.json").string()) == 0, "gen random succeeds");
  expect(run(gen_random + (dir / "r2.json").string()) == 0, "gen random repeat succeeds");
  expect(slurp(dir / "r1.json") == slurp(dir / "r2.json"), "same seed gives identical bytes");
  expect(run(tool + " verify --construction random --input " + (dir / "r1.json").string()) == 0,
         "verify random passes");

  std::string gen_random2 = tool +
      " gen --construction random --d 1 --epsilon 0.0005 --M 32 --n 16 --kappa 0.9 "
      "--max-retries 20000 --seed 12 --output " + (dir / "r3.json").string();
  expect(run(gen_random2) == 0, "gen random with another seed succeeds");
  expect(slurp(dir / "r1.json") != slurp(dir / "r3.json"), "different seed gives different bytes");

  // Sweep report in CSV form.
  fs::path csv = dir / "sweep.csv";
  expect(run(tool + " report --kind recon-sweep --d 1 --epsilon 0.25 --K-list 32 --trials 2 "
             "--seed 3 --format csv --output " +
             csv.string()) == 0,
         "recon sweep succeeds");
  std::string cs = slurp(csv);
  expect(cs.find("K,T,n,kappa,trial,dW,pass") == 0, "csv header present");
  expect(cs.find("\n32,") != std::string::npos, "csv rows present");

  // Bump report.
  fs::path bj = dir / "bump.json";
  expect(run(tool + " bump --d 8 --epsilon 0.25 --eps-dist 0.49 --regime far --verify --output " +
             bj.string()) == 0,
         "bump report succeeds");
  json bjj = load_json(bj.string());
  expect(bjj.at("verify").at("range").get<bool>(), "bump verify range ok");
  expect(bjj.at("k").get<int>() >= 1, "bump k present");

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << g_failures << " failures\n";
  return 1;
}
