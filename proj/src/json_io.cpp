#include "sr/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sr {

json comb_to_json(const DiracComb& c) {
  json j;
  j["dim"] = c.dim();
  json pts = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(c.point(i).coords());
  j["points"] = std::move(pts);
  j["weights"] = c.weights();
  return j;
}

DiracComb comb_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<TorusPoint> pts;
  for (const auto& p : j.at("points")) pts.emplace_back(p.get<std::vector<double>>());
  std::vector<double> ws = j.at("weights").get<std::vector<double>>();
  for (const auto& p : pts)
    if (p.dim() != dim) throw std::invalid_argument("comb_from_json: dim mismatch");
  return DiracComb(std::move(pts), std::move(ws));
}

json table_to_json(const FourierTable& t) {
  json j;
  j["dim"] = t.dim();
  j["index_set"] = {{"type", t.index_set().kind == IndexSetKind::Linf ? "linf" : "l1"},
                    {"T", t.index_set().radius}};
  json entries = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    entries.push_back(
        {{"l", t.index(i).entries}, {"re", t.value(i).real()}, {"im", t.value(i).imag()}});
  }
  j["entries"] = std::move(entries);
  return j;
}

FourierTable table_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  const json& is = j.at("index_set");
  std::string type = is.at("type").get<std::string>();
  int radius = is.at("T").get<int>();
  IndexSet set = type == "linf" ? IndexSet::linf(dim, radius)
               : type == "l1"  ? IndexSet::l1(dim, radius)
                               : throw std::invalid_argument("table_from_json: bad index set type");
  std::vector<FrequencyIndex> indices;
  std::vector<std::complex<double>> values;
  for (const auto& e : j.at("entries")) {
    indices.emplace_back(e.at("l").get<std::vector<int>>());
    values.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
  }
  // Canonical (lexicographic) storage order regardless of file order.
  std::vector<std::size_t> order(indices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });
  std::vector<FrequencyIndex> si;
  std::vector<std::complex<double>> sv;
  si.reserve(indices.size());
  sv.reserve(values.size());
  for (std::size_t i : order) {
    si.push_back(std::move(indices[i]));
    sv.push_back(values[i]);
  }
  return FourierTable(set, std::move(si), std::move(sv));
}

json params_to_json(const ReconParams& p) {
  return json{{"d", p.d},         {"eps", p.eps},     {"T", p.T},
              {"kappa", p.kappa}, {"n", p.n},         {"cert_n", p.cert_n},
              {"K", p.K},         {"delta", p.delta}, {"overridden", p.overridden}};
}

json cube_pair_to_json(const CubePair& p) {
  json j;
  j["construction"] = "cube";
  j["d"] = p.mu.d;
  j["eps"] = p.eps;
  j["k"] = p.k;
  j["gamma"] = p.mu.gamma;
  j["a"] = p.poly.a;
  j["b_coeffs"] = p.poly.b_coeffs;
  j["mu"] = p.mu.weights;
  j["nu"] = p.nu.weights;
  return j;
}

CubePair cube_pair_from_json(const json& j) {
  CubePair p;
  p.eps = j.at("eps").get<double>();
  p.k = j.at("k").get<int>();
  p.poly.k = p.k;
  p.poly.a = j.at("a").get<std::vector<double>>();
  p.poly.b_coeffs = j.at("b_coeffs").get<std::vector<double>>();
  p.poly.a0_ratio = std::abs(p.poly.a[0]) / (2.0 - std::abs(p.poly.a[0]));
  int d = j.at("d").get<int>();
  double gamma = j.at("gamma").get<double>();
  p.mu.d = p.nu.d = d;
  p.mu.gamma = p.nu.gamma = gamma;
  p.mu.weights = j.at("mu").get<std::vector<double>>();
  p.nu.weights = j.at("nu").get<std::vector<double>>();
  p.mu.rates.resize(d + 1);
  p.nu.rates.resize(d + 1);
  for (int i = 0; i <= d; ++i) p.mu.rates[i] = p.nu.rates[i] = i * gamma;
  return p;
}

json separated_pair_to_json(const SeparatedPair& p) {
  json j;
  j["construction"] = "random";
  j["eps"] = p.eps;
  j["M"] = p.M;
  j["n"] = p.n;
  j["kappa"] = p.kappa;
  j["seed"] = p.seed;
  j["attempts"] = p.attempts;
  json xs = json::array(), ys = json::array();
  for (const auto& x : p.xs) xs.push_back(x.coords());
  for (const auto& y : p.ys) ys.push_back(y.coords());
  j["xs"] = std::move(xs);
  j["ys"] = std::move(ys);
  return j;
}

SeparatedPair separated_pair_from_json(const json& j) {
  SeparatedPair p;
  p.eps = j.at("eps").get<double>();
  p.M = j.at("M").get<long long>();
  p.n = j.at("n").get<int>();
  p.kappa = j.at("kappa").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.attempts = j.value("attempts", 0);
  for (const auto& x : j.at("xs")) p.xs.emplace_back(x.get<std::vector<double>>());
  for (const auto& y : j.at("ys")) p.ys.emplace_back(y.get<std::vector<double>>());
  return p;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sr
