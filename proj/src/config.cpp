#include "dwrad/config.hpp"

#include <fstream>

#include <json.hpp>

#include "dwrad/types.hpp"

namespace dwrad {

void OptimizerConfig::validate() const {
  if (restarts <= 0 || max_iters <= 0 || theta_grid <= 0 || alpha_grid <= 0 || !(refine_tol > 0.0)) {
    throw Error(ErrorCode::ConfigError, "optimizer settings must all be positive");
  }
}

OptimizerConfig OptimizerConfig::escalated(int factor) const {
  OptimizerConfig out = *this;
  out.restarts *= factor;
  return out;
}

OptimizerConfig load_optimizer_config(const std::string& path, OptimizerConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  try {
    if (j.contains("restarts")) base.restarts = j.at("restarts").get<int>();
    if (j.contains("max_iters")) base.max_iters = j.at("max_iters").get<int>();
    if (j.contains("theta_grid")) base.theta_grid = j.at("theta_grid").get<int>();
    if (j.contains("refine_tol")) base.refine_tol = j.at("refine_tol").get<double>();
    if (j.contains("alpha_grid")) base.alpha_grid = j.at("alpha_grid").get<int>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  base.validate();
  return base;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

}  // namespace dwrad
