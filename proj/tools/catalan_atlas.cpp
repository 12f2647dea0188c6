// Command-line front end: exact enumeration and verification for extended
// Catalan arrangements of crystallographic root systems.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catalan/cluster.hpp"
#include "catalan/figure.hpp"
#include "catalan/lattice.hpp"
#include "catalan/stats.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace catalan;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string type;
  int m = 1;
  bool positive = false;
  std::string format = "json";
  std::string out;
  long long max_chains = 200000;
  long long max_faces = 10000000;
};

json meta_of(const RunConfig& cfg) {
  return json{{"type", cfg.type}, {"m", cfg.m}, {"version", kVersion}};
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
  f << payload;
}

void emit_json(const RunConfig& cfg, json data) {
  json doc{{"meta", meta_of(cfg)}, {"data", std::move(data)}};
  write_output(cfg, doc.dump(2));
}

// Long-format CSV: one histogram/vector entry per row.
void emit_csv(const RunConfig& cfg, const std::vector<std::tuple<long long, std::string,
                                                                 std::string>>& rows) {
  std::ostringstream os;
  os << "i,value,source\n";
  for (auto& [i, value, source] : rows) os << i << "," << value << "," << source << "\n";
  write_output(cfg, os.str());
}

json vec_json(const std::vector<long long>& v) { return json(v); }

json roots_json(const RootSystem& rs) {
  json roots = json::array();
  for (const RootVec& r : rs.roots) roots.push_back(r);
  return json{{"rank", rs.rank},
              {"cartan", rs.cartan},
              {"positive_roots", roots},
              {"heights", rs.height},
              {"highest_root", rs.roots[rs.highest]},
              {"exponents", rs.exponents},
              {"coxeter_number", rs.coxeter},
              {"coroot_scale", rs.coroot_scale}};
}

std::vector<int> set_to_indices(const RootSet& s) {
  std::vector<int> v;
  s.for_each([&](int i) { v.push_back(i); });
  return v;
}

long long env_work_guard(long long fallback) {
  const char* env = std::getenv("CATALAN_ATLAS_MAX_WORK");
  if (!env) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || v <= 0) return fallback;
  return v;
}

int run(const RunConfig& cfg, const std::string& cmd) {
  CartanType type = CartanType::parse(cfg.type);
  if (cfg.m < 1) throw std::invalid_argument("m must be >= 1");
  RootSystem rs = build_root_system(type);
  RootPoset poset = build_poset(rs);

  if (cmd == "roots") {
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      for (int i = 0; i < rs.size(); ++i)
        rows.push_back({i, std::to_string(rs.height[i]), "height"});
      emit_csv(cfg, rows);
    } else {
      emit_json(cfg, roots_json(rs));
    }
    return 0;
  }

  if (cmd == "poset") {
    auto mins = count_filters_by_min_elements(poset, false);
    auto pos = count_filters_by_min_elements(poset, true);
    auto maxs = count_ideals_by_max_elements(poset, true);
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      for (auto& [i, v] : mins) rows.push_back({i, std::to_string(v), "filters_by_min"});
      for (auto& [i, v] : pos) rows.push_back({i, std::to_string(v), "positive_filters_by_min"});
      for (auto& [i, v] : maxs) rows.push_back({i, std::to_string(v), "ideals_with_simples_by_max"});
      emit_csv(cfg, rows);
      return 0;
    }
    json covers = json::array();
    for (auto& [a, b] : poset.covers) covers.push_back({a, b});
    long long filters = 0, positive = 0;
    for (auto& [i, v] : mins) filters += v;
    for (auto& [i, v] : pos) positive += v;
    emit_json(cfg, json{{"covers", covers},
                        {"filter_count", filters},
                        {"positive_filter_count", positive},
                        {"filters_by_min_elements", json(mins)},
                        {"positive_filters_by_min_elements", json(pos)},
                        {"ideals_with_simples_by_max_elements", json(maxs)}});
    return 0;
  }

  if (cmd == "chains") {
    json chains = json::array();
    long long count = 0;
    enumerate_ideal_chains(poset, cfg.m, cfg.positive, [&](const IdealChain& c) {
      ++count;
      json chain = json::array();
      for (const RootSet& j : c.ideals) chain.push_back(set_to_indices(j));
      chains.push_back(std::move(chain));
    }, cfg.max_chains);
    emit_json(cfg, json{{"count", count}, {"positive_only", cfg.positive}, {"chains", chains}});
    return 0;
  }

  if (cmd == "regions") {
    json regions = json::array();
    long long count = 0, bounded = 0;
    enumerate_filter_chains(poset, cfg.m, [&](const FilterChain& c) {
      Region reg = region_of_chain(poset, c);
      if (cfg.positive && !reg.bounded) return;
      ++count;
      json entry{{"levels", reg.level}, {"bounded", reg.bounded}};
      json filters = json::array();
      for (const RootSet& f : c.filters) filters.push_back(set_to_indices(f));
      entry["filters"] = std::move(filters);
      entry["separating_m_walls"] = set_to_indices(filter_indecomposables_m(poset, c));
      if (reg.bounded) {
        ++bounded;
        IdealChain ic = ideal_chain_of(poset, reg);
        ShiVector s = max_alcove(poset, ic);
        entry["shi"] = s.r;
        RankTable rt = rank_table(poset, ic);
        entry["nonseparating_m_walls"] = set_to_indices(indecomposables(poset, ic, rt, cfg.m));
      }
      regions.push_back(std::move(entry));
    }, cfg.max_chains);
    emit_json(cfg, json{{"count", count}, {"bounded_count", bounded}, {"regions", regions}});
    return 0;
  }

  if (cmd == "lattice") {
    auto dm = enumerate_Dm(rs, cfg.m);
    std::map<int, long long> hist;
    json pts = json::array();
    for (const CorootPoint& pt : dm) {
      hist[wall_incidence(rs, pt, cfg.m, cfg.m)]++;
      pts.push_back(pt.n);
    }
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      for (auto& [i, v] : hist) rows.push_back({i, std::to_string(v), "points_by_wall_count"});
      emit_csv(cfg, rows);
      return 0;
    }
    json data{{"p", static_cast<long long>(cfg.m) * rs.coxeter - 1},
              {"point_count", static_cast<long long>(dm.size())},
              {"points", pts},
              {"points_by_wall_count", json(hist)}};
    long long tsize = 1;
    bool small = true;
    for (int i = 0; i < rs.rank; ++i) {
      tsize *= static_cast<long long>(cfg.m) * rs.coxeter - 1;
      if (tsize > 200000) small = false;
    }
    if (small) data["orbit_count"] = orbit_count_bruteforce(rs, cfg.m);
    emit_json(cfg, data);
    return 0;
  }

  if (cmd == "cluster") {
    Family fam = type.family == Family::A ? Family::A : Family::B;
    if (type.family != Family::A && type.family != Family::B && type.family != Family::C)
      throw std::invalid_argument("cluster: polygon models exist for types A, B and C only");
    int n = fam == Family::A ? rs.rank + 1 : rs.rank;
    ClusterModel model = build_model(fam, n, cfg.m);
    ComplexSummary full = summarize_faces(model, {}, cfg.max_faces);
    auto snake = snake_vertices(model);
    ComplexSummary pos = summarize_faces(model, snake, cfg.max_faces, false);
    json snake_json = json::array();
    for (int v : snake) {
      json diag = json::array();
      for (const Diagonal& d : model.vertices[v].diagonals) diag.push_back({d.a, d.b});
      snake_json.push_back(std::move(diag));
    }
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      for (std::size_t i = 0; i < full.f.size(); ++i)
        rows.push_back({static_cast<long long>(i), std::to_string(full.f[i]), "f"});
      for (std::size_t i = 0; i < full.h.size(); ++i)
        rows.push_back({static_cast<long long>(i), std::to_string(full.h[i]), "h"});
      for (std::size_t i = 0; i < pos.f.size(); ++i)
        rows.push_back({static_cast<long long>(i), std::to_string(pos.f[i]), "f_plus"});
      for (std::size_t i = 0; i < pos.h.size(); ++i)
        rows.push_back({static_cast<long long>(i), std::to_string(pos.h[i]), "h_plus"});
      emit_csv(cfg, rows);
      return 0;
    }
    emit_json(cfg, json{{"polygon_vertices", model.gon},
                        {"vertex_count", static_cast<long long>(model.vertices.size())},
                        {"f", vec_json(full.f)},
                        {"h", vec_json(full.h)},
                        {"f_plus", vec_json(pos.f)},
                        {"h_plus", vec_json(pos.h)},
                        {"snake", snake_json}});
    return 0;
  }

  if (cmd == "stats") {
    StatReport rep = compute_stats(poset, cfg.m);
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      auto push_vec = [&](const std::vector<long long>& v, const std::string& name) {
        for (std::size_t i = 0; i < v.size(); ++i)
          rows.push_back({static_cast<long long>(i), std::to_string(v[i]),
                          name + "/" + rep.sources.at(name)});
      };
      push_vec(rep.h_plus, "h_plus");
      push_vec(rep.h, "h");
      push_vec(rep.f_plus, "f_plus");
      push_vec(rep.f, "f");
      emit_csv(cfg, rows);
      return 0;
    }
    emit_json(cfg, json{{"N", rep.N.get_str()},
                        {"N_plus", rep.N_plus.get_str()},
                        {"h", vec_json(rep.h)},
                        {"h_plus", vec_json(rep.h_plus)},
                        {"f", vec_json(rep.f)},
                        {"f_plus", vec_json(rep.f_plus)},
                        {"sources", json(rep.sources)}});
    return 0;
  }

  if (cmd == "verify") {
    Depth depth = rs.rank <= 3 ? Depth::full : Depth::quick;
    VerifyReport rep = verify_all(poset, cfg.m, depth);
    if (cfg.format == "csv") {
      std::vector<std::tuple<long long, std::string, std::string>> rows;
      long long i = 0;
      for (const CheckResult& c : rep.checks)
        rows.push_back({i++, c.pass ? "1" : "0", c.name});
      emit_csv(cfg, rows);
    } else {
      json checks = json::array();
      for (const CheckResult& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      emit_json(cfg, json{{"all_pass", rep.all_pass},
                          {"depth", depth == Depth::full ? "full" : "quick"},
                          {"N_plus", rep.stats.N_plus.get_str()},
                          {"h_plus", vec_json(rep.stats.h_plus)},
                          {"f_plus", vec_json(rep.stats.f_plus)},
                          {"checks", checks}});
    }
    return rep.all_pass ? 0 : 2;
  }

  if (cmd == "figure") {
    write_output(cfg, render_figure(poset, cfg.m));
    return 0;
  }

  throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration for extended Catalan arrangements"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.max_chains = env_work_guard(cfg.max_chains);
  cfg.max_faces = env_work_guard(cfg.max_faces);

  std::vector<CLI::App*> subs;
  for (const char* name : {"roots", "poset", "chains", "regions", "lattice", "cluster",
                           "stats", "verify", "figure"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A3, B2, F4")->required();
    sub->add_option("--m", cfg.m, "number of hyperplane levels");
    sub->add_flag("--positive", cfg.positive, "positive chains / bounded regions only");
    sub->add_option("--format", cfg.format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (CLI::App* sub : subs)
      if (sub->parsed()) return run(cfg, sub->get_name());
    std::cerr << "error: no command\n";
    return 1;
  } catch (const work_limit_exceeded& e) {
    std::cerr << "error: " << e.what() << " (override with CATALAN_ATLAS_MAX_WORK)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
