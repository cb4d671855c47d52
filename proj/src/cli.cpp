// Copyright 2026 The twoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "twoq/cartan.hpp"
#include "twoq/entangler.hpp"
#include "twoq/errors.hpp"
#include "twoq/hamflow.hpp"
#include "twoq/invariants.hpp"
#include "twoq/kak.hpp"
#include "twoq/synth.hpp"
#include "twoq/weyl.hpp"

namespace twoq {

namespace {

using nlohmann::json;

constexpr int kExportDigits = 17;

struct Options {
  int digits = 12;
  double tol = tol::kUnitary;
};

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

void round_numbers(json& j, int digits) {
  if (j.is_number_float()) {
    j = round_sig(j.get<double>(), digits);
  } else if (j.is_structured()) {
    for (auto& item : j) round_numbers(item, digits);
  }
}

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, round_sig(x, digits));
  return buf;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

template <typename Mat>
json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const CVec4& v) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back(complex_json(v(i)));
  return out;
}

json coords_json(const CartanCoord& c) { return json::array({c[0], c[1], c[2]}); }

json invariants_json(const LocalInvariants& inv) {
  return {{"g1", complex_json(inv.g1)},
          {"g2", inv.g2},
          {"g2_imag_residual", inv.g2_imag_residual}};
}

json local_json(const Gate4& k) {
  const LocalFactors f = factor_local(k);
  return {{"a", matrix_json(f.a)}, {"b", matrix_json(f.b)}, {"phase", f.phase}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

CMat4 parse_matrix(const json& doc, const std::string& where) {
  try {
    const json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != 4) {
      throw Error(ErrorCode::ParseError, where + ": matrix must have 4 rows");
    }
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4) {
        throw Error(ErrorCode::ParseError, where + ": rows must have 4 entries");
      }
      for (int j = 0; j < 4; ++j) {
        const json& e = rows[i][j];
        if (!e.is_array() || e.size() != 2) {
          throw Error(ErrorCode::ParseError, where + ": entries are [re, im]");
        }
        m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, where + ": " + e.what());
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t count,
                               const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidSpec, "bad number in " + what);
    }
    out.push_back(v);
  }
  if (out.size() != count) {
    throw Error(ErrorCode::InvalidSpec,
                what + " needs " + std::to_string(count) + " values");
  }
  return out;
}

// Sets *name to the file's "name" field, or to arg.
Gate4 resolve_gate(const std::string& arg, const Options& opt,
                   std::string* name = nullptr) {
  Gate4 g;
  if (name) *name = arg;
  if (std::filesystem::is_regular_file(arg)) {
    const json doc = read_json_file(arg);
    g = parse_matrix(doc, arg);
    if (name && doc.contains("name") && doc["name"].is_string()) {
      *name = doc["name"].get<std::string>();
    }
  } else {
    g = named_gate(arg);
  }
  require_unitary(g, opt.tol);
  return g;
}

HamiltonianSpec spec_from_json(const json& doc, const std::string& where) {
  if (doc.contains("matrix")) {
    return HamiltonianSpec::custom(parse_matrix(doc, where));
  }
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "isotropic") return HamiltonianSpec::isotropic();
    if (kind == "xy") return HamiltonianSpec::xy();
    if (kind == "ising") return HamiltonianSpec::ising();
    if (kind == "exchange") {
      return HamiltonianSpec::exchange(
          doc.value("jxx", 0.0), doc.value("jyy", 0.0), doc.value("jxy", 0.0),
          doc.value("jyx", 0.0));
    }
    if (kind == "josephson") {
      return HamiltonianSpec::josephson(doc.at("alpha").get<double>(),
                                        doc.at("el").get<double>());
    }
    throw Error(ErrorCode::InvalidSpec, where + ": unknown kind " + kind);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, where + ": " + e.what());
  }
}

HamiltonianSpec resolve_hamiltonian(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    return spec_from_json(read_json_file(arg), arg);
  }
  if (arg == "isotropic") return HamiltonianSpec::isotropic();
  if (arg == "xy") return HamiltonianSpec::xy();
  if (arg == "ising") return HamiltonianSpec::ising();
  if (arg.rfind("exchange:", 0) == 0) {
    const auto j = parse_list(arg.substr(9), 4, "exchange");
    return HamiltonianSpec::exchange(j[0], j[1], j[2], j[3]);
  }
  if (arg.rfind("josephson:", 0) == 0) {
    const auto p = parse_list(arg.substr(10), 2, "josephson");
    return HamiltonianSpec::josephson(p[0], p[1]);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown Hamiltonian: " + arg);
}

json spec_json(const HamiltonianSpec& spec) {
  json out = {{"kind", std::string(kind_name(spec.kind))}};
  switch (spec.kind) {
    case HamiltonianKind::Exchange:
      out["jxx"] = spec.j[0];
      out["jyy"] = spec.j[1];
      out["jxy"] = spec.j[2];
      out["jyx"] = spec.j[3];
      break;
    case HamiltonianKind::Josephson:
      out["alpha"] = spec.alpha;
      out["el"] = spec.e_l;
      break;
    case HamiltonianKind::Custom:
      out["matrix"] = matrix_json(spec.matrix);
      break;
    default:
      break;
  }
  return out;
}

void emit(std::ostream& out, json doc, int digits) {
  round_numbers(doc, digits);
  out << doc.dump(2) << "\n";
}

void emit_error(std::ostream& err, std::string_view code, const std::string& msg) {
  const json doc = {{"error", {{"code", std::string(code)}, {"message", msg}}}};
  err << doc.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-qubit gate geometry: invariants, Weyl chamber coordinates, "
               "perfect entanglers, Hamiltonian flows and circuit synthesis.",
               "twoq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--digits", opt.digits, "Significant digits in output")
      ->check(CLI::Range(1, 17));
  app.add_option("--tol", opt.tol, "Unitarity tolerance for gate inputs")
      ->check(CLI::PositiveNumber);

  std::function<void()> action;
  const std::string gate_help =
      "Gate file ({\"matrix\": 4x4 [re, im]}) or name: identity, cnot, cz, "
      "swap, sqrtswap, sqrtswap_dag, cu:g or cu:g1,g2,g3";
  const std::string ham_help =
      "Hamiltonian file ({\"kind\": ...} or {\"matrix\": ...}) or name: "
      "isotropic, xy, ising, exchange:Jxx,Jyy,Jxy,Jyx, josephson:alpha,EL";

  std::string gate_a, gate_b;

  auto* inv_cmd = app.add_subcommand("invariants", "Local invariants G1, G2");
  inv_cmd->add_option("gate", gate_a, gate_help)->required();
  inv_cmd->callback([&] {
    action = [&] {
      emit(out, invariants_json(local_invariants(resolve_gate(gate_a, opt), opt.tol)),
           opt.digits);
    };
  });

  auto* coords_cmd = app.add_subcommand("coords", "Canonical Weyl chamber coordinates");
  coords_cmd->add_option("gate", gate_a, gate_help)->required();
  coords_cmd->callback([&] {
    action = [&] {
      emit(out, {{"c", coords_json(gate_coords(resolve_gate(gate_a, opt), opt.tol))}},
           opt.digits);
    };
  });

  double equiv_tol = 1e-8;
  auto* equiv_cmd = app.add_subcommand("equiv", "Local equivalence of two gates");
  equiv_cmd->add_option("gate_a", gate_a, gate_help)->required();
  equiv_cmd->add_option("gate_b", gate_b, gate_help)->required();
  equiv_cmd->add_option("--equiv-tol", equiv_tol, "Tolerance on G1 and G2")
      ->check(CLI::PositiveNumber);
  equiv_cmd->callback([&] {
    action = [&] {
      const Gate4 a = resolve_gate(gate_a, opt);
      const Gate4 b = resolve_gate(gate_b, opt);
      emit(out,
           {{"equivalent", locally_equivalent(a, b, equiv_tol)},
            {"a", invariants_json(local_invariants(a, opt.tol))},
            {"b", invariants_json(local_invariants(b, opt.tol))}},
           opt.digits);
    };
  });

  auto* pe_cmd = app.add_subcommand("pe", "Perfect entangler verdict and hull witness");
  pe_cmd->add_option("gate", gate_a, gate_help)->required();
  pe_cmd->callback([&] {
    action = [&] {
      const Gate4 g = resolve_gate(gate_a, opt);
      const PeVerdict v = is_perfect_entangler(g);
      json doc = {{"is_pe", v.is_pe}, {"margin", v.margin}};
      if (v.hull_witness) {
        const RVec4& w = *v.hull_witness;
        doc["witness"] = json::array({w(0), w(1), w(2), w(3)});
      } else {
        doc["witness"] = nullptr;
      }
      doc["c"] = coords_json(gate_coords(g, opt.tol));
      emit(out, doc, opt.digits);
    };
  });

  auto* kak_cmd = app.add_subcommand("kak", "KAK decomposition exp(i alpha) k1 A k2");
  kak_cmd->add_option("gate", gate_a, gate_help)->required();
  kak_cmd->callback([&] {
    action = [&] {
      const Gate4 g = resolve_gate(gate_a, opt);
      const KakDecomposition d = kak_decompose(g, opt.tol);
      emit(out,
           {{"alpha", d.alpha},
            {"c", coords_json(d.coords)},
            {"k1", local_json(d.k1)},
            {"k2", local_json(d.k2)},
            {"residual", (kak_reconstruct(d) - g).norm()}},
           opt.digits);
    };
  });

  auto* ent_cmd = app.add_subcommand(
      "entangle-input", "Product input mapped to a maximally entangled state");
  ent_cmd->add_option("gate", gate_a, gate_help)->required();
  ent_cmd->callback([&] {
    action = [&] {
      const EntanglingInput e = entangling_input(resolve_gate(gate_a, opt));
      emit(out,
           {{"psi_in", vector_json(e.psi_in)},
            {"psi_out", vector_json(e.psi_out)},
            {"ent_in", complex_json(ent(e.psi_in).value)},
            {"ent_out", complex_json(ent(e.psi_out).value)}},
           opt.digits);
    };
  });

  std::string ham;
  double tmax = 0.0;
  long long steps = 0;
  std::string format = "json";
  int traj_threads = 1;
  auto* traj_cmd = app.add_subcommand(
      "trajectory", "Canonical coordinates of exp(iHt) on t_i = tmax * i / steps");
  traj_cmd->add_option("--ham", ham, ham_help)->required();
  traj_cmd->add_option("--tmax", tmax, "Final time")->required();
  traj_cmd->add_option("--steps", steps, "Number of intervals")
      ->required()
      ->check(CLI::Range(1LL, 10000000LL));
  traj_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  traj_cmd->add_option("--threads", traj_threads, "Worker threads")
      ->check(CLI::Range(1, 1024));
  traj_cmd->callback([&] {
    action = [&] {
      if (!std::isfinite(tmax)) {
        throw Error(ErrorCode::InvalidParams, "--tmax must be finite");
      }
      const HamiltonianSpec spec = resolve_hamiltonian(ham);
      std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
      for (long long i = 0; i <= steps; ++i) {
        grid[i] = tmax * static_cast<double>(i) / static_cast<double>(steps);
      }
      const auto samples = trajectory(spec, grid, traj_threads);
      if (format == "csv") {
        const int d = opt.digits;
        out << "t,c1,c2,c3,g1_re,g1_im,g2,is_pe\n";
        for (const auto& s : samples) {
          out << format_number(s.t, d) << ',' << format_number(s.coords[0], d)
              << ',' << format_number(s.coords[1], d) << ','
              << format_number(s.coords[2], d) << ','
              << format_number(s.g1.real(), d) << ','
              << format_number(s.g1.imag(), d) << ',' << format_number(s.g2, d)
              << ',' << (s.is_pe ? 1 : 0) << "\n";
        }
        return;
      }
      json rows = json::array();
      for (const auto& s : samples) {
        rows.push_back({{"t", s.t},
                        {"c", coords_json(s.coords)},
                        {"g1", complex_json(s.g1)},
                        {"g2", s.g2},
                        {"is_pe", s.is_pe}});
      }
      json doc = {{"hamiltonian", spec_json(spec)}, {"samples", rows}};
      try {
        const CartanTarget ct = cartan_conjugate(realize(spec));
        const auto loop = torus_loop_period(ct.c);
        doc["loop"] = {{"closed", loop.has_value()},
                       {"period", loop ? json(*loop) : json(nullptr)},
                       {"heuristic", true}};
      } catch (const Error&) {
        // Flows with a local part have no constant-velocity loop test.
      }
      emit(out, doc, opt.digits);
    };
  });

  auto* vol_cmd = app.add_subcommand("volumes", "Exact chamber and perfect entangler volumes");
  vol_cmd->callback([&] {
    action = [&] {
      const VolumeReport v = pe_volume_exact();
      emit(out,
           {{"chamber", v.chamber},
            {"cut_lqpo", v.cut_lqpo},
            {"cut_npa2a3", v.cut_npa2a3},
            {"cut_lmna1", v.cut_lmna1},
            {"pe", v.pe},
            {"ratio", v.pe / v.chamber}},
           opt.digits);
    };
  });

  std::uint64_t samples = 0, seed = 0;
  int mc_threads = 0;
  auto* frac_cmd = app.add_subcommand(
      "pe-fraction",
      "Monte Carlo fraction of perfect entanglers. Points are uniform in the "
      "Weyl chamber under its Euclidean volume measure, not Haar measure on "
      "SU(4).");
  frac_cmd->add_option("--samples", samples, "Number of chamber samples")
      ->required()
      ->check(CLI::PositiveNumber);
  frac_cmd->add_option("--seed", seed, "64-bit seed")->required();
  frac_cmd->add_option("--threads", mc_threads,
                       "Worker threads (0: all cores); output does not depend on it")
      ->check(CLI::Range(0, 1024));
  frac_cmd->callback([&] {
    action = [&] {
      emit(out,
           {{"samples", samples},
            {"seed", seed},
            {"fraction", pe_fraction_mc(samples, seed, mc_threads)},
            {"measure", "euclidean-chamber"}},
           opt.digits);
    };
  });

  std::string target;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Three-pulse circuit realising a target from a non-local Hamiltonian");
  synth_cmd->add_option("--target", target, gate_help)->required();
  synth_cmd->add_option("--ham", ham, ham_help)->required();
  synth_cmd->callback([&] {
    action = [&] {
      const Gate4 g = resolve_gate(target, opt);
      const HamiltonianSpec spec = resolve_hamiltonian(ham);
      const CircuitPlan plan = synthesize(g, spec);
      json steps_json = json::array();
      for (const PlanStep& s : plan.steps) {
        if (s.kind == PlanStep::Kind::Local) {
          steps_json.push_back({{"local", local_json(s.local)}});
        } else {
          steps_json.push_back({{"pulse", s.duration}});
        }
      }
      json doc = {{"hamiltonian", spec_json(spec)},
                  {"durations", json::array({plan.t[0], plan.t[1], plan.t[2]})},
                  {"steps", steps_json},
                  {"residual", verify_plan(plan, g)}};
      if (plan.nonnegative_t) {
        const auto& t = *plan.nonnegative_t;
        doc["nonnegative_durations"] = json::array({t[0], t[1], t[2]});
        doc["period"] = *plan.period;
      } else {
        doc["nonnegative_durations"] = nullptr;
        doc["period"] = nullptr;
      }
      emit(out, doc, opt.digits);
    };
  });

  double e_l = 1.0;
  auto* jos_cmd = app.add_subcommand(
      "josephson-min-time", "Shortest Josephson evolution reaching the CNOT class");
  jos_cmd->add_option("--el", e_l, "Inductive energy E_L")->required();
  jos_cmd->callback([&] {
    action = [&] {
      const JosephsonCnot s = josephson_cnot_min_time(e_l);
      emit(out, {{"alpha", s.alpha}, {"t", s.t}, {"k", s.k}}, opt.digits);
    };
  });

  auto* export_cmd = app.add_subcommand(
      "export-gate", "Write a gate as a gate file with 17 significant digits");
  export_cmd->add_option("gate", gate_a, gate_help)->required();
  export_cmd->callback([&] {
    action = [&] {
      std::string name;
      const Gate4 g = resolve_gate(gate_a, opt, &name);
      emit(out, {{"name", name}, {"matrix", matrix_json(g)}}, kExportDigits);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, error_code_name(ErrorCode::ParseError), e.what());
    return 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.what());
    return is_numerical(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 2;
  }
}

}  // namespace twoq
