#include "smallcover/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "smallcover/betti.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/obstruct.hpp"

#ifndef SMALLCOVER_VERSION
#define SMALLCOVER_VERSION "dev"
#endif

namespace smallcover::cli {

using nlohmann::json;

namespace {

std::vector<int> one_based(std::span<const int> v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::vector<int> subset_list(FactorSet s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if ((s >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json matching_json(const PolygonProduct& p, const SquareMatching& matching) {
  const auto squares = square_factors(p);
  auto weight = [&](const OppositeWeight& w) {
    return json{{"factor", squares.at(w.square) + 1}, {"edges", w.plus ? "1,3" : "2,4"}};
  };
  json out = json::array();
  for (const auto& pair : matching) out.push_back({weight(pair.first), weight(pair.second)});
  return out;
}

const char* reason_name(Refusal::Reason r) {
  switch (r) {
    case Refusal::Reason::odd_factor: return "odd_factor";
    case Refusal::Reason::weight_not_in_row_space: return "weight_not_in_row_space";
    case Refusal::Reason::no_square_matching: return "no_square_matching";
  }
  return "unknown";
}

json refusal_json(const Refusal& r) {
  json out{{"reason", reason_name(r.reason)}, {"message", r.message}};
  out["factor"] = r.factor >= 0 ? json(r.factor + 1) : json(nullptr);
  return out;
}

json hodge_matrix_json(const HodgePolynomial& h) {
  json out = json::array();
  for (const auto& row : h.h) out.push_back(row);
  return out;
}

std::vector<int> parse_factor_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad factor list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty factor list");
  for (int m : out) {
    if (m < 3) throw InputError("polygons need at least 3 sides, got " + std::to_string(m));
  }
  return out;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

CharMatrix parse_instance(const json& j) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("rows")) {
    throw InputError("instance must be an object with keys 'factors' and 'rows'");
  }
  std::vector<int> sides;
  std::vector<std::string> rows;
  try {
    sides = j.at("factors").get<std::vector<int>>();
    rows = j.at("rows").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad instance field: ") + e.what());
  }
  if (sides.empty()) throw InputError("instance has no factors");
  int m = 0;
  for (int s : sides) {
    if (s < 3) throw InputError("polygons need at least 3 sides, got " + std::to_string(s));
    m += s;
  }
  if (m > 64) throw InputError("at most 64 facets are supported");
  if (rows.size() != 2 * sides.size()) {
    throw InputError("expected " + std::to_string(2 * sides.size()) + " rows, got " +
                     std::to_string(rows.size()));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != m ||
        rows[r].find_first_not_of("01") != std::string::npos) {
      throw InputError("row " + std::to_string(r + 1) + " must be a bitstring of length " +
                       std::to_string(m));
    }
  }
  return CharMatrix(PolygonProduct(sides), BitMatrix::from_strings(rows));
}

CharMatrix load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_instance(j);
}

json instance_json(const CharMatrix& lambda) {
  return {{"factors", lambda.product().side_list()}, {"rows", lambda.matrix().to_strings()}};
}

std::vector<std::string> render_diamond(const HodgePolynomial& h) {
  const int n = h.n;
  std::size_t width = 1;
  for (const auto& row : h.h) {
    for (auto x : row) width = std::max(width, std::to_string(x).size());
  }
  const std::size_t cell = width + 1;
  std::vector<std::string> lines;
  for (int k = 2 * n; k >= 0; --k) {
    const int lo = std::max(0, k - n), hi = std::min(k, n);
    std::string line(static_cast<std::size_t>(n - (hi - lo)) * cell / 2, ' ');
    for (int p = hi; p >= lo; --p) {
      const std::string v = std::to_string(h.h[p][k - p]);
      if (p != hi) line += ' ';
      line += std::string(width - v.size(), ' ') + v;
    }
    lines.push_back(line);
  }
  return lines;
}

json analyze_json(const CharMatrix& lambda) {
  const auto& p = lambda.product();
  json out;
  out["factors"] = p.side_list();

  const auto orient = orientable(lambda);
  out["orientable"] = orient.orientable;
  out["orientable_witness"] = orient.witness ? json(orient.witness->to_string()) : json(nullptr);

  const auto compat = factor_compatible(lambda);
  out["factor_compatible"] = certificate(compat) != nullptr;
  if (const auto* cert = certificate(compat)) {
    out["certificate"] = {{"matching", matching_json(p, cert->matching)},
                          {"colperm", one_based(cert->colperm)},
                          {"regrouped", cert->regrouped.matrix().to_strings()}};
  } else {
    out["refusal"] = refusal_json(*refusal(compat));
  }

  json obstructions = json::array();
  if (auto t = triangle_obstruction(p)) {
    obstructions.push_back({{"kind", "triangle_factor"},
                            {"factor", *t + 1},
                            {"message", "triangle factor: not c-symplectic"}});
  }
  const auto odd = all_odd_obstruction(lambda);
  if (odd.applicable) {
    obstructions.push_back({{"kind", "all_odd"},
                            {"message", "all factors odd: non-orientable"},
                            {"det_sum", odd.det_sum ? 1 : 0}});
  }
  out["obstructions"] = obstructions;
  const auto verdict = symplectic_verdict(lambda);
  out["symplectic"] = {{"verdict", to_string(verdict.kind)}, {"message", verdict.message}};

  json even = json::array();
  for (const auto& e : even_sides_consistency(lambda)) {
    even.push_back(
        {{"factor", e.factor + 1}, {"sides", e.sides}, {"weight_in_row_space", e.weight_in_row_space}});
  }
  out["even_sides"] = even;

  const auto betti_q = small_cover_betti(lambda);
  const auto sq1 = sq1_e2_betti(lambda);
  out["betti_Q"] = betti_q;
  out["betti_F2"] = mod2_betti(lambda);
  out["sq1_e2"] = sq1;
  out["sq1_check"] = sq1 == betti_q ? "agree" : "disagree";
  return out;
}

json hodge_json(const CharMatrix& lambda, const HodgeAnalysis& a) {
  const int n = a.polynomial.n;
  json out;
  out["factors"] = lambda.product().side_list();
  json tables = json::array();
  for (const auto& t : a.tables) {
    json chars = json::array();
    for (const auto& [rho, mult] : t.entries) {
      chars.push_back({{"character", rho.rep.to_string()}, {"multiplicity", mult}});
    }
    tables.push_back({{"factor", t.factor + 1}, {"genus", t.genus}, {"characters", chars}});
  }
  out["multiplicities"] = tables;
  json ts = json::array();
  for (FactorSet s = 0; s < a.t.size(); ++s) {
    ts.push_back({{"S", subset_list(s, n)}, {"t", a.t[s]}});
  }
  out["t"] = ts;
  out["t_averaging_checked"] = a.averaging_checked;
  out["T"] = a.T;
  out["hodge"] = hodge_matrix_json(a.polynomial);
  out["diamond"] = render_diamond(a.polynomial);

  const auto from_hodge = poincare_from_hodge(a.polynomial);
  const auto betti_q = small_cover_betti(lambda);
  json rt{{"betti_from_hodge", from_hodge}, {"betti_Q", betti_q}};
  bool ok = from_hodge == betti_q && a.polynomial.symmetric();
  try {
    const auto T = recover_T_from_poincare(betti_q, n);
    rt["recovered_T"] = T;
    ok = ok && T == a.T;
  } catch (const std::invalid_argument& e) {
    rt["recovered_T"] = nullptr;
    rt["error"] = e.what();
    ok = false;
  }
  rt["ok"] = ok;
  out["round_trip"] = rt;
  return out;
}

json blockize_json(const CharMatrix& lambda, const TriangularForm& form) {
  json out;
  out["factor_order"] = one_based(form.factor_order);
  out["colperm"] = one_based(form.colperm);
  out["U"] = form.U.to_strings();
  out["lambda_prime"] = instance_json(form.result);
  json tower = json::array();
  for (const auto& f : form.tower) {
    tower.push_back({{"factor", f.factor + 1},
                     {"sides", f.sides},
                     {"genus", f.genus},
                     {"block", f.block.to_strings()}});
  }
  out["tower"] = tower;
  const auto report = verify_blockform(form, lambda);
  out["verified"] = report.ok();
  out["violations"] = report.violations;
  return out;
}

json census_json(const Census& census, bool compatible_only) {
  json rows = json::array();
  for (const auto& r : census.rows) {
    if (compatible_only && !r.factor_compatible) continue;
    json row{{"rows", r.matrix.matrix().to_strings()},
             {"orientable", r.orientable},
             {"factor_compatible", r.factor_compatible},
             {"symplectic", to_string(r.verdict.kind)},
             {"betti_Q", r.betti_q},
             {"betti_F2", r.betti_f2},
             {"sq1_check", r.sq1_agrees ? "agree" : "disagree"}};
    if (r.refusal) row["refusal"] = reason_name(r.refusal->reason);
    if (r.hodge) {
      row["T"] = r.hodge->T;
      row["hodge"] = hodge_matrix_json(r.hodge->polynomial);
    }
    rows.push_back(row);
  }
  return {{"factors", census.product.side_list()},
          {"classes", census.rows.size()},
          {"orientable", census.orientable_count()},
          {"factor_compatible", census.compatible_count()},
          {"compatible_only", compatible_only},
          {"rows", rows}};
}

std::string census_table(const Census& census, bool compatible_only) {
  std::ostringstream os;
  os << "factors " << join({census.product.side_list().begin(), census.product.side_list().end()})
     << ": " << census.rows.size() << " classes, " << census.orientable_count() << " orientable, "
     << census.compatible_count() << " factor-compatible\n";
  os << std::left << std::setw(5) << "#" << std::setw(4 + census.product.facet_count())
     << "rows" << std::setw(6) << "ori" << std::setw(5) << "fc" << std::setw(17) << "symplectic"
     << std::setw(16) << "betti_Q" << std::setw(16) << "betti_F2" << "T\n";
  std::size_t index = 0;
  for (const auto& r : census.rows) {
    ++index;
    if (compatible_only && !r.factor_compatible) continue;
    const auto strings = r.matrix.matrix().to_strings();
    for (std::size_t k = 0; k < strings.size(); ++k) {
      os << std::setw(5) << (k == 0 ? std::to_string(index) : "")
         << std::setw(4 + census.product.facet_count()) << strings[k];
      if (k == 0) {
        os << std::setw(6) << (r.orientable ? "yes" : "no") << std::setw(5)
           << (r.factor_compatible ? "yes" : "no") << std::setw(17) << to_string(r.verdict.kind)
           << std::setw(16) << join(r.betti_q) << std::setw(16) << join(r.betti_f2)
           << (r.hodge ? join(r.hodge->T) : "-");
      }
      os << "\n";
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small covers over products of polygons", "smallcover"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check the vertex condition");
  validate_cmd->add_option("instance", path, "Instance file")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Orientability, compatibility, Betti numbers");
  analyze_cmd->add_option("instance", path, "Instance file")->required();
  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge numbers of a factor-compatible instance");
  hodge_cmd->add_option("instance", path, "Instance file")->required();
  std::string out_path;
  auto* blockize_cmd = app.add_subcommand("blockize", "Block lower triangular form");
  blockize_cmd->add_option("instance", path, "Instance file")->required();
  blockize_cmd->add_option("--out", out_path, "Write the block form as an instance file");

  std::string factor_text;
  int jobs = 1;
  bool compatible_only = false;
  std::string snapshot_dir;
  auto* census_cmd = app.add_subcommand("census", "Enumerate and classify all instances");
  census_cmd->add_option("factors", factor_text, "Comma separated side counts, e.g. 4,4")
      ->required();
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  census_cmd->add_flag("--compatible-only", compatible_only, "List factor-compatible classes only");
  census_cmd->add_option("--snapshot-dir", snapshot_dir, "Golden snapshot directory");
  for (auto* sub : {validate_cmd, analyze_cmd, hodge_cmd, blockize_cmd, census_cmd}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const bool table = format == "table";

  try {
    if (*validate_cmd) {
      const CharMatrix lambda = load_instance(path);
      const auto v = validate(lambda);
      json j{{"valid", v.valid}};
      if (!v.valid) j["vertex"] = one_based(v.witness);
      if (table) {
        out << (v.valid ? "valid" : "not characteristic at vertex j=(" +
                                        join({j["vertex"].begin(), j["vertex"].end()}) + ")")
            << "\n";
      } else {
        write_json(out, j);
      }
      return v.valid ? kOk : kNotCharacteristic;
    }

    if (*census_cmd) {
      const PolygonProduct product(parse_factor_list(factor_text));
      const Census census = classify(product, jobs);
      const json j = census_json(census, compatible_only);
      if (!snapshot_dir.empty()) {
        std::string name = "census";
        for (int m : product.side_list()) name += "_" + std::to_string(m);
        if (compatible_only) name += "_compatible";
        const auto file = std::filesystem::path(snapshot_dir) / (name + ".json");
        if (std::filesystem::exists(file)) {
          std::ifstream in(file);
          const json golden = json::parse(in);
          if (golden.value("census", json()) != j) {
            err << "census differs from snapshot " << file.string() << " (generated by "
                << golden.value("generator", std::string("?")) << ")\n";
            return kInputError;
          }
          err << "census matches snapshot " << file.string() << "\n";
        } else {
          std::filesystem::create_directories(snapshot_dir);
          std::ofstream(file) << json{{"generator", "smallcover " SMALLCOVER_VERSION},
                                      {"census", j}}.dump(2)
                              << "\n";
          err << "snapshot written to " << file.string() << "\n";
        }
      }
      if (table) {
        out << census_table(census, compatible_only);
      } else {
        write_json(out, j);
      }
      return kOk;
    }

    const CharMatrix lambda = load_instance(path);
    lambda.require_valid();

    if (*analyze_cmd) {
      const json j = analyze_json(lambda);
      if (table) {
        for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
      } else {
        write_json(out, j);
      }
      return kOk;
    }

    if (*hodge_cmd) {
      const auto analysis = hodge_analysis(lambda);
      const json j = hodge_json(lambda, analysis);
      if (table) {
        out << "T = (" << join(analysis.T) << ")\n";
        for (const auto& line : render_diamond(analysis.polynomial)) out << line << "\n";
      } else {
        write_json(out, j);
      }
      return kOk;
    }

    if (*blockize_cmd) {
      const auto form = blockize(lambda);
      const json j = blockize_json(lambda, form);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw InputError("cannot write " + out_path);
        file << instance_json(form.result).dump(2) << "\n";
      }
      if (table) {
        out << "factor order: " << j["factor_order"].dump() << "\n";
        for (const auto& row : form.result.matrix().to_strings()) out << row << "\n";
        out << "verified: " << (j["verified"].get<bool>() ? "yes" : "no") << "\n";
      } else {
        write_json(out, j);
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GuardrailExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotCharacteristic& e) {
    err << "error: " << e.what() << "\n";
    return kNotCharacteristic;
  } catch (const NotFactorCompatible& e) {
    err << "error: " << e.what() << "\n";
    return kNotFactorCompatible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace smallcover::cli
