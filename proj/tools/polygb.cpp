// Command line front end. Exit codes: 0 success (and "property holds" for
// predicate subcommands), 1 property fails, 2 input or usage error,
// 3 pair budget exhausted.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polygb/conditions.hpp"
#include "polygb/families.hpp"
#include "polygb/gbasis.hpp"
#include "polygb/io.hpp"
#include "polygb/lattice.hpp"

using namespace polygb;
using nlohmann::ordered_json;

namespace {

uint64_t default_pair_budget() {
  if (const char* env = std::getenv("POLYGB_PAIR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(Errc::BadConfig, "POLYGB_PAIR_BUDGET must be a positive integer");
  }
  return gbasis::kDefaultPairBudget;
}

Polyomino load_input(const std::string& path) { return load_polyomino(path); }

Vertex parse_vertex(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos) fail(Errc::ParseError, "expected X,Y: " + text);
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(Errc::ParseError, "expected X,Y: " + text);
  }
}

std::vector<Cell> parse_cell_list(const std::string& text) {
  std::vector<Cell> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_vertex(item));
  return out;
}

std::vector<std::pair<int, int>> parse_bands(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos) fail(Errc::ParseError, "expected A:B, got " + item);
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "expected A:B, got " + item);
    }
  }
  return out;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(out_path, text);
  }
}

void emit_shape(const Polyomino& p, bool as_json, const std::string& out_path) {
  write_output(out_path, as_json ? to_json(p) : to_ascii(p));
}

MonomialOrder build_order(const Polyomino& p, int order, const std::string& rotate_at) {
  MonomialOrder o(VarTable(p), order);
  if (!rotate_at.empty()) o = o.rotated_at(parse_vertex(rotate_at));
  return o;
}

int cmd_validate(const std::string& path) {
  Polyomino p = load_input(path);
  std::cout << "name=" << p.name() << " rank=" << p.rank() << " width=" << p.width()
            << " height=" << p.height() << " thin=" << (is_thin(p) ? 1 : 0)
            << " simple=" << (is_simple(p) ? 1 : 0) << " holes=" << holes(p).size() << "\n";
  return 0;
}

int cmd_analyze(const std::string& path) {
  Polyomino p = load_input(path);
  ordered_json j;
  j["name"] = p.name();
  j["rank"] = p.rank();
  j["width"] = p.width();
  j["height"] = p.height();
  j["thin"] = is_thin(p);
  j["simple"] = is_simple(p);
  j["holes"] = holes(p).size();
  j["inner_intervals"] = inner_intervals(p).size();
  j["maximal_inner_intervals"] = maximal_inner_intervals(p).size();
  j["thin_cycle"] = is_thin_cycle(p);
  if (is_thin(p)) {
    for (const char* key : {"odd", "even"}) {
      bool parity = key[0] == 'o';
      ordered_json arr = ordered_json::array();
      for (const auto& ob : conditions::thin_obstructions(p, parity))
        arr.push_back({{"pattern", pattern_name(ob.pattern)},
                       {"offset", {ob.offset.x, ob.offset.y}}});
      j["obstructions"][key] = arr;
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gb(const std::string& path, int order, const std::string& rotate_at, uint64_t budget,
           uint32_t seed) {
  Polyomino p = load_input(path);
  MonomialOrder o = build_order(p, order, rotate_at);
  auto gens = gbasis::inner_2_minors(p, o.vars());
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(gens.begin(), gens.end(), rng);
  }
  gbasis::GroebnerBasis b = gbasis::buchberger(gens, o, budget);
  std::cout << gbasis::basis_to_string(b);
  std::cerr << "elements=" << b.elems.size() << " quadratic=" << (b.quadratic() ? 1 : 0)
            << " pairs=" << b.pairs_processed << "\n";
  return 0;
}

int cmd_conditions(const std::string& path) {
  Polyomino p = load_input(path);
  conditions::ConditionReport rep = conditions::primality_sufficient(p);
  std::cout << conditions::report_to_json(rep) << "\n";
  return rep.certificate.sufficient ? 0 : 1;
}

int cmd_prime(const std::string& path, uint64_t budget, bool as_json) {
  Polyomino p = load_input(path);
  gbasis::PrimalityCertificate c = gbasis::is_prime(p, budget);
  VarTable vars(p);
  if (as_json) {
    ordered_json j;
    j["name"] = p.name();
    j["prime"] = c.prime;
    if (c.witness) {
      j["witness"] = gbasis::to_string(*c.witness, vars);
      j["witness_degree"] = c.witness->plus.deg;
      j["witness_in_lattice"] = c.witness_in_lattice;
    }
    j["saturation_passes"] = c.saturation.passes;
    std::cout << j.dump(2) << "\n";
  } else if (c.prime) {
    std::cout << "prime\n";
  } else {
    std::cout << "not prime\n";
    if (c.witness)
      std::cout << "witness: " << gbasis::to_string(*c.witness, vars)
                << (c.witness_in_lattice ? " (lattice-certified)" : "") << "\n";
  }
  return c.prime ? 0 : 1;
}

struct Cursor {
  int rank = 0;
  long long id = -1;
};

std::optional<Cursor> read_cursor(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Cursor c;
  if (!(in >> c.rank >> c.id)) return std::nullopt;
  return c;
}

int cmd_sweep(int max_rank, int rank_cap, const std::string& out_path,
              const std::string& cursor_path, int jobs, uint64_t budget) {
  std::optional<Cursor> cursor;
  if (!cursor_path.empty()) cursor = read_cursor(cursor_path);

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    bool resuming = cursor.has_value() && std::ifstream(out_path).good();
    out_file.open(out_path, resuming ? std::ios::app : std::ios::trunc);
    if (!out_file) fail(Errc::ParseError, "cannot open " + out_path);
    out = &out_file;
  }
  bool fresh = !cursor.has_value();
  if (fresh)
    *out << "rank,id,thin,simple,holes,quad_o1,quad_o2,quad_o3,quad_o4,quad_o5,quad_o6,"
            "quad_o7,quad_o8,prop21_odd,prop21_even,thm34_odd,thm34_even,thm24_cert,prime\n";

  auto row_for = [budget](const Polyomino& p, int rank, long long id) {
    std::ostringstream os;
    os << rank << "," << id << "," << (is_thin(p) ? 1 : 0) << "," << (is_simple(p) ? 1 : 0)
       << "," << holes(p).size();
    VarTable vars(p);
    for (int k = 1; k <= kNumOrders; ++k)
      os << "," << (gbasis::is_quadratic_gb(p, MonomialOrder(vars, k), budget) ? 1 : 0);
    os << "," << (conditions::prop21(p, true) ? 1 : 0) << ","
       << (conditions::prop21(p, false) ? 1 : 0);
    if (is_thin(p))
      os << "," << (conditions::thin_obstructions(p, true).empty() ? 1 : 0) << ","
         << (conditions::thin_obstructions(p, false).empty() ? 1 : 0);
    else
      os << ",,";
    os << "," << (conditions::primality_sufficient(p).certificate.sufficient ? 1 : 0);
    os << "," << (gbasis::is_prime(p, budget).prime ? 1 : 0);
    return os.str();
  };

  for (int rank = 1; rank <= max_rank; ++rank) {
    if (cursor && rank < cursor->rank) continue;
    std::vector<Polyomino> shapes;
    families::enumerate_fixed(rank, [&](const Polyomino& p) { shapes.push_back(p); }, rank_cap);
    long long start_id = (cursor && rank == cursor->rank) ? cursor->id + 1 : 0;
    if (start_id >= static_cast<long long>(shapes.size())) continue;

    std::vector<std::string> rows(shapes.size());
    std::atomic<long long> next{start_id};
    int n_threads = std::max(1, jobs);
    std::vector<std::thread> workers;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < n_threads; ++t)
      workers.emplace_back([&] {
        for (;;) {
          long long id = next.fetch_add(1);
          if (id >= static_cast<long long>(shapes.size())) return;
          try {
            rows[static_cast<size_t>(id)] = row_for(shapes[static_cast<size_t>(id)], rank, id);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
            return;
          }
        }
      });
    for (auto& w : workers) w.join();
    if (err) std::rethrow_exception(err);

    for (long long id = start_id; id < static_cast<long long>(shapes.size()); ++id) {
      *out << rows[static_cast<size_t>(id)] << "\n";
      out->flush();
      if (!cursor_path.empty()) {
        std::ofstream c(cursor_path, std::ios::trunc);
        c << rank << " " << id << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyomino ideals: quadratic bases, primality, and families"};
  app.require_subcommand(1);

  std::function<int()> action;

  // Shared option storage.
  std::string path, rotate_at, out_path, format = "ascii", name_override;
  int order = 1;
  uint64_t budget = 0;  // 0 = resolve from env or default at run time
  uint32_t seed = 0;
  bool as_json = false;

  auto budget_or_default = [&budget]() { return budget ? budget : default_pair_budget(); };

  auto* validate = app.add_subcommand("validate", "Parse a shape and print a summary line");
  validate->add_option("file", path, "ascii or json shape file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(path); }; });

  auto* analyze = app.add_subcommand("analyze", "Geometry report as json");
  analyze->add_option("file", path)->required();
  analyze->callback([&] { action = [&] { return cmd_analyze(path); }; });

  auto* gb = app.add_subcommand("gb", "Reduced basis of the inner-2-minor ideal");
  gb->add_option("file", path)->required();
  gb->add_option("--order", order, "vertex order 1..8")->check(CLI::Range(1, 8));
  gb->add_option("--rotate-at", rotate_at, "X,Y vertex to rotate to the bottom");
  gb->add_option("--pair-budget", budget, "maximum S-pairs before giving up");
  gb->add_option("--seed", seed, "shuffle generators first (0 = keep order)");
  gb->callback([&] {
    action = [&] { return cmd_gb(path, order, rotate_at, budget_or_default(), seed); };
  });

  auto* conds = app.add_subcommand("conditions",
                                   "Combinatorial report; exit 0 iff the certificate holds");
  conds->add_option("file", path)->required();
  conds->callback([&] { action = [&] { return cmd_conditions(path); }; });

  auto* prime = app.add_subcommand("prime", "Saturation primality test; exit 0 iff prime");
  prime->add_option("file", path)->required();
  prime->add_option("--pair-budget", budget);
  prime->add_flag("--json", as_json, "machine readable verdict");
  prime->callback([&] {
    action = [&] { return cmd_prime(path, budget_or_default(), as_json); };
  });

  int max_rank = 5, rank_cap = 8, jobs = 1;
  std::string cursor_path;
  auto* sweep = app.add_subcommand("sweep", "CSV survey over all fixed shapes by rank");
  sweep->add_option("--max-rank", max_rank, "largest rank to enumerate")->required();
  sweep->add_option("--rank-cap", rank_cap, "enumeration guard (default 8)");
  sweep->add_option("--out", out_path, "output csv (default stdout)");
  sweep->add_option("--cursor", cursor_path, "resume cursor file");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  sweep->add_option("--pair-budget", budget);
  sweep->callback([&] {
    action = [&] {
      return cmd_sweep(max_rank, rank_cap, out_path, cursor_path, jobs, budget_or_default());
    };
  });

  auto* gen = app.add_subcommand("generate", "Emit shapes from the built-in families");
  gen->require_subcommand(1);
  int gm = 0, gn = 0;
  std::string cols_text, rows_text, deletions_text, runs_text, gallery_name;
  bool list_gallery = false;

  auto* ggrid = gen->add_subcommand("grid", "Frame with an aligned array of holes");
  ggrid->add_option("--m", gm, "vertex box width")->required();
  ggrid->add_option("--n", gn, "vertex box height")->required();
  ggrid->add_option("--cols", cols_text, "hole column bands A:B,...")->required();
  ggrid->add_option("--rows", rows_text, "hole row bands A:B,...")->required();
  ggrid->add_flag("--json", as_json);
  ggrid->add_option("--out", out_path);
  ggrid->callback([&] {
    action = [&] {
      families::GridSpec spec{gm, gn, parse_bands(cols_text), parse_bands(rows_text)};
      emit_shape(families::make_grid(spec), as_json, out_path);
      return 0;
    };
  });

  auto* gsub = gen->add_subcommand("subgrid", "Grid minus cells from its one-interval class");
  gsub->add_option("--m", gm)->required();
  gsub->add_option("--n", gn)->required();
  gsub->add_option("--cols", cols_text)->required();
  gsub->add_option("--rows", rows_text)->required();
  gsub->add_option("--delete", deletions_text, "cells X,Y;X,Y;...")->required();
  gsub->add_flag("--json", as_json);
  gsub->add_option("--out", out_path);
  gsub->callback([&] {
    action = [&] {
      families::GridSpec spec{gm, gn, parse_bands(cols_text), parse_bands(rows_text)};
      Polyomino g = families::make_grid(spec);
      emit_shape(families::make_subgrid(g, parse_cell_list(deletions_text)), as_json, out_path);
      return 0;
    };
  });

  auto* gcyc = gen->add_subcommand("thin-cycle", "Closed chain from a run list");
  gcyc->add_option("--runs", runs_text, "e.g. E3,N3,W3,S3")->required();
  gcyc->add_flag("--json", as_json);
  gcyc->add_option("--out", out_path);
  gcyc->callback([&] {
    action = [&] {
      families::ThinCycle tc = families::make_thin_cycle(families::parse_runs(runs_text));
      std::cerr << "min_run=" << tc.min_run << "\n";
      emit_shape(tc.poly, as_json, out_path);
      return 0;
    };
  });

  auto* ggal = gen->add_subcommand("gallery", "Stored example shapes");
  ggal->add_option("name", gallery_name, "shape name");
  ggal->add_flag("--list", list_gallery, "list available names");
  ggal->add_flag("--json", as_json);
  ggal->add_option("--out", out_path);
  ggal->callback([&] {
    action = [&] {
      if (list_gallery) {
        for (const auto& [name, ascii] : families::gallery_ascii()) std::cout << name << "\n";
        return 0;
      }
      if (gallery_name.empty()) fail(Errc::BadConfig, "give a gallery name or --list");
      emit_shape(families::gallery_shape(gallery_name), as_json, out_path);
      return 0;
    };
  });

  auto* exp = app.add_subcommand("export", "Re-serialize a shape file");
  exp->add_option("file", path)->required();
  exp->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));
  exp->add_option("--name", name_override, "rename in json output");
  exp->add_option("--out", out_path);
  exp->callback([&] {
    action = [&] {
      Polyomino p = load_input(path);
      if (!name_override.empty())
        p = Polyomino::validate(std::vector<Cell>(p.cells()), name_override);
      emit_shape(p, format == "json", out_path);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::Timeout ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
