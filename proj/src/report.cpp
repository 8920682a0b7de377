#include "plumbsw/report.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <future>

namespace plumbsw {

namespace {

EuOptions eu_options(const CliOptions& opt) {
  EuOptions eo;
  if (opt.cap > 0) eo.level_cap = opt.cap;
  return eo;
}

PcOptions pc_options(const CliOptions& opt) {
  PcOptions po;
  if (opt.cap > 0) po.max_blocks = opt.cap;
  return po;
}

template <typename F>
std::vector<Rat> per_class(const LatticeContext& ctx, bool parallel, F&& f) {
  auto classes = ctx.discriminant_group().enumerate();
  std::vector<Rat> out(classes.size());
  if (parallel) {
    std::vector<std::future<Rat>> futs;
    futs.reserve(classes.size());
    for (const auto& h : classes)
      futs.push_back(std::async(std::launch::async, [&f, h] { return f(h); }));
    for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i) out[i] = f(classes[i]);
  }
  return out;
}

}  // namespace

bool RunReport::all_agree() const {
  for (const auto& r : rows)
    if (!r.agree) return false;
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return true;
}

std::string report_json(const RunReport& rep) {
  nlohmann::ordered_json j;
  j["graph"]["s"] = rep.s;
  j["graph"]["d"] = int_str(rep.d);
  j["graph"]["K2"] = rat_str(rep.k_squared);
  j["graph"]["invariant_factors"] = rep.invariant_factors;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json row;
    row["class"] = r.cls.t;
    if (r.sw_series) row["sw_series"] = rat_str(*r.sw_series);
    if (r.sw_latcoh) row["sw_latcoh"] = rat_str(*r.sw_latcoh);
    if (r.sw_surgery) row["sw_surgery"] = rat_str(*r.sw_surgery);
    if (r.d_invariant) row["d_invariant"] = rat_str(*r.d_invariant);
    if (r.eu) row["eu"] = rat_str(*r.eu);
    row["agree"] = r.agree;
    j["classes"].push_back(row);
  }
  if (!rep.checks.empty()) {
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& [name, pass] : rep.checks) {
      nlohmann::ordered_json c;
      c["name"] = name;
      c["pass"] = pass;
      j["checks"].push_back(c);
    }
  }
  return j.dump(2) + "\n";
}

RunReport compute_report(const LatticeContext& ctx, const CliOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.s = ctx.size();
  rep.d = ctx.det();
  rep.k_squared = norm2(ctx, ctx.canonical_class());
  rep.invariant_factors = ctx.discriminant_group().factors;

  auto classes = ctx.discriminant_group().enumerate();
  rep.rows.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) rep.rows[i].cls = classes[i];

  const bool want_series = opt.method == "series" || opt.method == "all";
  const bool want_latcoh = opt.method == "latcoh" || opt.method == "all";
  const bool want_surgery = opt.method == "surgery" || opt.method == "all";

  if (want_series) {
    auto vals = per_class(ctx, opt.parallel, [&](const ClassId& h) { return s_invariant(ctx, h); });
    for (std::size_t i = 0; i < vals.size(); ++i) rep.rows[i].sw_series = vals[i];
  }
  if (want_latcoh) {
    EuOptions eo = eu_options(opt);
    std::vector<EuResult> results(classes.size());
    if (opt.parallel) {
      std::vector<std::future<EuResult>> futs;
      futs.reserve(classes.size());
      for (const auto& h : classes)
        futs.push_back(std::async(std::launch::async, [&ctx, &eo, h] {
          return eu_lattice(ctx, spinc_char_class(ctx, h), eo);
        }));
      for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
      for (std::size_t i = 0; i < classes.size(); ++i)
        results[i] = eu_lattice(ctx, spinc_char_class(ctx, classes[i]), eo);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      rep.rows[i].sw_latcoh = -results[i].eu;
      rep.rows[i].eu = results[i].eu;
      rep.rows[i].d_invariant = results[i].d_invariant;
    }
  }
  if (want_surgery) {
    SwTable t = sw_surgery_all(ctx, pc_options(opt));
    for (std::size_t i = 0; i < classes.size(); ++i)
      rep.rows[i].sw_surgery = t.at(classes[i]);
  }

  for (auto& r : rep.rows) {
    std::vector<Rat> got;
    if (r.sw_series) got.push_back(*r.sw_series);
    if (r.sw_latcoh) got.push_back(*r.sw_latcoh);
    if (r.sw_surgery) got.push_back(*r.sw_surgery);
    for (const auto& v : got) r.agree = r.agree && (v == got.front());
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    PlumbingGraph g = load_graph_file(path);
    ValidationReport rep = validate(g);
    if (rep.pass) {
      out << "ok: tree with " << g.size() << " vertices, negative definite\n";
      return 0;
    }
    for (const auto& r : rep.reasons) err << r << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

namespace {

void print_report_text(const RunReport& rep, std::ostream& out) {
  out << "s=" << rep.s << " d=" << int_str(rep.d) << " K2=" << rat_str(rep.k_squared)
      << " factors=[";
  for (std::size_t i = 0; i < rep.invariant_factors.size(); ++i)
    out << (i ? "," : "") << rep.invariant_factors[i];
  out << "]\n";
  for (const auto& r : rep.rows) {
    out << r.cls.str();
    if (r.sw_series) out << "  series=" << rat_str(*r.sw_series);
    if (r.sw_latcoh) out << "  latcoh=" << rat_str(*r.sw_latcoh);
    if (r.sw_surgery) out << "  surgery=" << rat_str(*r.sw_surgery);
    if (r.d_invariant) out << "  d[k]=" << rat_str(*r.d_invariant);
    if (r.eu) out << "  eu=" << rat_str(*r.eu);
    if (!r.agree) out << "  MISMATCH";
    out << "\n";
  }
  out << "elapsed " << rep.elapsed_ms << " ms\n";
}

}  // namespace

int cmd_sw(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err) {
  PlumbingGraph g;
  try {
    g = load_graph_file(path);
    ValidationReport vrep = validate(g);
    if (!vrep.pass) {
      for (const auto& r : vrep.reasons) err << r << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  try {
    LatticeContext ctx(g);
    if (!opt.dump_series_path.empty()) {
      std::ofstream csv(opt.dump_series_path);
      std::vector<std::int64_t> bound(ctx.size(), opt.dump_bound);
      dump_csv(ctx, support_table(ctx, bound), csv);
    }
    RunReport rep = compute_report(ctx, opt);
    if (opt.json)
      out << report_json(rep);
    else
      print_report_text(rep, out);
    return rep.all_agree() ? 0 : 2;
  } catch (const ComputationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int cmd_check(const std::string& path, const CliOptions& opt, std::ostream& out,
              std::ostream& err) {
  PlumbingGraph g;
  try {
    g = load_graph_file(path);
    ValidationReport vrep = validate(g);
    if (!vrep.pass) {
      for (const auto& r : vrep.reasons) err << r << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    LatticeContext ctx(g);
    EuOptions eo = eu_options(opt);
    PcOptions po = pc_options(opt);
    auto classes = ctx.discriminant_group().enumerate();

    auto fail = [&](const std::string& name) {
      err << "check failed: " << name << "\n";
      return 2;
    };

    if (!verify_cube_expansion(ctx, characteristic_region(ctx, 3)))
      return fail("cube expansion of Z");
    out << "cube expansion: ok\n";

    for (const auto& h : classes)
      if (!hilbert_expression_check(ctx, h, 3))
        return fail("representative independence at class " + h.str());
    out << "representative independence: ok\n";

    if (!verify_symmetry(ctx, eo)) return fail("eu symmetry under involution");
    out << "eu symmetry: ok\n";

    if (ctx.size() >= 2) {
      for (int u = 0; u < ctx.size(); ++u) {
        if (ctx.valency()[u] != 1) continue;
        for (const auto& h : classes) {
          if (!verify_partial_sum(ctx, zone_representative(ctx, h), u, po))
            return fail("partial-sum identity at " + ctx.graph().ids[u] + " class " + h.str());
          if (!verify_surgery_identity(ctx, h, u, po))
            return fail("surgery identity at " + ctx.graph().ids[u] + " class " + h.str());
        }
      }
      out << "partial sums and surgery identities: ok\n";
    }

    SwTable series = sw_all(ctx);
    SwTable surgery = sw_surgery_all(ctx, po);
    for (const auto& h : classes) {
      Rat via_latcoh = -eu_lattice(ctx, spinc_char_class(ctx, h), eo).eu;
      if (series.at(h) != via_latcoh || series.at(h) != surgery.at(h))
        return fail("route equality at class " + h.str());
    }
    out << "route equality: ok\n";

    if (opt.with_blowup) {
      SwTable base = series;
      for (int pass = 0; pass < 2; ++pass) {
        if (pass == 1 && g.edges.empty()) break;
        PlumbingGraph gb = pass == 0
                               ? blow_up_vertex(g, g.ids[0])
                               : blow_up_edge(g, g.ids[g.edges.front().first],
                                              g.ids[g.edges.front().second]);
        LatticeContext ctxb(gb);
        SwTable tb = sw_all(ctxb);
        int v = pass == 0 ? 0 : g.edges.front().first;
        int w = pass == 0 ? -1 : g.edges.front().second;
        for (const auto& h : classes)
          if (base.at(h) != tb.at(transport_class_blowup(ctx, ctxb, h, v, w)))
            return fail("blow-up invariance at class " + h.str());
      }
      out << "blow-up invariance: ok\n";
    }
    return 0;
  } catch (const ComputationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace plumbsw
