#include "fp/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fp/category.hpp"
#include "fp/cy.hpp"
#include "fp/error.hpp"
#include "fp/matrix.hpp"
#include "fp/quiver.hpp"
#include "fp/rational.hpp"
#include "fp/spectral.hpp"
#include "fp/tube.hpp"

namespace fp::cli {
namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dec12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string est_str(const cat::Growth& g) { return g.defined ? dec12(g.value) : "-inf"; }

ordered_json matrix_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(long(m.at(i, j).v.get_num().get_si()));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool plain_integer(const std::string& t) {
  size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (k == t.size()) return false;
  for (; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  return true;
}

template <class T, class Conv>
std::vector<T> split_integers(const std::string& s, char sep, Conv conv) {
  std::vector<T> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, sep)) {
    if (!plain_integer(tok)) throw DomainError("bad integer list '" + s + "'");
    try {
      out.push_back(conv(tok));
    } catch (const std::exception&) {
      throw DomainError("integer out of range in '" + s + "'");
    }
  }
  if (out.empty()) throw DomainError("bad integer list '" + s + "'");
  return out;
}

std::vector<int> parse_index_list(const std::string& s) {
  return split_integers<int>(s, ',', [](const std::string& t) { return std::stoi(t); });
}

std::vector<long> parse_weight_list(const std::string& s) {
  return split_integers<long>(s, ',', [](const std::string& t) { return std::stol(t); });
}

std::vector<std::vector<int>> parse_blocks(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ';')) out.push_back(parse_index_list(tok));
  if (out.empty()) throw DomainError("bad block list '" + s + "'");
  return out;
}

// space-separated coefficients, arbitrary precision
std::vector<Int> parse_coefficients(const std::string& s) {
  std::vector<Int> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (!plain_integer(tok)) throw DomainError("bad coefficient '" + tok + "'");
    out.emplace_back(tok);
  }
  if (out.empty()) throw DomainError("empty coefficient list");
  return out;
}

std::string scalar_str(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

void render_csv(const ordered_json& j, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const ordered_json& v = it.value();
    if (!v.is_array()) {
      out << k << ',' << csv_escape(scalar_str(v)) << '\n';
    } else if (v.empty()) {
      // nothing to list; counts appear as their own fields
    } else if (v.front().is_array()) {
      for (size_t i = 0; i < v.size(); ++i) {
        out << k << ',' << i;
        std::string row;
        for (const auto& e : v[i]) {
          if (!row.empty()) row += ' ';
          row += scalar_str(e);
        }
        out << ',' << csv_escape(row) << '\n';
      }
    } else if (v.front().is_object()) {
      for (const auto& e : v) {
        out << k;
        for (const auto& f : e.items()) out << ',' << csv_escape(scalar_str(f.value()));
        out << '\n';
      }
    } else if (v.front().is_string()) {
      for (const auto& e : v) out << k << ',' << csv_escape(e.get<std::string>()) << '\n';
    } else {
      std::string row;
      for (const auto& e : v) {
        if (!row.empty()) row += ' ';
        row += scalar_str(e);
      }
      out << k << ',' << row << '\n';
    }
  }
}

void render_pretty(const ordered_json& j, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const ordered_json& v = it.value();
    if (!v.is_array()) {
      out << k << ": " << scalar_str(v) << '\n';
    } else if (v.empty()) {
      out << k << ":\n";
    } else if (v.front().is_array()) {
      size_t width = 1;
      for (const auto& row : v)
        for (const auto& e : row) width = std::max(width, scalar_str(e).size());
      out << k << ":\n";
      for (const auto& row : v) {
        out << ' ';
        for (const auto& e : row) {
          std::string s = scalar_str(e);
          out << ' ' << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
      }
    } else if (v.front().is_object()) {
      out << k << ":\n";
      for (const auto& e : v) {
        out << " ";
        for (const auto& f : e.items()) out << ' ' << f.key() << '=' << scalar_str(f.value());
        out << '\n';
      }
    } else if (v.front().is_string()) {
      // short clean tokens inline, anything messy gets its own line
      bool inline_ok = true;
      for (const auto& e : v) {
        const std::string s = e.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) inline_ok = false;
      }
      if (inline_ok) {
        out << k << ": ";
        bool first = true;
        for (const auto& e : v) {
          if (!first) out << ", ";
          first = false;
          out << e.get<std::string>();
        }
        out << '\n';
      } else {
        out << k << ":\n";
        for (const auto& e : v) out << "  " << e.get<std::string>() << '\n';
      }
    } else {
      out << k << ':';
      for (const auto& e : v) out << ' ' << scalar_str(e);
      out << '\n';
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::string format = "json";
  std::string tol_str = "1/1000000000";

  CLI::App app{"exact Frobenius-Perron invariants of quivers, Hom/Ext tables and stable tubes",
               "fp"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
  };
  auto add_tol = [&](CLI::App* s) {
    s->add_option("--tol", tol_str, "enclosure tolerance, rational or decimal")
        ->capture_default_str();
  };

  std::string spec_file;
  auto* c_spec = app.add_subcommand("spec", "certified spectral radius of a matrix file");
  c_spec->add_option("file", spec_file, "matrix file, one row per line, inf allowed")->required();
  add_format(c_spec);
  add_tol(c_spec);

  std::string fpq_file;
  auto* c_fpq = app.add_subcommand("fpq", "Frobenius-Perron dimension of a quiver");
  c_fpq->add_option("file", fpq_file, "quiver file")->required();
  add_format(c_fpq);
  add_tol(c_fpq);

  auto* c_fincat = app.add_subcommand("fincat", "invariants of a Hom/Ext data table");
  c_fincat->require_subcommand(1);
  std::string fincat_file;
  int fincat_size = -1;
  auto* c_fd = c_fincat->add_subcommand("fpdim", "certified sup of radii over brick sets");
  c_fd->add_option("file", fincat_file, "category data file")->required();
  c_fd->add_option("--size", fincat_size, "only brick sets of exactly this many objects");
  add_format(c_fd);
  add_tol(c_fd);

  int fincat_max_size = -1;
  auto* c_fb = c_fincat->add_subcommand("bricks", "list brick sets in lexicographic order");
  c_fb->add_option("file", fincat_file, "category data file")->required();
  c_fb->add_option("--max-size", fincat_max_size, "largest set size to enumerate");
  add_format(c_fb);

  auto* c_fg = c_fincat->add_subcommand("fpg", "tail-window growth and curvature estimates");
  c_fg->add_option("file", fincat_file, "category data file")->required();
  add_format(c_fg);
  add_tol(c_fg);

  std::string fincat_set;
  int fincat_power = 1;
  auto* c_fr =
      c_fincat->add_subcommand("ratio", "radius of a power table against the hom radius");
  c_fr->add_option("file", fincat_file, "category data file")->required();
  c_fr->add_option("--set", fincat_set, "comma-separated object indices")->required();
  c_fr->add_option("--power", fincat_power, "sigma power of the numerator table");
  add_format(c_fr);
  add_tol(c_fr);

  std::string fincat_blocks;
  auto* c_fc = c_fincat->add_subcommand("decomp", "check an ordered brick-block decomposition");
  c_fc->add_option("file", fincat_file, "category data file")->required();
  c_fc->add_option("--blocks", fincat_blocks, "semicolon-separated blocks, e.g. 0,1;2")
      ->required();
  add_format(c_fc);

  auto* c_tube = app.add_subcommand("tube", "standard stable tube models");
  c_tube->require_subcommand(1);
  int tube_r = 1;
  auto* c_tg = c_tube->add_subcommand("gen", "emit the hom/ext tables and shift companions");
  c_tg->add_option("-r,--rank", tube_r, "tube rank")->required();
  add_format(c_tg);
  bool tube_serial = false;
  auto* c_tv = c_tube->add_subcommand("verify", "certify every brick-set adjacency of the tube");
  c_tv->add_option("-r,--rank", tube_r, "tube rank")->required();
  c_tv->add_flag("--serial", tube_serial, "single-thread enumeration path");
  add_format(c_tv);
  add_tol(c_tv);

  auto* c_cy = app.add_subcommand("cy", "Calabi-Yau style invariants");
  c_cy->require_subcommand(1);
  long cy_a = 0, cy_b = 1, cy_w = 1;
  bool cy_no_atomic = false;
  auto* c_cf = c_cy->add_subcommand("fpcy", "fractional Calabi-Yau dimension");
  c_cf->add_option("--a", cy_a, "shift exponent")->required();
  c_cf->add_option("--b", cy_b, "Serre power, positive")->required();
  c_cf->add_option("--w", cy_w, "spectrum lattice multiplier, positive");
  c_cf->add_flag("--no-atomic", cy_no_atomic, "no atomic object is known");
  add_format(c_cf);

  long cy_d = 2, cy_ell = 0;
  std::string cy_gk = "1";
  auto* c_ck = c_cy->add_subcommand("kodaira", "Kodaira-type growth pair of a Gorenstein model");
  c_ck->add_option("--d", cy_d, "injective dimension, at least 2")->required();
  c_ck->add_option("--ell", cy_ell, "Gorenstein parameter")->required();
  c_ck->add_option("--gk", cy_gk, "graded dimension, rational, at least 1")->required();
  add_format(c_ck);

  std::string cy_num, cy_den;
  int cy_ncheck = 40;
  auto* c_cg = c_cy->add_subcommand("growth", "pole-order growth of a rational Hilbert series");
  c_cg->add_option("--num", cy_num, "numerator coefficients, ascending, space-separated")
      ->required();
  c_cg->add_option("--den", cy_den, "denominator coefficients, ascending")->required();
  c_cg->add_option("--n-check", cy_ncheck, "coefficients inspected by the growth cross-check");
  add_format(c_cg);

  std::string cy_key;
  auto* c_cc = c_cy->add_subcommand("catalog", "fixed invariant values of named model categories");
  c_cc->add_option("key", cy_key, "catalog key, e.g. wpl:domestic or smooth:dim=2")->required();
  add_format(c_cc);

  std::string weights_str;
  auto* c_cw = app.add_subcommand("classify-weights", "domestic/tubular/wild weight type");
  c_cw->add_option("weights", weights_str, "comma-separated weight sequence")->required();
  add_format(c_cw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    const Rat tol = parse_tolerance(tol_str);
    ordered_json j;
    int code = 0;

    if (*c_spec) {
      Mat m = parse_matrix(read_file(spec_file));
      ExtBounds b = extended_spectral_radius(m, tol);
      j["rows"] = m.rows;
      j["infinite"] = b.infinite;
      j["radius_lo"] = to_string(b.bounds.lo);
      j["radius_hi"] = b.infinite ? std::string("inf") : to_string(b.bounds.hi);
    } else if (*c_fpq) {
      quiv::Quiver q = quiv::parse_quiver(read_file(fpq_file));
      Bounds b = quiv::fpdim_quiver(q, tol);
      j["fpdim_lo"] = to_string(b.lo);
      j["fpdim_hi"] = to_string(b.hi);
      j["n_vertices"] = int(q.vertices.size());
      j["n_arrows"] = int(q.arrows.size());
    } else if (*c_fd) {
      cat::Data d = cat::Data::from_json(read_file(fincat_file));
      Bounds b = fincat_size < 0 ? cat::fpdim(d, tol) : cat::fpdim_n(d, fincat_size, tol);
      j["objects"] = d.size();
      j["size"] = fincat_size < 0 ? std::string("all") : std::to_string(fincat_size);
      j["fpdim_lo"] = to_string(b.lo);
      j["fpdim_hi"] = to_string(b.hi);
    } else if (*c_fb) {
      cat::Data d = cat::Data::from_json(read_file(fincat_file));
      auto sets = cat::brick_sets(d, fincat_max_size);
      j["objects"] = d.size();
      j["count"] = long(sets.size());
      // without negative sigma powers the atomic filter cannot be told apart
      // from the brick filter on this dataset
      j["atomic_equals_brick_caveat"] = !d.has_negative_powers();
      j["sets"] = sets;
    } else if (*c_fg) {
      cat::Data d = cat::Data::from_json(read_file(fincat_file));
      cat::Growth up = cat::fpg_estimate(d, tol);
      cat::Growth low = cat::lower_fpg_estimate(d, tol);
      cat::Growth val = cat::fpv_estimate(d, tol);
      j["window_lo"] = up.window_lo;
      j["window_hi"] = up.window_hi;
      j["fpg"] = est_str(up);
      j["fpg_at_boundary"] = up.at_boundary;
      j["lower_fpg"] = est_str(low);
      j["lower_fpg_at_boundary"] = low.at_boundary;
      j["fpv"] = est_str(val);
      j["fpv_at_boundary"] = val.at_boundary;
    } else if (*c_fr) {
      cat::Data d = cat::Data::from_json(read_file(fincat_file));
      auto idx = parse_index_list(fincat_set);
      Bounds b = cat::ratio_spectral_radius(d, idx, fincat_power, tol);
      j["set"] = idx;
      j["power"] = fincat_power;
      j["ratio_lo"] = to_string(b.lo);
      j["ratio_hi"] = to_string(b.hi);
    } else if (*c_fc) {
      cat::Data d = cat::Data::from_json(read_file(fincat_file));
      cat::Decomposition dec{parse_blocks(fincat_blocks)};
      bool ok = cat::verify_decomposition(d, dec);
      j["blocks"] = dec.blocks;
      j["ordered"] = ok;
      code = ok ? 0 : 1;
    } else if (*c_tg) {
      if (tube_r < 1) throw DomainError("rank must be positive");
      tube::Model m = tube::Model::build(tube_r);
      std::vector<std::string> names;
      for (int jj = 1; jj <= tube_r; ++jj)
        for (int i = 1; i <= tube_r; ++i)
          names.push_back("E" + std::to_string(i) + "[" + std::to_string(jj) + "]");
      j["r"] = tube_r;
      j["objects"] = names;
      j["hom"] = matrix_json(m.hom);
      j["ext"] = matrix_json(m.ext);
      j["f"] = matrix_json(m.f);
      j["g"] = matrix_json(m.g);
    } else if (*c_tv) {
      if (tube_r < 1) throw DomainError("rank must be positive");
      tube::Report rep =
          tube::verify(tube_r, tol, tube_serial ? cat::Mode::serial : cat::Mode::parallel);
      j["r"] = tube_r;
      j["passed"] = rep.passed;
      j["brick_set_count"] = rep.brick_sets;
      j["max_rho"] = {to_string(rep.max_rho.lo), to_string(rep.max_rho.hi)};
      j["failures"] = rep.failures;
      code = rep.passed ? 0 : 1;
    } else if (*c_cf) {
      cy::FracCY model{cy_a, cy_b, cy_w, !cy_no_atomic};
      j["fpcy"] = to_string(cy::fpcy(model));
    } else if (*c_ck) {
      auto [kappa, kappa_inv] = cy::fp_kodaira(cy_d, cy_ell, parse_rat(cy_gk));
      j["kappa"] = cy::to_string(kappa);
      j["kappa_inv"] = cy::to_string(kappa_inv);
    } else if (*c_cg) {
      cy::Series h{parse_coefficients(cy_num), parse_coefficients(cy_den)};
      cy::PolyGrowth g = cy::hilbert_growth(h, cy_ncheck);
      j["growth"] = g.neg_inf ? std::string("-inf") : std::to_string(g.value);
    } else if (*c_cc) {
      auto entries = cy::catalog_lookup(cy_key);
      j["key"] = cy_key;
      ordered_json arr = ordered_json::array();
      for (const auto& e : entries) {
        ordered_json item;
        item["invariant"] = e.invariant;
        item["value"] = cy::to_string(e.value);
        item["note"] = e.note;
        arr.push_back(std::move(item));
      }
      j["entries"] = std::move(arr);
    } else if (*c_cw) {
      auto cls = quiv::classify_weights(parse_weight_list(weights_str));
      j["class"] = quiv::to_string(cls);
    }

    if (format == "csv")
      render_csv(j, out);
    else if (format == "pretty")
      render_pretty(j, out);
    else
      out << j.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace fp::cli
