#pragma once

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvesi/config.hpp"
#include "curvesi/error.hpp"
#include "curvesi/fricke.hpp"
#include "curvesi/intersect.hpp"
#include "curvesi/pipeline.hpp"
#include "curvesi/reps.hpp"
#include "curvesi/search.hpp"
#include "curvesi/words.hpp"
#include "json.hpp"

namespace curvesi::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Shortest round-trip decimal, independent of the C locale.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

inline std::string relation_str(TraceRelation r) {
  switch (r) {
    case TraceRelation::equal: return "equal";
    case TraceRelation::negated: return "negated";
    case TraceRelation::different: return "different";
  }
  return "different";
}

/// One word per line; blank lines and '#' comments are skipped.
inline std::vector<std::string> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::string w = trim(line); !w.empty()) words.push_back(std::move(w));
  }
  return words;
}

inline CyclicWord nonempty_word(const std::string& text) {
  CyclicWord w = cyclic_word_from_text(text);
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "'" + text + "' reduces to the identity");
  return w;
}

/// Entry point behind the `curvesi` executable. `args` excludes the program
/// name. Returns 0 on success, 1 on usage errors, 2 on domain errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-intersection and trace-equivalence tools for curves on the torus and pants", "curvesi"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");

  std::string word, word2, surface_text, traces_text, family_path, out_text;
  std::vector<std::string> points;
  bool quotient = false, linked_pairs = false, resume = false, float_mode = false, all_classes = false,
       as_json = false;
  std::size_t length = 0, workers = 0;
  double tolerance = 0;  // 0: keep the configured value

  auto* canon = app.add_subcommand("canon", "canonical representative of a conjugacy class");
  canon->add_option("word", word)->required();
  canon->add_flag("--quotient-inverse", quotient, "identify a class with its inverse");

  auto* inv = app.add_subcommand("invert", "inverse cyclic word");
  inv->add_option("word", word)->required();

  auto* prim = app.add_subcommand("primitive", "whether a class is not a proper power");
  prim->add_option("word", word)->required();

  auto* si = app.add_subcommand("si", "minimal self-intersection number");
  si->add_option("word", word)->required();
  si->add_option("--surface", surface_text, "torus or pants")->check(CLI::IsMember({"torus", "pants"}));
  si->add_flag("--linked-pairs", linked_pairs, "raw count of linked strand pairs instead");

  auto* fricke = app.add_subcommand("fricke", "trace polynomial in x = tr a, y = tr b, z = tr ab");
  fricke->add_option("word", word)->required();

  auto* equiv = app.add_subcommand("equiv", "trace equivalence of two words");
  equiv->add_option("word1", word)->required();
  equiv->add_option("word2", word2)->required();

  auto* len = app.add_subcommand("length", "geodesic length at a real trace point");
  len->add_option("word", word)->required();
  len->add_option("--traces", traces_text, "x,y,z")->required();

  auto* fp = app.add_subcommand("fingerprint", "squared traces at two integer trace points");
  fp->add_option("word", word)->required();
  fp->add_option("--point", points, "x,v,w matrix parameters; give twice")->expected(0, 2);

  auto* search = app.add_subcommand("search", "exhaustive search for trace-equivalent classes");
  search->add_option("--length", length, "word length")->required()->check(CLI::PositiveNumber);
  search->add_flag("--quotient-inverse", quotient, "identify each class with its inverse");
  search->add_option("--out", out_text, "output directory");
  search->add_flag("--resume", resume, "reuse complete checkpoints in the output directory");
  search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--float-mode", float_mode, "bucket by geodesic length within a tolerance");
  search->add_option("--tolerance", tolerance, "relative length tolerance in float mode");
  search->add_flag("--all-classes", all_classes, "also report classes forced by inversion and reversal");
  search->add_option("--point", points, "x,v,w matrix parameters; give twice")->expected(0, 2);

  auto* family = app.add_subcommand("verify-family", "check a family of words, one per line");
  family->add_option("file", family_path)->required();
  family->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const CLI::App* cmd = app.get_subcommands().front();
  try {
    Config cfg = default_config();
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!surface_text.empty()) cfg.surface = parse_surface(surface_text);
    if (quotient) cfg.quotient_inversion = true;
    if (!points.empty()) {
      if (points.size() != 2) {
        err << "usage error: --point must be given exactly twice\n";
        return kUsage;
      }
      cfg.point1 = parse_rep_params(points[0]);
      cfg.point2 = parse_rep_params(points[1]);
    }
    if (!out_text.empty()) cfg.out_dir = out_text;
    if (workers) cfg.workers = workers;
    if (tolerance != 0) cfg.tolerance = tolerance;
    cfg.validate();

    if (cmd == canon) {
      out << canonical(cyclic_word_from_text(word), cfg.quotient_inversion).str() << "\n";
    } else if (cmd == inv) {
      out << invert(cyclic_word_from_text(word)).str() << "\n";
    } else if (cmd == prim) {
      out << bool_str(is_primitive(cyclic_word_from_text(word))) << "\n";
    } else if (cmd == si) {
      const CyclicWord w = nonempty_word(word);
      const RibbonOrder& o = ribbon_order(cfg.surface);
      out << (linked_pairs ? linked_pair_count(w, o) : self_intersection(w, o)) << "\n";
    } else if (cmd == fricke) {
      out << trace_polynomial(parse_letters(word)).str() << "\n";
    } else if (cmd == equiv) {
      const TraceRelation r = trace_relation(trace_polynomial(parse_letters(word)), trace_polynomial(parse_letters(word2)));
      out << (r == TraceRelation::different ? "false" : "true " + relation_str(r)) << "\n";
    } else if (cmd == len) {
      const auto t = parse_number_list<double>(traces_text, 3);
      out << format_double(geodesic_length(parse_letters(word), TracePoint<double>{t[0], t[1], t[2]})) << "\n";
    } else if (cmd == fp) {
      const Fingerprint f = Fingerprinter(cfg.point1, cfg.point2)(parse_letters(word));
      out << f.first.str() << " " << f.second.str() << "\n";
    } else if (cmd == search) {
      SearchOptions opt;
      opt.length = length;
      opt.quotient_inversion = cfg.quotient_inversion;
      opt.point1 = cfg.point1;
      opt.point2 = cfg.point2;
      opt.workers = cfg.workers;
      opt.out_dir = cfg.out_dir;
      opt.resume = resume;
      opt.float_mode = float_mode;
      opt.tolerance = cfg.tolerance;
      opt.all_classes = all_classes;
      const SearchSummary s = run_search(opt, &err);
      std::size_t kept_torus = 0, kept_pants = 0;
      for (const auto& r : s.reports) {
        kept_torus += r.si_differs_torus;
        kept_pants += r.si_differs_pants;
      }
      out << "length " << length << (cfg.quotient_inversion ? " (classes up to inversion)" : "") << "\n"
          << "primitive classes: " << s.records << "\n"
          << "fingerprint buckets: " << s.buckets << "\n"
          << "trace-equivalence classes: " << s.classes << " (" << s.forced_classes
          << " forced by inversion/reversal)\n"
          << "si differs on torus: " << s.flagged_torus << ", on pants: " << s.flagged_pants
          << ", on both: " << s.flagged_both << "\n"
          << "reported classes: " << s.reports.size() << " (si differs on torus: " << kept_torus
          << ", on pants: " << kept_pants << ")\n"
          << "reports: " << (cfg.out_dir / "reports.json").string() << "\n";
    } else if (cmd == family) {
      const auto words = read_word_file(family_path);
      const FamilyReport rep = verify_family(words);
      if (as_json) {
        nlohmann::json j;
        j["all_trace_equivalent"] = rep.all_trace_equivalent;
        j["si_uniform_torus"] = rep.si_uniform_torus;
        j["si_uniform_pants"] = rep.si_uniform_pants;
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rep.rows)
          j["rows"].push_back({{"word", row.word},
                               {"reduced", row.reduced.str()},
                               {"si_torus", row.si_torus},
                               {"si_pants", row.si_pants},
                               {"relation_to_first", relation_str(row.relation_to_first)}});
        out << j.dump() << "\n";
      } else {
        out << "word\tsi_torus\tsi_pants\trelation_to_first\n";
        for (const auto& row : rep.rows)
          out << row.word << "\t" << row.si_torus << "\t" << row.si_pants << "\t"
              << relation_str(row.relation_to_first) << "\n";
        out << "all_trace_equivalent " << bool_str(rep.all_trace_equivalent) << "\n"
            << "si_uniform_torus " << bool_str(rep.si_uniform_torus) << "\n"
            << "si_uniform_pants " << bool_str(rep.si_uniform_pants) << "\n";
      }
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_name(ErrorCode::IoError) << ": " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace curvesi::cli
