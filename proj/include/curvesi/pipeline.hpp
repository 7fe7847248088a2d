#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "curvesi/error.hpp"
#include "curvesi/report_io.hpp"
#include "curvesi/search.hpp"

namespace curvesi {

struct SearchOptions {
  std::size_t length = 1;
  bool quotient_inversion = false;
  RepParams point1 = kFingerprintParams1;
  RepParams point2 = kFingerprintParams2;
  std::size_t workers = 1;
  std::filesystem::path out_dir;  // empty: no files
  bool resume = false;
  bool float_mode = false;
  double tolerance = 1e-9;
  bool all_classes = false;   // also keep classes forced by inversion/reversal
  std::size_t chunk_depth = 3;

  ScanOptions scan_options() const { return {length, quotient_inversion, point1, point2}; }
};

struct SearchSummary {
  std::size_t records = 0;
  std::size_t chunks = 0;
  std::size_t chunks_resumed = 0;
  std::size_t buckets = 0;
  std::size_t classes = 0;         // confirmed classes, forced or not
  std::size_t forced_classes = 0;  // single inversion/reversal orbit
  std::size_t flagged_torus = 0;
  std::size_t flagged_pants = 0;
  std::size_t flagged_both = 0;
  std::vector<EquivalenceClassReport> reports;  // kept classes, canonical order
};

namespace checkpoint {

inline std::string chunk_file_name(std::span<const Letter> prefix) {
  std::string name = "chunk-";
  for (Letter l : prefix) name.push_back(static_cast<char>('0' + static_cast<int>(l)));
  return name + ".ckpt";
}

inline std::string params_str(const RepParams& p) {
  return std::to_string(p.x) + "," + std::to_string(p.v) + "," + std::to_string(p.w);
}

inline std::string header(const ScanOptions& opt, std::span<const Letter> prefix) {
  std::ostringstream h;
  h << "curvesi-checkpoint 1\n"
    << "length " << opt.length << "\n"
    << "quotient_inversion " << (opt.quotient_inversion ? 1 : 0) << "\n"
    << "point1 " << params_str(opt.point1) << "\n"
    << "point2 " << params_str(opt.point2) << "\n"
    << "prefix " << to_string(prefix) << "\n";
  return h.str();
}

inline void write(const std::filesystem::path& path, const ScanOptions& opt, std::span<const Letter> prefix,
                  std::span<const ClassRecord> records) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << header(opt, prefix) << "records " << records.size() << "\n";
    for (const auto& r : records)
      out << r.key.str() << ' ' << r.fingerprint.first.str() << ' ' << r.fingerprint.second.str() << '\n';
    out << "end\n";
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// Records from a complete checkpoint whose header matches, or nullopt.
inline std::optional<std::vector<ClassRecord>> read(const std::filesystem::path& path, const ScanOptions& opt,
                                                    std::span<const Letter> prefix) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const std::string expected = header(opt, prefix);
  std::string got(expected.size(), '\0');
  if (!in.read(got.data(), static_cast<std::streamsize>(got.size())) || got != expected) return std::nullopt;
  std::string tag;
  std::size_t count = 0;
  if (!(in >> tag >> count) || tag != "records") return std::nullopt;
  std::vector<ClassRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string word, f1, f2;
    if (!(in >> word >> f1 >> f2)) return std::nullopt;
    ClassRecord rec;
    rec.key = ClassKey{CyclicWord::parse(word), opt.quotient_inversion};
    rec.length = rec.key.size();
    rec.fingerprint = {Checked128::parse(f1), Checked128::parse(f2)};
    out.push_back(std::move(rec));
  }
  if (!(in >> tag) || tag != "end") return std::nullopt;
  return out;
}

}  // namespace checkpoint

namespace detail {

// Chain clustering of sorted keys with a relative tolerance.
inline std::vector<std::vector<std::size_t>> cluster(std::vector<std::pair<double, std::size_t>> keyed, double tol) {
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const bool joins = i > 0 && std::fabs(keyed[i].first - keyed[i - 1].first) <=
                                    tol * std::max(std::fabs(keyed[i].first), std::fabs(keyed[i - 1].first));
    if (!joins) groups.emplace_back();
    groups.back().push_back(keyed[i].second);
  }
  return groups;
}

// Length if hyperbolic at the point, otherwise a disjoint negative key.
inline double length_key(std::span<const Letter> w, const TracePoint<double>& p) {
  const double tr = std::fabs(real_trace_at(w, p));
  return tr > 2.0 ? length_from_trace(tr) : -1.0 - tr;
}

}  // namespace detail

/// Float-mode bucketing: records whose geodesic lengths agree within the
/// relative tolerance at both real trace points share a bucket.
inline std::vector<std::vector<std::size_t>> length_buckets(std::span<const ClassRecord> records,
                                                            const RepParams& p1, const RepParams& p2, double tol) {
  auto real_point = [](const RepParams& p) {
    const auto pt = matrices_for_params<BigInt>(p).second;
    return TracePoint<double>{pt.x.convert_to<double>(), pt.y.convert_to<double>(), pt.z.convert_to<double>()};
  };
  const TracePoint<double> q1 = real_point(p1), q2 = real_point(p2);
  std::vector<std::pair<double, std::size_t>> first;
  for (std::size_t i = 0; i < records.size(); ++i)
    first.emplace_back(detail::length_key(records[i].key.representative.letters(), q1), i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : detail::cluster(std::move(first), tol)) {
    if (g.size() < 2) continue;
    std::vector<std::pair<double, std::size_t>> second;
    for (std::size_t i : g) second.emplace_back(detail::length_key(records[i].key.representative.letters(), q2), i);
    for (auto& h : detail::cluster(std::move(second), tol))
      if (h.size() >= 2) {
        std::sort(h.begin(), h.end());
        out.push_back(std::move(h));
      }
  }
  return out;
}

/// Independent post-hoc check of a report: members pairwise trace-equivalent
/// via the trace-algebra route.
inline bool verify_report(const EquivalenceClassReport& r) {
  const TracePolynomial first = trace_polynomial_by_algebra(r.members.front().key.representative.letters());
  if (trace_relation(first, r.polynomial) != TraceRelation::equal) return false;
  return std::all_of(r.members.begin(), r.members.end(), [&](const ClassRecord& m) {
    return trace_relation(first, trace_polynomial_by_algebra(m.key.representative.letters())) !=
           TraceRelation::different;
  });
}

/// Scan, bucket, confirm, annotate. Chunks are lexicographic prefix ranges
/// processed by independent workers; output is sorted canonically, so it is
/// identical for every worker count and chunking.
inline SearchSummary run_search(const SearchOptions& opt, std::ostream* log = nullptr) {
  using Clock = std::chrono::steady_clock;
  auto stamp = [start = Clock::now()] {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << std::chrono::duration<double>(Clock::now() - start).count() << "s";
    return s.str();
  };
  if (opt.length == 0) throw Error(ErrorCode::Precondition, "search length must be positive");
  const ScanOptions sopt = opt.scan_options();
  SearchSummary summary;

  std::filesystem::path ckpt_dir;
  if (!opt.out_dir.empty()) {
    ckpt_dir = opt.out_dir / "checkpoints";
    std::filesystem::create_directories(ckpt_dir);
  }

  // Scan.
  const auto prefixes = reduced_prefixes(std::min(opt.chunk_depth, opt.length));
  summary.chunks = prefixes.size();
  std::vector<std::vector<ClassRecord>> chunk_records(prefixes.size());
  std::vector<char> resumed(prefixes.size(), 0);
  parallel_for(prefixes.size(), opt.workers, [&](std::size_t, std::size_t c) {
    const auto path = ckpt_dir.empty() ? std::filesystem::path() : ckpt_dir / checkpoint::chunk_file_name(prefixes[c]);
    if (opt.resume && !path.empty()) {
      if (auto loaded = checkpoint::read(path, sopt, prefixes[c])) {
        chunk_records[c] = std::move(*loaded);
        resumed[c] = 1;
        return;
      }
    }
    scan(sopt, [&](ClassRecord&& r) { chunk_records[c].push_back(std::move(r)); }, prefixes[c]);
    if (!path.empty()) checkpoint::write(path, sopt, prefixes[c], chunk_records[c]);
  });
  summary.chunks_resumed = static_cast<std::size_t>(std::count(resumed.begin(), resumed.end(), 1));

  std::vector<ClassRecord> records;
  for (auto& cr : chunk_records) {
    records.insert(records.end(), std::make_move_iterator(cr.begin()), std::make_move_iterator(cr.end()));
    std::vector<ClassRecord>().swap(cr);
  }
  summary.records = records.size();
  if (log)
    *log << "[" << stamp() << "] scanned " << summary.records << " primitive classes in " << summary.chunks
         << " chunks (" << summary.chunks_resumed << " resumed)\n";

  // Bucket.
  std::vector<std::vector<ClassRecord>> buckets;
  if (opt.float_mode) {
    for (auto& idx : length_buckets(records, opt.point1, opt.point2, opt.tolerance)) {
      std::vector<ClassRecord> b;
      for (std::size_t i : idx) b.push_back(records[i]);
      buckets.push_back(std::move(b));
    }
    std::vector<ClassRecord>().swap(records);
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for_each_bucket(records, [&](std::span<ClassRecord> b) {
      ranges.emplace_back(static_cast<std::size_t>(b.data() - records.data()), b.size());
    });
    buckets.reserve(ranges.size());
    for (auto [off, len] : ranges)
      buckets.emplace_back(std::make_move_iterator(records.begin() + static_cast<std::ptrdiff_t>(off)),
                           std::make_move_iterator(records.begin() + static_cast<std::ptrdiff_t>(off + len)));
    std::vector<ClassRecord>().swap(records);
  }
  summary.buckets = buckets.size();
  if (log) *log << "[" << stamp() << "] " << summary.buckets << " buckets with at least two members\n";

  // Confirm and annotate.
  struct Slot {
    std::vector<EquivalenceClassReport> kept;
    std::size_t classes = 0, forced = 0, torus = 0, pants = 0, both = 0;
  };
  std::vector<Slot> slots(buckets.size());
  std::vector<FrickeEngine> engines(std::max<std::size_t>(1, opt.workers));
  parallel_for(buckets.size(), opt.workers, [&](std::size_t worker, std::size_t b) {
    Slot& slot = slots[b];
    for (auto& rep : confirm(buckets[b], engines[worker])) {
      rep = annotate_and_flag(std::move(rep));
      ++slot.classes;
      slot.torus += rep.si_differs_torus;
      slot.pants += rep.si_differs_pants;
      slot.both += rep.si_differs_torus && rep.si_differs_pants;
      const bool forced = is_symmetry_forced(rep);
      slot.forced += forced;
      if (!forced || opt.all_classes) slot.kept.push_back(std::move(rep));
    }
    std::vector<ClassRecord>().swap(buckets[b]);
  });
  for (auto& s : slots) {
    summary.classes += s.classes;
    summary.forced_classes += s.forced;
    summary.flagged_torus += s.torus;
    summary.flagged_pants += s.pants;
    summary.flagged_both += s.both;
    for (auto& r : s.kept) summary.reports.push_back(std::move(r));
  }
  std::sort(summary.reports.begin(), summary.reports.end(), report_before);
  if (log)
    *log << "[" << stamp() << "] " << summary.classes << " trace-equivalence classes (" << summary.forced_classes
         << " forced by inversion/reversal); " << summary.reports.size() << " kept\n";

  for (const auto& r : summary.reports)
    if (!is_symmetry_forced(r) && !verify_report(r))
      throw Error(ErrorCode::Internal, "post-hoc verification failed for class of " + r.members.front().key.str());

  if (!opt.out_dir.empty()) {
    std::ofstream json(opt.out_dir / "reports.json", std::ios::trunc);
    write_reports_json(json, summary.reports);
    std::ofstream csv(opt.out_dir / "classes.csv", std::ios::trunc);
    write_members_csv(csv, summary.reports);
    if (!json || !csv) throw Error(ErrorCode::IoError, "failed writing reports to " + opt.out_dir.string());
  }
  return summary;
}

}  // namespace curvesi
