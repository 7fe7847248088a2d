#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "curvesi/error.hpp"
#include "curvesi/fricke.hpp"
#include "curvesi/intersect.hpp"
#include "curvesi/reps.hpp"
#include "curvesi/words.hpp"

namespace curvesi {

struct ClassRecord {
  ClassKey key;
  std::size_t length = 0;
  Fingerprint fingerprint;
  std::optional<std::size_t> si_torus;
  std::optional<std::size_t> si_pants;

  std::optional<std::size_t>& si(Surface s) { return s == Surface::torus ? si_torus : si_pants; }
  const std::optional<std::size_t>& si(Surface s) const { return s == Surface::torus ? si_torus : si_pants; }
};

struct EquivalenceClassReport {
  std::vector<ClassRecord> members;  // sorted by key
  TracePolynomial polynomial;        // of the first member
  bool sign_split = false;
  bool si_differs_torus = false;
  bool si_differs_pants = false;

  bool si_differs(Surface s) const { return s == Surface::torus ? si_differs_torus : si_differs_pants; }
};

struct ScanOptions {
  std::size_t length = 1;
  bool quotient_inversion = false;
  RepParams point1 = kFingerprintParams1;
  RepParams point2 = kFingerprintParams2;
};

/// One record per primitive class of the given length, in lexicographic order
/// of canonical representatives, optionally restricted to a prefix range.
inline void scan(const ScanOptions& opt, const std::function<void(ClassRecord&&)>& emit,
                 std::span<const Letter> prefix = {}) {
  const Fingerprinter fp(opt.point1, opt.point2);
  enumerate_classes(
      opt.length, opt.quotient_inversion,
      [&](const ClassKey& key) {
        if (!is_primitive(key.representative)) return;
        ClassRecord rec;
        rec.key = key;
        rec.length = key.size();
        rec.fingerprint = fp(key.representative.letters());
        emit(std::move(rec));
      },
      prefix);
}

inline std::vector<ClassRecord> scan_all(const ScanOptions& opt) {
  std::vector<ClassRecord> out;
  scan(opt, [&](ClassRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

using Buckets = std::map<Fingerprint, std::vector<ClassRecord>>;

/// Exact grouping by fingerprint; singleton buckets are dropped.
inline Buckets bucketize(std::vector<ClassRecord> records) {
  Buckets all;
  for (auto& r : records) all[r.fingerprint].push_back(std::move(r));
  std::erase_if(all, [](const auto& kv) { return kv.second.size() < 2; });
  return all;
}

/// Same grouping as `bucketize`, over records sorted in place by
/// (fingerprint, key); calls `visit` with each bucket of size >= 2 in
/// fingerprint order.
inline void for_each_bucket(std::vector<ClassRecord>& records,
                            const std::function<void(std::span<ClassRecord>)>& visit) {
  std::sort(records.begin(), records.end(), [](const ClassRecord& l, const ClassRecord& r) {
    if (l.fingerprint != r.fingerprint) return l.fingerprint < r.fingerprint;
    return l.key < r.key;
  });
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t j = i + 1;
    while (j < records.size() && records[j].fingerprint == records[i].fingerprint) ++j;
    if (j - i >= 2) visit(std::span<ClassRecord>(records.data() + i, j - i));
    i = j;
  }
}

/// Partitions a bucket by exact trace polynomial up to global sign; one report
/// per part with at least two members.
inline std::vector<EquivalenceClassReport> confirm(std::span<const ClassRecord> bucket, FrickeEngine& engine) {
  if (bucket.size() < 2) throw Error(ErrorCode::Precondition, "confirm needs a bucket of at least two records");

  struct Part {
    TracePolynomial poly;
    std::vector<ClassRecord> members;
    bool sign_split = false;
  };
  std::vector<Part> parts;
  for (const auto& rec : bucket) {
    TracePolynomial p = engine.trace(rec.key.representative);
    bool placed = false;
    for (auto& part : parts) {
      const TraceRelation rel = trace_relation(part.poly, p);
      if (rel == TraceRelation::different) continue;
      part.members.push_back(rec);
      part.sign_split |= rel == TraceRelation::negated;
      placed = true;
      break;
    }
    if (!placed) parts.push_back(Part{std::move(p), {rec}, false});
  }

  std::vector<EquivalenceClassReport> out;
  for (auto& part : parts) {
    if (part.members.size() < 2) continue;
    std::sort(part.members.begin(), part.members.end(),
              [](const ClassRecord& l, const ClassRecord& r) { return l.key < r.key; });
    EquivalenceClassReport rep;
    rep.polynomial = engine.trace(part.members.front().key.representative);
    rep.members = std::move(part.members);
    rep.sign_split = part.sign_split;
    out.push_back(std::move(rep));
  }
  return out;
}

inline EquivalenceClassReport annotate_and_flag(EquivalenceClassReport report) {
  if (report.members.size() < 2)
    throw Error(ErrorCode::Precondition, "annotate_and_flag needs a confirmed class of at least two members");
  for (auto& m : report.members)
    for (Surface s : kSurfaces)
      if (!m.si(s)) m.si(s) = self_intersection(m.key.representative, s);
  auto differs = [&](Surface s) {
    return std::any_of(report.members.begin(), report.members.end(),
                       [&](const ClassRecord& m) { return *m.si(s) != *report.members.front().si(s); });
  };
  report.si_differs_torus = differs(Surface::torus);
  report.si_differs_pants = differs(Surface::pants);
  return report;
}

/// Keys of w, w^-1, reverse(w) and reverse(w)^-1. Traces in SL(2) are
/// invariant under inversion and reversal, so a class inside one such orbit
/// is forced rather than discovered.
inline std::vector<ClassKey> symmetry_orbit(const ClassKey& key) {
  auto s = key.representative.letters();
  Letters rev(s.rbegin(), s.rend());
  Letters swapped(s.begin(), s.end());
  for (Letter& l : swapped) l = inverse(l);
  std::vector<ClassKey> out;
  for (const CyclicWord& w : {key.representative, invert(key.representative), CyclicWord::from_letters(rev),
                              CyclicWord::from_letters(swapped)})
    out.push_back(canonical(w, key.inversion_quotiented));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_symmetry_forced(const EquivalenceClassReport& report) {
  const auto orbit = symmetry_orbit(report.members.front().key);
  return std::all_of(report.members.begin(), report.members.end(), [&](const ClassRecord& m) {
    return std::binary_search(orbit.begin(), orbit.end(), m.key);
  });
}

/// Canonical report order: by length, then first member.
inline bool report_before(const EquivalenceClassReport& l, const EquivalenceClassReport& r) {
  if (l.members.front().length != r.members.front().length)
    return l.members.front().length < r.members.front().length;
  return l.members.front().key < r.members.front().key;
}

struct FamilyRow {
  std::string word;  // as supplied
  CyclicWord reduced;
  std::size_t si_torus = 0;
  std::size_t si_pants = 0;
  TraceRelation relation_to_first = TraceRelation::equal;
};

struct FamilyReport {
  bool all_trace_equivalent = true;
  bool si_uniform_torus = true;
  bool si_uniform_pants = true;
  std::vector<FamilyRow> rows;
};

/// Checks an externally supplied family: pairwise trace equivalence (exact
/// polynomials) and self-intersection uniformity on both surfaces.
inline FamilyReport verify_family(std::span<const std::string> words) {
  if (words.empty()) throw Error(ErrorCode::EmptyFamily, "no words supplied");
  FamilyReport report;
  FrickeEngine engine;
  std::optional<TracePolynomial> first;
  for (const auto& text : words) {
    FamilyRow row;
    row.word = text;
    row.reduced = cyclic_word_from_text(text);
    if (row.reduced.empty()) throw Error(ErrorCode::EmptyWord, "family member '" + text + "' reduces to the identity");
    if (!is_primitive(row.reduced)) throw Error(ErrorCode::NonPrimitive, text);
    row.si_torus = self_intersection(row.reduced, Surface::torus);
    row.si_pants = self_intersection(row.reduced, Surface::pants);
    TracePolynomial p = engine.trace(row.reduced);
    if (!first) first = std::move(p);
    else row.relation_to_first = trace_relation(*first, p);
    report.rows.push_back(std::move(row));
  }
  for (const auto& row : report.rows) {
    report.all_trace_equivalent &= row.relation_to_first != TraceRelation::different;
    report.si_uniform_torus &= row.si_torus == report.rows.front().si_torus;
    report.si_uniform_pants &= row.si_pants == report.rows.front().si_pants;
  }
  return report;
}

/// Runs `task(i)` for i in [0, count) on `workers` threads; the first
/// exception is rethrown after all threads join.
inline void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t, std::size_t)>& task) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&](std::size_t worker) {
    try {
      for (std::size_t i = next++; i < count; i = next++) task(worker, i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace curvesi
