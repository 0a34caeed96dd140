#include "sr1kit/scan.hpp"

#include "sr1kit/clean_exchange.hpp"
#include "sr1kit/error.hpp"
#include "sr1kit/json_io.hpp"
#include "sr1kit/parallel.hpp"
#include "sr1kit/sr1.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

namespace sr1kit {

ScanCounts& ScanCounts::operator+=(const ScanCounts& o) {
  total += o.total;
  sr1 += o.sr1;
  units += o.units;
  det_zero += o.det_zero;
  clean += o.clean;
  not_clean += o.not_clean;
  unknown_clean += o.unknown_clean;
  exchange_found += o.exchange_found;
  exchange_not_found += o.exchange_not_found;
  not_clean_le6 += o.not_clean_le6;
  nonneg_total += o.nonneg_total;
  nonneg_sr1 += o.nonneg_sr1;
  nonneg_units += o.nonneg_units;
  nonneg_det_zero += o.nonneg_det_zero;
  nonneg_not_clean += o.nonneg_not_clean;
  nonneg_not_clean_le6 += o.nonneg_not_clean_le6;
  return *this;
}

ScanChunk scan_block(long a11, const ScanOptions& options) {
  if (options.entry_bound < 1) throw precondition_error("scan: entry bound must be >= 1");
  long eb = options.entry_bound;
  ScanChunk chunk;
  chunk.a11 = a11;

  for (long a12 = -eb; a12 <= eb; ++a12)
    for (long a21 = -eb; a21 <= eb; ++a21)
      for (long a22 = -eb; a22 <= eb; ++a22) {
        Mat2 m = Mat2::from_ints(a11, a12, a21, a22);
        bool nonneg = a11 >= 0 && a12 >= 0 && a21 >= 0 && a22 >= 0;
        long maxabs = std::max(std::max(std::abs(a11), std::abs(a12)),
                               std::max(std::abs(a21), std::abs(a22)));
        chunk.counts.total += 1;
        if (nonneg) chunk.counts.nonneg_total += 1;

        Sr1Verdict verdict = is_sr1_integer(m);
        if (!verdict.is_sr1) continue;
        chunk.counts.sr1 += 1;
        bool unit = verdict.reason == Sr1Reason::Unit;
        (unit ? chunk.counts.units : chunk.counts.det_zero) += 1;
        if (nonneg) {
          chunk.counts.nonneg_sr1 += 1;
          (unit ? chunk.counts.nonneg_units : chunk.counts.nonneg_det_zero) += 1;
        }

        ExchangeReport ex = is_exchange_bounded(m, options.exchange_bound);
        if (ex.witness)
          chunk.counts.exchange_found += 1;
        else {
          chunk.counts.exchange_not_found += 1;
          chunk.exchange_not_found.push_back(m.format());
        }

        CleanReport cl = is_clean(m, options.clean_bound);
        switch (cl.verdict) {
          case CleanVerdict::Clean:
            chunk.counts.clean += 1;
            break;
          case CleanVerdict::NotClean:
            chunk.counts.not_clean += 1;
            chunk.not_clean.push_back(m.format());
            if (maxabs <= 6) chunk.counts.not_clean_le6 += 1;
            if (nonneg) {
              chunk.counts.nonneg_not_clean += 1;
              if (maxabs <= 6) chunk.counts.nonneg_not_clean_le6 += 1;
            }
            break;
          case CleanVerdict::Unknown:
            chunk.counts.unknown_clean += 1;
            chunk.unknown_clean.push_back(m.format());
            break;
        }
      }
  return chunk;
}

namespace {

std::vector<long> block_ids(long eb) {
  std::vector<long> ids;
  for (long v = -eb; v <= eb; ++v) ids.push_back(v);
  return ids;
}

ScanSummary aggregate(const ScanOptions& options, const std::vector<ScanChunk>& chunks,
                      double elapsed) {
  ScanSummary out;
  out.options = options;
  out.elapsed_seconds = elapsed;
  for (const auto& chunk : chunks) {
    out.counts += chunk.counts;
    out.not_clean.insert(out.not_clean.end(), chunk.not_clean.begin(), chunk.not_clean.end());
    out.unknown_clean.insert(out.unknown_clean.end(), chunk.unknown_clean.begin(),
                             chunk.unknown_clean.end());
    out.exchange_not_found.insert(out.exchange_not_found.end(), chunk.exchange_not_found.begin(),
                                  chunk.exchange_not_found.end());
  }
  return out;
}

Json chunk_to_json(const ScanChunk& c) {
  Json j;
  j["kind"] = "chunk";
  j["a11"] = c.a11;
  j["total"] = c.counts.total;
  j["sr1"] = c.counts.sr1;
  j["units"] = c.counts.units;
  j["det_zero"] = c.counts.det_zero;
  j["clean"] = c.counts.clean;
  j["not_clean_count"] = c.counts.not_clean;
  j["unknown_clean_count"] = c.counts.unknown_clean;
  j["exchange_found"] = c.counts.exchange_found;
  j["exchange_not_found_count"] = c.counts.exchange_not_found;
  j["not_clean_le6"] = c.counts.not_clean_le6;
  j["nonneg_total"] = c.counts.nonneg_total;
  j["nonneg_sr1"] = c.counts.nonneg_sr1;
  j["nonneg_units"] = c.counts.nonneg_units;
  j["nonneg_det_zero"] = c.counts.nonneg_det_zero;
  j["nonneg_not_clean"] = c.counts.nonneg_not_clean;
  j["nonneg_not_clean_le6"] = c.counts.nonneg_not_clean_le6;
  j["not_clean"] = c.not_clean;
  j["unknown_clean"] = c.unknown_clean;
  j["exchange_not_found"] = c.exchange_not_found;
  return j;
}

ScanChunk chunk_from_json(const Json& j) {
  ScanChunk c;
  c.a11 = j.at("a11").get<long>();
  c.counts.total = j.at("total").get<unsigned long>();
  c.counts.sr1 = j.at("sr1").get<unsigned long>();
  c.counts.units = j.at("units").get<unsigned long>();
  c.counts.det_zero = j.at("det_zero").get<unsigned long>();
  c.counts.clean = j.at("clean").get<unsigned long>();
  c.counts.not_clean = j.at("not_clean_count").get<unsigned long>();
  c.counts.unknown_clean = j.at("unknown_clean_count").get<unsigned long>();
  c.counts.exchange_found = j.at("exchange_found").get<unsigned long>();
  c.counts.exchange_not_found = j.at("exchange_not_found_count").get<unsigned long>();
  c.counts.not_clean_le6 = j.at("not_clean_le6").get<unsigned long>();
  c.counts.nonneg_total = j.at("nonneg_total").get<unsigned long>();
  c.counts.nonneg_sr1 = j.at("nonneg_sr1").get<unsigned long>();
  c.counts.nonneg_units = j.at("nonneg_units").get<unsigned long>();
  c.counts.nonneg_det_zero = j.at("nonneg_det_zero").get<unsigned long>();
  c.counts.nonneg_not_clean = j.at("nonneg_not_clean").get<unsigned long>();
  c.counts.nonneg_not_clean_le6 = j.at("nonneg_not_clean_le6").get<unsigned long>();
  c.not_clean = j.at("not_clean").get<std::vector<std::string>>();
  c.unknown_clean = j.at("unknown_clean").get<std::vector<std::string>>();
  c.exchange_not_found = j.at("exchange_not_found").get<std::vector<std::string>>();
  return c;
}

Json header_json(const ScanOptions& options) {
  Json j;
  j["kind"] = "header";
  j["version"] = 1;
  j["entry_bound"] = options.entry_bound;
  j["clean_bound"] = json_int(options.clean_bound);
  j["exchange_bound"] = json_int(options.exchange_bound);
  return j;
}

}  // namespace

ScanSummary density_scan(const ScanOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::vector<long> ids = block_ids(options.entry_bound);
  std::vector<ScanChunk> chunks(ids.size());
  parallel_for_index(ids.size(), options.jobs,
                     [&](std::size_t i) { chunks[i] = scan_block(ids[i], options); });
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return aggregate(options, chunks, elapsed);
}

ScanSummary run_chunked_scan(const ScanOptions& options, const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  std::vector<long> ids = block_ids(options.entry_bound);
  std::map<long, ScanChunk> done;

  // Resume: keep chunks from a previous run when the header matches.
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::string line;
    bool header_ok = false;
    std::getline(in, line);
    if (!line.empty()) {
      Json header = Json::parse(line, nullptr, false);
      header_ok = !header.is_discarded() && header.value("kind", "") == "header" &&
                  header == header_json(options);
    }
    if (header_ok) {
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || j.value("kind", "") != "chunk") continue;
        ScanChunk c = chunk_from_json(j);
        done.emplace(c.a11, std::move(c));
      }
    }
  }

  std::vector<long> missing;
  for (long id : ids)
    if (!done.count(id)) missing.push_back(id);

  std::vector<ScanChunk> fresh(missing.size());
  parallel_for_index(missing.size(), options.jobs,
                     [&](std::size_t i) { fresh[i] = scan_block(missing[i], options); });
  for (auto& c : fresh) done.emplace(c.a11, std::move(c));

  // Rewrite the whole file in block order so the completed artifact is
  // byte-identical however the run was interrupted.
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("io", "cannot write scan file: " + tmp);
    out << header_json(options).dump() << "\n";
    for (long id : ids) out << chunk_to_json(done.at(id)).dump() << "\n";
  }
  std::filesystem::rename(tmp, path);

  std::vector<ScanChunk> ordered;
  ordered.reserve(ids.size());
  for (long id : ids) ordered.push_back(std::move(done.at(id)));
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return aggregate(options, ordered, elapsed);
}

}  // namespace sr1kit
