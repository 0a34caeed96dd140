#include "sr1kit/cli.hpp"

#include "sr1kit/clean_exchange.hpp"
#include "sr1kit/error.hpp"
#include "sr1kit/json_io.hpp"
#include "sr1kit/parallel.hpp"
#include "sr1kit/scan.hpp"
#include "sr1kit/smith.hpp"
#include "sr1kit/sr1.hpp"
#include "sr1kit/unitizer.hpp"
#include "sr1kit/verify.hpp"

#include <ostream>

namespace sr1kit::cli {

namespace {

// "int" -> 0, "zmod:N" -> N (N >= 2).
Int parse_ring(const std::string& ring) {
  if (ring == "int") return 0;
  if (ring.rfind("zmod:", 0) == 0) {
    Int n(ring.substr(5));
    if (n < 2) throw parse_error("--ring zmod:N needs N >= 2");
    return n;
  }
  throw parse_error("--ring must be \"int\" or \"zmod:N\", got \"" + ring + "\"");
}

void emit(const Command& cmd, std::ostream& out, const Json& j) {
  if (cmd.pretty)
    out << j.dump(2) << "\n";
  else
    out << j.dump() << "\n";
}

int run_smith(const Command& cmd, std::ostream& out) {
  Mat2 a = parse_matrix(cmd.matrix);
  SmithForm sf = smith_form(a);
  Json j;
  j["U"] = json_mat2(sf.U);
  j["D"] = Json::array({json_int(sf.d1), json_int(sf.d2)});
  j["V"] = json_mat2(sf.V);
  emit(cmd, out, j);
  return 0;
}

int run_sr1(const Command& cmd, std::ostream& out) {
  Int modulus = parse_ring(cmd.ring);
  Json j;
  if (modulus == 0) {
    Mat2 a = parse_matrix(cmd.matrix);
    Sr1Verdict v = is_sr1_integer(a);
    j["det"] = json_int(v.det);
    j["sr1"] = v.is_sr1;
    j["reason"] = to_string(v.reason);
    emit(cmd, out, j);
    return 0;
  }
  if (modulus > 6) throw precondition_error("sr1 --ring zmod:N supports N <= 6 (exhaustive)");
  Mat2 a = parse_matrix(cmd.matrix, modulus);
  bool l = lsr1_finite(a), r = rsr1_finite(a);
  j["ring"] = "zmod:" + to_string(modulus);
  j["det"] = json_int(a.det().value());
  j["sr1"] = l && r;
  j["lsr1"] = l;
  j["rsr1"] = r;
  j["reason"] = "ExhaustiveFinite";
  emit(cmd, out, j);
  return 0;
}

int run_unitizer(const Command& cmd, std::ostream& out) {
  Mat2 a = parse_matrix(cmd.matrix);
  Mat2 x = cmd.x_literal.empty() ? Mat2::zero() : parse_matrix(cmd.x_literal);
  Json j;
  if (cmd.method == "pipeline") {
    UnitizerCertificate cert = find_unitizer(a, x);
    j["Y"] = json_mat2(cert.y);
    j["unit_value"] = json_int(cert.unit_value);
    j["method"] = "pipeline";
    emit(cmd, out, j);
    return 0;
  }
  if (cmd.method == "search") {
    Int bound = cmd.bound >= 0 ? cmd.bound : 5;
    auto res = search_unitizer_bounded(a, x, bound);
    if (auto* cert = std::get_if<UnitizerCertificate>(&res)) {
      j["Y"] = json_mat2(cert->y);
      j["unit_value"] = json_int(cert->unit_value);
      j["method"] = "search";
      j["bound"] = json_int(bound);
      emit(cmd, out, j);
      return 0;
    }
    j["error"] = "no unitizer found within bound";
    j["kind"] = "not-found-within-bound";
    j["bound"] = json_int(bound);
    emit(cmd, out, j);
    return 2;
  }
  if (cmd.method == "table") {
    if (a != Mat2::from_ints(6, 10, 0, 0))
      throw precondition_error("--method table applies to the matrix 6,10;0,0 only");
    UnitizerCertificate cert = unitizer_diophantine_6_10(x, cmd.alt_table);
    j["Y"] = json_mat2(cert.y);
    j["unit_value"] = json_int(cert.unit_value);
    j["method"] = "table";
    emit(cmd, out, j);
    return 0;
  }
  throw parse_error("--method must be pipeline, search or table");
}

int run_clean(const Command& cmd, std::ostream& out) {
  Mat2 a = parse_matrix(cmd.matrix);
  Int bound = cmd.bound >= 0 ? cmd.bound : 100;
  CleanReport rep = is_clean(a, bound);
  Json j;
  switch (rep.verdict) {
    case CleanVerdict::Clean:
      j["clean"] = true;
      break;
    case CleanVerdict::NotClean:
      j["clean"] = false;
      break;
    case CleanVerdict::Unknown:
      j["clean"] = "unknown";
      break;
  }
  j["E"] = rep.witness ? json_mat2(rep.witness->idempotent) : Json(nullptr);
  j["U"] = rep.witness ? json_mat2(rep.witness->unit) : Json(nullptr);
  j["complete"] = rep.complete;
  if (rep.bound) j["bound"] = json_int(*rep.bound);
  emit(cmd, out, j);
  return rep.verdict == CleanVerdict::Unknown ? 2 : 0;
}

int run_exchange(const Command& cmd, std::ostream& out) {
  Mat2 a = parse_matrix(cmd.matrix);
  Int bound = cmd.bound >= 0 ? cmd.bound : 6;
  ExchangeReport rep = is_exchange_bounded(a, bound);
  Json j;
  if (rep.witness) {
    j["exchange"] = true;
    j["M"] = json_mat2(rep.witness->multiplier);
    j["E"] = json_mat2(rep.witness->idempotent);
    j["bound"] = json_int(bound);
    emit(cmd, out, j);
    return 0;
  }
  j["exchange"] = "unknown";
  j["M"] = nullptr;
  j["E"] = nullptr;
  j["bound"] = json_int(bound);
  emit(cmd, out, j);
  return 2;
}

int run_scan(const Command& cmd, std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.entry_bound = cmd.entry_bound;
  opt.clean_bound = cmd.clean_bound;
  opt.exchange_bound = cmd.exchange_bound;
  opt.jobs = cmd.jobs;
  ScanSummary s =
      cmd.json_path.empty() ? density_scan(opt) : run_chunked_scan(opt, cmd.json_path);

  Json j;
  j["entry_bound"] = opt.entry_bound;
  j["clean_bound"] = json_int(opt.clean_bound);
  j["exchange_bound"] = json_int(opt.exchange_bound);
  j["total"] = s.counts.total;
  Json sr1;
  sr1["with_units"] = s.counts.sr1;
  sr1["units"] = s.counts.units;
  sr1["det_zero"] = s.counts.det_zero;
  sr1["nonneg_with_units"] = s.counts.nonneg_sr1;
  sr1["nonneg_units"] = s.counts.nonneg_units;
  sr1["nonneg_det_zero"] = s.counts.nonneg_det_zero;
  j["sr1"] = sr1;
  Json clean;
  clean["clean"] = s.counts.clean;
  clean["not_clean"] = s.counts.not_clean;
  clean["unknown"] = s.counts.unknown_clean;
  clean["not_clean_entries_le6"] = s.counts.not_clean_le6;
  clean["nonneg_not_clean"] = s.counts.nonneg_not_clean;
  clean["nonneg_not_clean_entries_le6"] = s.counts.nonneg_not_clean_le6;
  j["clean"] = clean;
  Json exchange;
  exchange["found"] = s.counts.exchange_found;
  exchange["not_found"] = s.counts.exchange_not_found;
  j["exchange"] = exchange;
  // Reference tallies the counts are usually compared against.
  j["reference"] = Json{{"sr1", 1988}, {"not_clean", 80}};
  j["not_clean"] = s.not_clean;
  j["unknown_clean"] = s.unknown_clean;
  j["exchange_not_found"] = s.exchange_not_found;
  emit(cmd, out, j);
  if (cmd.pretty) err << "elapsed: " << s.elapsed_seconds << " s\n";
  return 0;
}

int run_verify(const Command& cmd, std::ostream& out) {
  Int modulus = parse_ring(cmd.ring);
  std::vector<SuiteResult> suites;
  if (modulus == 0) {
    suites = verify_int(cmd.exhaustive, cmd.jobs);
  } else {
    if (modulus > 6) throw precondition_error("verify --ring zmod:N supports N <= 6");
    suites = verify_zmod(modulus.convert_to<unsigned>(), cmd.exhaustive, cmd.jobs);
  }
  Json j;
  j["ring"] = modulus == 0 ? "int" : "zmod:" + to_string(modulus);
  j["exhaustive"] = cmd.exhaustive;
  Json arr = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    Json e;
    e["name"] = s.name;
    e["pass"] = s.pass;
    e["checked"] = s.checked;
    if (!s.counterexample.empty()) e["counterexample"] = s.counterexample;
    all = all && s.pass;
    arr.push_back(e);
  }
  j["suites"] = arr;
  j["all_pass"] = all;
  emit(cmd, out, j);
  return all ? 0 : 1;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.kind) {
      case Command::Kind::Smith:
        return run_smith(cmd, out);
      case Command::Kind::Sr1:
        return run_sr1(cmd, out);
      case Command::Kind::Unitizer:
        return run_unitizer(cmd, out);
      case Command::Kind::Clean:
        return run_clean(cmd, out);
      case Command::Kind::Exchange:
        return run_exchange(cmd, out);
      case Command::Kind::Scan:
        return run_scan(cmd, out, err);
      case Command::Kind::Verify:
        return run_verify(cmd, out);
    }
    throw internal_error("unhandled command");
  } catch (const Error& e) {
    Json j;
    j["error"] = e.what();
    j["kind"] = e.kind();
    out << j.dump() << "\n";
    return e.kind() == "determinant-obstruction" ? 0 : 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = e.what();
    j["kind"] = "internal";
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace sr1kit::cli
