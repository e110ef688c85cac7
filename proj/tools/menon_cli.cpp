#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "menon/engine.hpp"
#include "menon/errors.hpp"
#include "menon/io.hpp"

namespace {

using namespace menon;

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    stream = &file;
  }
  void line(const std::string& s) { *stream << s << "\n"; }
};

std::vector<long long> parse_s_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        size_t pos = 0;
        long long v = std::stoll(cur, &pos);
        if (pos != cur.size() || v < 0) throw ParseError("bad s value '" + cur + "'");
        out.push_back(v);
        cur.clear();
      }
    } else if (!isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (out.empty()) throw ParseError("empty s list");
  return out;
}

std::vector<DirichletCharacter> select_characters(const RingPtr& ring,
                                                  const io::ChiSelector& sel) {
  switch (sel.kind) {
    case io::ChiSelector::Kind::trivial:
      return {trivial_character(ring)};
    case io::ChiSelector::Kind::all:
      return character_group(ring);
    case io::ChiSelector::Kind::exps:
      return {make_character(ring, sel.exps)};
  }
  return {};
}

std::string format_report(const VerificationReport& rep, bool csv) {
  return csv ? io::report_line_csv(rep) : io::report_line_json(rep);
}

int run_verify(const std::string& field_text, const std::string& modulus_text,
               const std::string& chi_text, const std::string& s_text,
               long long budget, const std::string& format, const std::string& out_path) {
  FieldDesc K = io::parse_field(field_text);
  Ideal modulus = io::parse_ideal(K, modulus_text);
  io::ChiSelector sel = io::parse_chi_selector(chi_text);
  std::vector<long long> s_list = parse_s_list(s_text);
  bool csv = format == "csv";

  OutputSink sink;
  sink.open(out_path);
  if (csv) sink.line(io::report_csv_header());

  RingPtr ring = make_ring(K, modulus);
  MenonEngine engine(ring, EngineConfig{budget});
  bool all_match = true;
  for (const DirichletCharacter& chi : select_characters(ring, sel))
    for (long long s : s_list) {
      VerificationReport rep = engine.verify_theorem(chi, s);
      sink.line(format_report(rep, csv));
      all_match = all_match && rep.match;
    }
  return all_match ? 0 : 1;
}

int run_scan(const std::string& field_text, long long max_norm,
             const std::string& chi_text, const std::string& s_text, long long budget,
             const std::string& format, const std::string& out_path, int jobs) {
  FieldDesc K = io::parse_field(field_text);
  io::ChiSelector sel = io::parse_chi_selector(chi_text);
  std::vector<long long> s_list = parse_s_list(s_text);
  if (max_norm < 1) throw ParseError("--max-norm must be positive");
  bool csv = format == "csv";

  OutputSink sink;
  sink.open(out_path);
  if (csv) sink.line(io::report_csv_header());

  std::vector<Ideal> moduli = ideals_up_to_norm(K, max_norm, /*include_unit=*/false);
  std::vector<std::vector<std::string>> lines(moduli.size());
  std::atomic<size_t> next{0};
  std::atomic<long long> cases{0};
  std::atomic<long long> mismatches{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= moduli.size()) return;
      try {
        RingPtr ring = make_ring(K, moduli[i]);
        MenonEngine engine(ring, EngineConfig{budget});
        for (const DirichletCharacter& chi : select_characters(ring, sel))
          for (long long s : s_list) {
            VerificationReport rep = engine.verify_theorem(chi, s);
            lines[i].push_back(format_report(rep, csv));
            ++cases;
            if (!rep.match) ++mismatches;
          }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& block : lines)
    for (const std::string& l : block) sink.line(l);
  std::cerr << "scan: " << cases.load() << " cases, " << mismatches.load()
            << " mismatches\n";
  return mismatches.load() == 0 ? 0 : 1;
}

int run_lemmas(const std::string& field_text, long long max_norm,
               const std::string& s_text, long long budget, const std::string& format,
               const std::string& out_path) {
  FieldDesc K = io::parse_field(field_text);
  std::vector<long long> s_list = parse_s_list(s_text);
  if (max_norm < 1) throw ParseError("--max-norm must be positive");
  bool csv = format == "csv";
  EngineConfig cfg{budget};

  OutputSink sink;
  sink.open(out_path);
  if (csv) sink.line(io::lemma_csv_header());

  // prime ideals of norm up to the bound, smallest norms first
  std::vector<Ideal> primes;
  for (long long p = 2; p <= max_norm; ++p) {
    bool is_p = p >= 2;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) is_p = false;
    if (!is_p) continue;
    if (K.is_rational()) {
      primes.push_back(ideal_from_rational(K, p));
    } else {
      for (const Ideal& q : split_prime(K, p).primes)
        if (ideal_norm(q) <= max_norm) primes.push_back(q);
    }
  }
  std::sort(primes.begin(), primes.end(), ideal_less);

  long long cases = 0, bad = 0;
  auto emit = [&](const LemmaCase& cs) {
    sink.line(csv ? io::lemma_line_csv(cs) : io::lemma_line_json(cs));
    ++cases;
    if (!cs.match) ++bad;
  };

  for (const Ideal& P : primes) {
    long long norm_pm = ideal_norm(P);
    for (int m = 1; norm_pm <= max_norm; ++m, norm_pm *= ideal_norm(P)) {
      RingPtr ring = make_ring(K, ideal_pow(P, m));
      std::vector<DirichletCharacter> chars = character_group(ring);
      for (const DirichletCharacter& chi : chars) {
        for (int k = 1; k <= m; ++k)
          emit(verify_lemma(LemmaId::coset_character_sum, chi, k, -1, -1, cfg));
        for (int k = 1; k <= m; ++k)
          emit(verify_lemma(LemmaId::congruent_pair_sum, chi, k, -1, -1, cfg));
        emit(verify_lemma(LemmaId::coprime_pair_sum, chi, -1, -1, -1, cfg));
        for (int r = 0; r <= m; ++r)
          emit(verify_lemma(LemmaId::weighted_pair_sum, chi, -1, r, -1, cfg));
      }
      for (int r = 0; r <= m; ++r)
        for (long long s : s_list)
          emit(verify_lemma(LemmaId::tuple_gcd_count, chars.front(), -1, r, s, cfg));
      for (long long s : s_list)
        for (const LemmaCase& cs : verify_prime_power_cases(K, P, m, s, cfg))
          emit(cs);
    }
  }
  std::cerr << "lemmas: " << cases << " cases, " << bad << " mismatches\n";
  return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of gcd-sum identities over Q and quadratic fields"};
  app.require_subcommand(1);

  std::string field = "Q", modulus, chi = "trivial", s_text = "0";
  std::string format = "jsonl", out_path;
  long long max_norm = 30, budget = EngineConfig{}.work_budget;
  int jobs = 1;

  CLI::App* verify = app.add_subcommand("verify", "verify one modulus");
  verify->add_option("--field", field, "Q or Q(sqrt D)");
  verify->add_option("--modulus", modulus, "integer, hnf:a,b,c or gen:e1;e2;...")
      ->required();
  verify->add_option("--chi", chi, "trivial | all | e1,e2,...");
  verify->add_option("--s", s_text, "comma-separated list of s values");
  verify->add_option("--budget", budget, "work budget in elementary steps");
  verify->add_option("--format", format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  verify->add_option("--out", out_path, "write report lines to a file");

  std::string scan_chi = "all", scan_s = "0,1,2";
  CLI::App* scan = app.add_subcommand("scan", "verify every modulus up to a norm bound");
  scan->add_option("--field", field, "Q or Q(sqrt D)");
  scan->add_option("--max-norm", max_norm, "largest modulus norm to scan");
  scan->add_option("--chi", scan_chi, "trivial | all | e1,e2,...");
  scan->add_option("--s", scan_s, "comma-separated list of s values");
  scan->add_option("--budget", budget, "work budget in elementary steps");
  scan->add_option("--jobs", jobs, "worker threads");
  scan->add_option("--format", format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_option("--out", out_path, "write report lines to a file");

  std::string lemma_s = "0,1,2";
  long long lemma_norm = 125;
  CLI::App* lemmas = app.add_subcommand("lemmas", "check the prime-power building blocks");
  lemmas->add_option("--field", field, "Q or Q(sqrt D)");
  lemmas->add_option("--max-norm", lemma_norm, "largest prime-power norm");
  lemmas->add_option("--s", lemma_s, "comma-separated list of s values");
  lemmas->add_option("--budget", budget, "work budget in elementary steps");
  lemmas->add_option("--format", format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  lemmas->add_option("--out", out_path, "write report lines to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return run_verify(field, modulus, chi, s_text, budget, format, out_path);
    if (scan->parsed())
      return run_scan(field, max_norm, scan_chi, scan_s, budget, format, out_path, jobs);
    return run_lemmas(field, lemma_norm, lemma_s, budget, format, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
