// ffperm: command-line front end for the verification pipelines.
//
// Exit codes: 0 everything checked out, 2 a verification disagreed, 1 usage or input error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffperm/conjectures.hpp"
#include "ffperm/criteria.hpp"
#include "ffperm/errors.hpp"
#include "ffperm/families.hpp"
#include "ffperm/field.hpp"
#include "ffperm/identities.hpp"
#include "ffperm/numtheory.hpp"
#include "ffperm/oracle.hpp"
#include "ffperm/sweep.hpp"

using namespace ffperm;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "json";
  std::string field_poly;
  bool pretty = false;
  bool timing = false;
};

Globals G;

class Output {
 public:
  Output()
  {
    if (!G.out.empty()) {
      file_ = std::make_unique<std::ofstream>(G.out);
      if (!*file_)
        throw UsageError("cannot open " + G.out + " for writing");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::uint64_t parse_u64(const std::string& s, const char* what)
{
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || p != end)
    throw UsageError(std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

Elem parse_elem(const FieldCtx& F, const std::string& s, const char* what)
{
  const std::uint64_t v = parse_u64(s, what);
  if (v >= F.order())
    throw UsageError(std::string(what) + " = " + s + " is not an encoding in a field of order " +
                     std::to_string(F.order()));
  return static_cast<Elem>(v);
}

std::string el(const FieldCtx& F, Elem x)
{
  if (G.pretty && F.order() <= 256)
    return F.to_string(x);
  return std::to_string(x);
}

std::string point_text(const FieldCtx& F, const P1Point& P)
{
  return P.inf ? "inf" : el(F, P.x);
}

std::string hex64(std::uint64_t v)
{
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

// q = p^k with the field F_{q^2} it lives in.
struct QField {
  std::uint64_t q;
  unsigned p, k;
  FieldPtr F;
};

QField q_field(std::uint64_t q)
{
  const auto pk = prime_power(q);
  if (!pk)
    throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return {q, pk->first, pk->second, field(pk->first, 2 * pk->second)};
}

void check_same_char(const QField& qf, std::uint64_t Q)
{
  const auto pk = prime_power(Q);
  if (!pk || pk->first != qf.p)
    throw UsageError("Q = " + std::to_string(Q) + " is not a power of " + std::to_string(qf.p));
}

Json header(const char* command)
{
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string csv_field(const std::string& v)
{
  if (v.find_first_of(",\"\n") == std::string::npos)
    return v;
  std::string esc = "\"";
  for (char ch : v) {
    if (ch == '"')
      esc += '"';
    esc += ch;
  }
  return esc + "\"";
}

// Top-level members as key,value lines; nested values are written as JSON text.
void write_csv_kv(std::ostream& os, const Json& j)
{
  os << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it)
    os << it.key() << ',' << csv_field(it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
}

void emit(const Json& j)
{
  Output out;
  if (G.format == "csv")
    write_csv_kv(out.os(), j);
  else
    out.os() << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::uint64_t q = 2, Q = 2, r = 0;
  std::string a = "0", b = "0", c = "0", d = "0";
};

int cmd_check(const CheckArgs& A)
{
  const QField qf = q_field(A.q);
  check_same_char(qf, A.Q);
  const FieldCtx& F = *qf.F;
  const std::uint64_t r = A.r ? A.r : default_sweep_r(A.q, A.Q);
  const Elem a = parse_elem(F, A.a, "a"), b = parse_elem(F, A.b, "b");
  const Elem c = parse_elem(F, A.c, "c"), d = parse_elem(F, A.d, "d");
  const QuadInput in = make_input(qf.F, A.q, A.Q, r, a, b, c, d);
  const CriterionReport rep = check_main_theorem(in);
  const Poly Apoly = quad_A(in);
  PermVerdict pv;
  if (!Apoly.is_zero())
    pv = is_perm_fq2(F, sparse_from_A(Apoly, r, A.q), A.q);

  Json j = header("check");
  j["q"] = A.q;
  j["Q"] = A.Q;
  j["r"] = r;
  j["a"] = el(F, a);
  j["b"] = el(F, b);
  j["c"] = el(F, c);
  j["d"] = el(F, d);
  Json crit;
  crit["verdict"] = rep.verdict;
  for (int i = 0; i < 5; ++i)
    crit["cond" + std::to_string(i + 1)] = rep.cond[i];
  crit["e"] = el(F, rep.e);
  if (rep.zet) {
    crit["zeta"] = el(F, rep.zet->zeta);
    crit["eta"] = el(F, rep.zet->eta);
    crit["theta"] = el(F, rep.zet->theta);
  }
  j["criterion"] = crit;
  Json orac;
  orac["verdict"] = pv.is_permutation;
  if (pv.witness) {
    Json w = Json::array();
    w.push_back(point_text(F, pv.witness->first));
    w.push_back(point_text(F, pv.witness->second));
    orac["collision"] = w;
  }
  j["oracle"] = orac;
  const bool match = rep.verdict == pv.is_permutation;
  j["match"] = match;
  emit(j);
  return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::uint64_t q = 2, Q = 2, r = 0;
  std::string mode = "exhaustive";
  std::uint64_t n = 1000;
  std::uint64_t budget = 1ull << 28;
  std::uint64_t direct_every = 4099;
  std::string isa = "auto";
};

Json row_json(const FieldCtx& F, const SweepRow& r)
{
  Json j;
  j["a"] = el(F, r.a);
  j["b"] = el(F, r.b);
  j["c"] = el(F, r.c);
  j["d"] = el(F, r.d);
  j["criterion"] = r.criterion;
  j["oracle"] = r.oracle;
  return j;
}

int cmd_sweep(const SweepArgs& A)
{
  const QField qf = q_field(A.q);
  check_same_char(qf, A.Q);
  const FieldCtx& F = *qf.F;
  SweepOptions opt;
  opt.jobs = G.jobs;
  opt.budget = A.budget;
  opt.direct_every = A.direct_every;
  if (A.isa == "scalar")
    opt.isa = kernels::Isa::Scalar;
  else if (A.isa == "avx2")
    opt.isa = kernels::Isa::Avx2;
  if (!kernels::isa_available(opt.isa))
    throw UsageError(std::string("kernel ") + kernels::isa_name(opt.isa) + " is not available on this CPU");
  const std::uint64_t r = A.r ? A.r : default_sweep_r(A.q, A.Q);

  std::unique_ptr<Output> rows_out;
  if (G.format == "csv") {
    rows_out = std::make_unique<Output>();
    auto& os = rows_out->os();
    os << "q,Q,r,a,b,c,d,criterion,oracle,match\n";
    opt.on_row = [&os, &F, &A, r](const SweepRow& row) {
      os << A.q << ',' << A.Q << ',' << r << ',' << el(F, row.a) << ',' << el(F, row.b) << ','
         << el(F, row.c) << ',' << el(F, row.d) << ',' << int(row.criterion) << ',' << int(row.oracle) << ','
         << int(row.criterion == row.oracle) << '\n';
    };
  }

  const SweepReport rep =
      A.mode == "exhaustive" ? sweep_exhaustive(A.q, A.Q, r, opt) : sweep_random(A.q, A.Q, r, A.n, G.seed, opt);
  const bool ok = rep.mismatches == 0 && rep.direct_disagreements == 0;
  if (rows_out) {
    std::cerr << rep.tuples << " tuples, " << rep.mismatches << " mismatches, " << rep.direct_disagreements
              << " direct disagreements, digest " << hex64(rep.digest) << '\n';
    return ok ? kExitOk : kExitMismatch;
  }

  Json j = header("sweep");
  j["q"] = rep.q;
  j["Q"] = rep.Q;
  j["r"] = rep.r;
  j["mode"] = rep.mode;
  if (rep.mode == "random")
    j["seed"] = rep.seed;
  j["tuples"] = rep.tuples;
  j["criterion_positive"] = rep.criterion_positive;
  j["oracle_positive"] = rep.oracle_positive;
  j["mismatches"] = rep.mismatches;
  Json ex = Json::array();
  for (const auto& row : rep.mismatch_examples)
    ex.push_back(row_json(F, row));
  j["mismatch_examples"] = ex;
  j["direct_checked"] = rep.direct_checked;
  j["direct_disagreements"] = rep.direct_disagreements;
  j["digest"] = hex64(rep.digest);
  j["kernel"] = rep.isa;
  if (G.timing)
    j["seconds"] = rep.seconds;
  emit(j);
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct FamiliesArgs {
  std::uint64_t q = 2, Q = 2, r = 0;
  bool cross_check = false;
  bool list = false;
};

Json tuple_json(const FieldCtx& F, PackedTuple t)
{
  Json arr = Json::array();
  for (Elem x : unpack_tuple(t))
    arr.push_back(el(F, x));
  return arr;
}

int cmd_families(const FamiliesArgs& A)
{
  const QField qf = q_field(A.q);
  check_same_char(qf, A.Q);
  const FieldCtx& F = *qf.F;
  const std::uint64_t r = A.r ? A.r : default_sweep_r(A.q, A.Q);
  const FamilyEnumeration fam = enumerate_families(F, A.q, A.Q, r);

  if (G.format == "csv" && !A.cross_check) {
    Output out;
    out.os() << "a,b,c,d\n";
    for (PackedTuple t : fam.tuples) {
      const auto v = unpack_tuple(t);
      out.os() << el(F, v[0]) << ',' << el(F, v[1]) << ',' << el(F, v[2]) << ',' << el(F, v[3]) << '\n';
    }
    return kExitOk;
  }

  Json j = header("families");
  j["q"] = A.q;
  j["Q"] = A.Q;
  j["r"] = r;
  j["generated"] = fam.tuples.size();
  Json cc = Json::object();
  for (const auto& [name, n] : fam.case_counts)
    cc[name] = n;
  j["case_counts"] = cc;
  int code = kExitOk;
  if (A.cross_check) {
    std::vector<PackedTuple> positives;
    SweepOptions opt;
    opt.direct_every = 0;
    opt.on_row = [&](const SweepRow& row) {
      if (row.criterion)
        positives.push_back(pack_tuple(row.a, row.b, row.c, row.d));
    };
    sweep_exhaustive(A.q, A.Q, r, opt);
    std::sort(positives.begin(), positives.end());
    std::vector<PackedTuple> only_gen, only_crit;
    std::set_difference(fam.tuples.begin(), fam.tuples.end(), positives.begin(), positives.end(),
                        std::back_inserter(only_gen));
    std::set_difference(positives.begin(), positives.end(), fam.tuples.begin(), fam.tuples.end(),
                        std::back_inserter(only_crit));
    j["criterion_positive"] = positives.size();
    j["generated_only"] = only_gen.size();
    j["criterion_only"] = only_crit.size();
    const bool equal = only_gen.empty() && only_crit.empty();
    j["equal"] = equal;
    if (!equal)
      code = kExitMismatch;
  }
  if (A.list) {
    Json arr = Json::array();
    for (PackedTuple t : fam.tuples)
      arr.push_back(tuple_json(F, t));
    j["tuples"] = arr;
  }
  emit(j);
  return code;
}

// ---------------------------------------------------------------------------

struct IdentityArgs {
  std::uint64_t q = 2;
  unsigned n = 2;
  std::string which = "all";
};

int cmd_identity(const IdentityArgs& A)
{
  const IdentityInstance I = make_identity_instance(A.q, A.n);
  std::vector<std::string> names;
  if (A.which == "all")
    names = {"bivariate", "univariate", "values", "delta"};
  else if (A.which == "extra")
    names = {"x1", "image-size"};
  else
    names = {A.which};

  Json j = header("identity");
  j["q"] = A.q;
  j["n"] = A.n;
  j["delta_size"] = I.delta.size();
  Json res = Json::object();
  std::size_t passed = 0;
  for (const auto& name : names) {
    bool ok = false;
    if (name == "bivariate")
      ok = verify_thm81(I);
    else if (name == "univariate")
      ok = verify_lemma82(I);
    else if (name == "values")
      ok = verify_cor83(I);
    else if (name == "delta")
      ok = verify_lemma84(I);
    else if (name == "x1")
      ok = verify_x1_specialization(I);
    else if (name == "image-size")
      ok = image_size_check(I).ok();
    res[name] = ok;
    passed += ok;
  }
  j["results"] = res;
  j["passed"] = passed;
  j["total"] = names.size();
  emit(j);
  return passed == names.size() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct CorollaryArgs {
  std::string id = "9.1";
  std::uint64_t q = 2, Q = 2;
  std::string mode = "point";
  std::uint64_t n = 1000;
  unsigned shift = 0;
  std::uint64_t max_points = 1ull << 24;
  std::string a = "0", b = "0", c = "0", d = "0", alpha = "1", beta = "1";
};

Json cor_params_json(const FieldCtx& F, const CorParams& p)
{
  Json j;
  j["id"] = cor_id_name(p.id);
  j["q"] = p.q;
  j["Q"] = p.Q;
  if (p.id == CorId::C95 || p.id == CorId::C95b) {
    j["alpha"] = el(F, p.alpha);
    j["beta"] = el(F, p.beta);
  } else if (p.id == CorId::Remark96) {
    j["lambda"] = el(F, p.a);
  } else {
    j["a"] = el(F, p.a);
    j["b"] = el(F, p.b);
    j["c"] = el(F, p.c);
    j["d"] = el(F, p.d);
  }
  if (p.exponent_shift)
    j["exponent_shift"] = p.exponent_shift;
  return j;
}

int cmd_corollary(const CorollaryArgs& A)
{
  const auto id = parse_cor_id(A.id);
  if (!id)
    throw UsageError("unknown corollary id '" + A.id + "'");
  const QField qf = q_field(A.q);
  check_same_char(qf, A.Q);
  const FieldCtx& F = *qf.F;

  Json j = header("corollary");
  j["id"] = cor_id_name(*id);
  j["q"] = A.q;
  j["Q"] = A.Q;
  j["mode"] = A.mode;
  if (A.shift)
    j["exponent_shift"] = A.shift;

  if (A.mode == "point") {
    CorParams p;
    p.id = *id;
    p.q = A.q;
    p.Q = A.Q;
    p.a = parse_elem(F, A.a, "a");
    p.b = parse_elem(F, A.b, "b");
    p.c = parse_elem(F, A.c, "c");
    p.d = parse_elem(F, A.d, "d");
    p.alpha = parse_elem(F, A.alpha, "alpha");
    p.beta = parse_elem(F, A.beta, "beta");
    p.exponent_shift = A.shift;
    if (!cor_admissible(p))
      throw UsageError("parameters violate the hypotheses of " + std::string(cor_id_name(*id)));
    const CorVerdict v = cor_check(p);
    j["params"] = cor_params_json(F, p);
    j["condition"] = v.condition;
    j["oracle"] = v.oracle;
    j["agree"] = v.agree();
    emit(j);
    return v.agree() ? kExitOk : kExitMismatch;
  }

  if (A.mode == "lambdas") {
    if (*id != CorId::Remark96)
      throw UsageError("mode lambdas applies to remark96 only");
    Json arr = Json::array();
    bool ok = true;
    for (Elem lambda : remark96_lambdas(A.q, A.Q)) {
      const Remark96Poly rp = remark96_family(A.q, A.Q, lambda);
      ok = ok && rp.permutes && rp.trace_nonzero;
      Json m;
      m["lambda"] = el(F, lambda);
      m["a"] = el(F, rp.a);
      m["d"] = el(F, rp.d);
      m["polynomial"] = sparse_to_text(rp.f);
      m["permutes"] = rp.permutes;
      m["trace_nonzero"] = rp.trace_nonzero;
      arr.push_back(m);
    }
    j["members"] = arr;
    j["all_permute"] = ok;
    emit(j);
    return ok ? kExitOk : kExitMismatch;
  }

  CorSweepReport rep;
  if (A.mode == "exhaustive") {
    rep = cor_sweep_exhaustive(*id, A.q, A.Q, A.shift, A.max_points);
  } else {
    rep = cor_sweep_random(*id, A.q, A.Q, A.n, G.seed, A.shift);
    j["seed"] = G.seed;
  }
  j["checked"] = rep.checked;
  j["agreements"] = rep.agreements;
  j["mismatches"] = rep.mismatches.size();
  Json ex = Json::array();
  for (std::size_t i = 0; i < rep.mismatches.size() && i < 16; ++i)
    ex.push_back(cor_params_json(F, rep.mismatches[i]));
  j["mismatch_examples"] = ex;
  emit(j);
  return rep.mismatches.empty() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

int cmd_table3()
{
  const auto entries = table3_entries();
  if (G.format == "csv") {
    Output out;
    bool ok = true;
    out.os() << "q,function,parameter,parameter_value,map,permutes\n";
    for (const auto& e : entries) {
      out.os() << e.q << ',' << csv_field(e.label) << ',' << csv_field(e.parameter) << ','
               << el(*e.ctx, e.parameter_value) << ',' << csv_field(rat_to_text(e.h)) << ',' << int(e.permutes)
               << '\n';
      ok = ok && e.permutes;
    }
    return ok ? kExitOk : kExitMismatch;
  }
  std::set<std::pair<std::uint64_t, std::string>> functions;
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& e : entries) {
    functions.insert({e.q, e.label});
    Json m;
    m["q"] = e.q;
    m["function"] = e.label;
    m["parameter"] = e.parameter;
    m["parameter_value"] = el(*e.ctx, e.parameter_value);
    m["map"] = rat_to_text(e.h);
    m["permutes"] = e.permutes;
    arr.push_back(m);
    passed += e.permutes;
  }
  Json j = header("table3");
  j["functions"] = functions.size();
  j["instances"] = entries.size();
  j["passed"] = passed;
  j["entries"] = arr;
  emit(j);
  return passed == entries.size() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct FieldInfoArgs {
  std::uint64_t order = 4;
  bool elements = false;
};

int cmd_field_info(const FieldInfoArgs& A)
{
  const auto pk = prime_power(A.order);
  if (!pk)
    throw UsageError("order " + std::to_string(A.order) + " is not a prime power");
  const FieldPtr Fp = field(pk->first, pk->second);
  const FieldCtx& F = *Fp;
  Json j = header("field-info");
  j["p"] = F.p();
  j["N"] = F.degree();
  j["order"] = F.order();
  j["defining_polynomial"] = F.spec().irred;
  j["primitive"] = std::to_string(F.primitive());
  j["log_tables"] = F.has_tables();
  if (A.elements) {
    if (F.order() > 256)
      throw UsageError("--elements is limited to fields of order <= 256");
    Json arr = Json::array();
    for (Elem x = 0; x < F.order(); ++x) {
      Json m;
      m["encoding"] = std::to_string(x);
      m["digits"] = F.digits(x);
      m["power"] = F.to_string(x);
      arr.push_back(m);
    }
    j["elements"] = arr;
  }
  emit(j);
  return kExitOk;
}

int exit_code_for(const Error& e)
{
  switch (e.code()) {
    case Errc::Internal:
    case Errc::TableEntryFails:
    case Errc::NonExactDivision:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Permutation quadrinomial criteria: checks, sweeps and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", G.seed, "Seed for randomized sweeps");
  app.add_option("--jobs", G.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", G.out, "Write output to this file instead of stdout");
  app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--field-poly", G.field_poly, "Table of defining polynomials overriding the builtin one")
      ->check(CLI::ExistingFile);
  app.add_flag("--pretty", G.pretty, "Write field elements as powers of the generator (fields <= 256)");
  app.add_flag("--timing", G.timing, "Include wall-clock seconds in sweep reports");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Criterion verdict against the brute-force permutation test");
  check->add_option("--q", ca.q)->required();
  check->add_option("--Q", ca.Q)->required();
  check->add_option("--r", ca.r, "Exponent; 0 picks the default for (q, Q)");
  check->add_option("--a", ca.a)->required();
  check->add_option("--b", ca.b)->required();
  check->add_option("--c", ca.c)->required();
  check->add_option("--d", ca.d)->required();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Criterion against the permutation oracle over many tuples");
  sweep->add_option("--q", sa.q)->required();
  sweep->add_option("--Q", sa.Q)->required();
  sweep->add_option("--r", sa.r, "Exponent; 0 picks the default for (q, Q)");
  sweep->add_option("--mode", sa.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  sweep->add_option("--n", sa.n, "Sample count for random mode");
  sweep->add_option("--budget", sa.budget, "Work budget for exhaustive mode");
  sweep->add_option("--direct-every", sa.direct_every, "Also run the direct test on every n-th tuple (0: never)");
  sweep->add_option("--kernel", sa.isa)->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  FamiliesArgs fa;
  auto* fam = app.add_subcommand("families", "Enumerate the parametrized permutation tuples");
  fam->add_option("--q", fa.q)->required();
  fam->add_option("--Q", fa.Q)->required();
  fam->add_option("--r", fa.r);
  fam->add_flag("--cross-check", fa.cross_check, "Compare with the criterion-positive set");
  fam->add_flag("--list", fa.list, "Include every tuple in the JSON output");

  IdentityArgs ia;
  auto* ident = app.add_subcommand("identity", "Verify the product identities over F_{q^n}");
  ident->add_option("--q", ia.q)->required();
  ident->add_option("--n", ia.n)->required();
  ident->add_option("--which", ia.which)
      ->check(CLI::IsMember({"all", "extra", "bivariate", "univariate", "values", "delta", "x1", "image-size"}));

  CorollaryArgs co;
  auto* cor = app.add_subcommand("corollary", "Closed-form conditions against brute force");
  cor->add_option("--id", co.id, "9.1 ... 9.7, 9.5b, remark96, generalized97")->required();
  cor->add_option("--q", co.q)->required();
  cor->add_option("--Q", co.Q)->required();
  cor->add_option("--mode", co.mode)->check(CLI::IsMember({"point", "exhaustive", "random", "lambdas"}));
  cor->add_option("--n", co.n, "Sample count for random mode");
  cor->add_option("--shift", co.shift, "Use the shift-th alternative exponents");
  cor->add_option("--max-points", co.max_points, "Domain limit for exhaustive mode");
  cor->add_option("--a", co.a, "For remark96 this is lambda");
  cor->add_option("--b", co.b);
  cor->add_option("--c", co.c);
  cor->add_option("--d", co.d);
  cor->add_option("--alpha", co.alpha);
  cor->add_option("--beta", co.beta);

  auto* t3 = app.add_subcommand("table3", "Check every sporadic degree-4 permutation rational function");

  FieldInfoArgs fi;
  auto* finfo = app.add_subcommand("field-info", "Describe the field of a given order");
  finfo->add_option("--order", fi.order)->required();
  finfo->add_flag("--elements", fi.elements, "List every element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  int code = kExitOk;
  try {
    if (!G.field_poly.empty())
      use_field_table(FieldTable::load(G.field_poly));
    if (check->parsed())
      code = cmd_check(ca);
    else if (sweep->parsed())
      code = cmd_sweep(sa);
    else if (fam->parsed())
      code = cmd_families(fa);
    else if (ident->parsed())
      code = cmd_identity(ia);
    else if (cor->parsed())
      code = cmd_corollary(co);
    else if (t3->parsed())
      code = cmd_table3();
    else if (finfo->parsed())
      code = cmd_field_info(fi);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
