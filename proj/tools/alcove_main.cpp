// Command line front end: root-system description, order queries, tuple
// computations, lemma sweeps, Hilbert bases and rank-2 alcove plots.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "alcove/json_io.hpp"
#include "alcove/svg.hpp"
#include "alcove/verify.hpp"

namespace {

using namespace alcove;

Json parse_json_arg(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("malformed JSON argument: " + text);
  return j;
}

struct RelSpec {
  enum Kind { Bruhat, Chamber, Psi, Alpha } kind = Bruhat;
  int index = 0;   // chamber u / psi index / root index
};

RelSpec parse_rel(const RootSystem& rs, const std::string& rel) {
  RelSpec out;
  if (rel == "bruhat") {
    out.kind = RelSpec::Bruhat;
    return out;
  }
  auto colon = rel.find(':');
  std::string head = rel.substr(0, colon == std::string::npos ? rel.size() : colon);
  std::string arg = colon == std::string::npos ? "" : rel.substr(colon + 1);
  if (head == "chamber") {
    out.kind = RelSpec::Chamber;
    out.index = chamber_from_key(rs, arg.empty() ? "e" : arg);
    return out;
  }
  if (head == "psi") {
    out.kind = RelSpec::Psi;
    try {
      out.index = std::stoi(arg);
    } catch (...) {
      throw UsageError("psi relation needs an integer index");
    }
    if (out.index < 0 || out.index >= rs.num_psi()) throw UsageError("psi index out of range");
    return out;
  }
  if (head == "alpha") {
    out.kind = RelSpec::Alpha;
    VecI coords = VecI::Zero(rs.rank());
    std::stringstream ss(arg);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= rs.rank()) throw UsageError("too many root coordinates");
      coords[i++] = std::stoll(tok);
    }
    if (i != rs.rank()) throw UsageError("root needs rank many coordinates");
    out.index = rs.root_index(coords);
    if (out.index < 0) throw UsageError("not a root of this system");
    return out;
  }
  throw UsageError("unknown relation '" + rel + "'");
}

void emit(const Json& j) { std::fputs(json_dump(j).c_str(), stdout); }

int run(int argc, char** argv) {
  CLI::App app{"alcove: affine Weyl group combinatorics, semi-infinite orders and "
               "Schubert tuple verification"};
  app.require_subcommand(1);
  std::string type_label = "A1";

  // root describe
  auto* root_cmd = app.add_subcommand("root", "root system data");
  auto* describe = root_cmd->add_subcommand("describe", "print the root system as JSON");
  describe->add_option("--type", type_label, "Cartan type")->required();

  // order cmp
  auto* order_cmd = app.add_subcommand("order", "order queries");
  auto* cmp = order_cmd->add_subcommand("cmp", "decide w' <= w''");
  std::string rel = "bruhat", lhs_text, rhs_text;
  cmp->add_option("--type", type_label, "Cartan type")->required();
  cmp->add_option("--rel", rel, "bruhat | chamber:<u-word> | psi:<index> | alpha:<coords>");
  cmp->add_option("lhs", lhs_text, "element JSON (lower)")->required();
  cmp->add_option("rhs", rhs_text, "element JSON (upper)")->required();

  // element info
  auto* element_cmd = app.add_subcommand("element", "element utilities");
  auto* info = element_cmd->add_subcommand("info", "canonical form, length, word");
  std::string elem_text;
  int info_psi = -1;
  info->add_option("--type", type_label, "Cartan type")->required();
  info->add_option("--psi", info_psi, "also factor through W~^psi");
  info->add_option("element", elem_text, "element JSON")->required();

  // tuple check/meet/coords
  auto* tuple_cmd = app.add_subcommand("tuple", "chamber tuple operations");
  auto* tcheck = tuple_cmd->add_subcommand("check", "admissibility tests");
  bool flag_admissible = false, flag_quasi = false;
  std::string tuple_text, tuple_text2;
  tcheck->add_option("--type", type_label, "Cartan type")->required();
  tcheck->add_flag("--admissible", flag_admissible, "test admissibility");
  tcheck->add_flag("--quasi", flag_quasi, "test quasi-admissibility");
  tcheck->add_option("tuple", tuple_text, "tuple JSON")->required();
  auto* tmeet = tuple_cmd->add_subcommand("meet", "componentwise minimum of coordinates");
  tmeet->add_option("--type", type_label, "Cartan type")->required();
  tmeet->add_option("a", tuple_text, "coords JSON")->required();
  tmeet->add_option("b", tuple_text2, "coords JSON")->required();
  auto* tcoords = tuple_cmd->add_subcommand("coords", "tuple <-> Z^Psi coordinates");
  tcoords->add_option("--type", type_label, "Cartan type")->required();
  tcoords->add_option("tuple", tuple_text, "tuple or coords JSON")->required();

  // schubert tuple
  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert tuple of an element");
  auto* stuple = schubert_cmd->add_subcommand("tuple", "the unique admissible tuple of w");
  stuple->add_option("--type", type_label, "Cartan type")->required();
  stuple->add_option("element", elem_text, "element JSON")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "lemma verification sweeps");
  int jobs = 1, max_length = 6, samples = 100;
  Int bound = 6, mreg = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  auto* thm = verify_cmd->add_subcommand("thm-sch", "Schubert fixed-point set equality sweep");
  thm->add_option("--type", type_label, "Cartan type")->required();
  thm->add_option("--max-length", max_length, "length window");
  thm->add_option("--jobs", jobs, "worker threads");
  std::string lemma_name;
  auto* lemma = verify_cmd->add_subcommand("lemma", "named lemma sweep");
  lemma->add_option("--name", lemma_name, "lemma name")->required();
  lemma->add_option("--type", type_label, "Cartan type")->required();
  lemma->add_option("--max-length", max_length, "length window");
  lemma->add_option("--bound", bound, "coordinate / degree bound");
  lemma->add_option("--m", mreg, "regularity target");
  lemma->add_option("--samples", samples, "sample count");
  lemma->add_option("--seed", seed, "random seed");
  lemma->add_option("--jobs", jobs, "worker threads");
  auto* list = verify_cmd->add_subcommand("list", "list lemma sweep names");

  // monoid
  auto* monoid_cmd = app.add_subcommand("monoid", "Rees monoid and filtration");
  std::string sublattice_text = "[]";
  auto* hilb = monoid_cmd->add_subcommand("hilbert", "Hilbert basis of R(Lambda')");
  hilb->add_option("--type", type_label, "Cartan type")->required();
  hilb->add_option("--sublattice", sublattice_text, "basis vectors JSON, [] for zero lattice");
  hilb->add_option("--bound", bound, "degree bound");
  auto* trunc = monoid_cmd->add_subcommand("trunc-check", "truncation shadow check");
  std::string coords_text;
  int trunc_psi = 0;
  trunc->add_option("--type", type_label, "Cartan type")->required();
  trunc->add_option("--sublattice", sublattice_text, "basis vectors JSON");
  trunc->add_option("--psi", trunc_psi, "Psi index")->required();
  trunc->add_option("--coords", coords_text, "coords JSON")->required();

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "rank-2 alcove pictures");
  auto* lower = plot_cmd->add_subcommand("lower-set", "shade a lower set");
  std::string out_path, plot_rel = "bruhat";
  Int window = 3;
  lower->add_option("--type", type_label, "Cartan type")->required();
  lower->add_option("--order", plot_rel, "bruhat | chamber:<u-word> | psi:<index>");
  lower->add_option("--window", window, "coordinate window for the viewport");
  lower->add_option("element", elem_text, "element JSON")->required();
  lower->add_option("-o,--output", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  RootSystem rs = RootSystem::build(parse_cartan_type(type_label));
  Orders ord(rs);

  if (describe->parsed()) {
    emit(describe_root_system(rs));
    return 0;
  }

  if (cmp->parsed()) {
    RelSpec spec = parse_rel(rs, rel);
    AffElem a = element_from_json(rs, parse_json_arg(lhs_text));
    AffElem b = element_from_json(rs, parse_json_arg(rhs_text));
    Json out;
    out["schema"] = "alcove.order.v1";
    out["rel"] = rel;
    StepChain chain;
    bool leq = false;
    bool have_chain = false;
    switch (spec.kind) {
      case RelSpec::Bruhat:
        leq = ord.bruhat_leq(a, b);
        break;
      case RelSpec::Chamber:
        leq = ord.leq_subset(a, b, ord.chamber_mask(spec.index), &chain);
        have_chain = true;
        break;
      case RelSpec::Psi:
        leq = ord.leq_psi(a, b, spec.index, &chain);
        have_chain = true;
        break;
      case RelSpec::Alpha:
        leq = ord.leq_subset(a, b, ord.single_mask(spec.index), &chain);
        have_chain = true;
        break;
    }
    out["leq"] = leq;
    if (leq && have_chain) {
      Json jchain = Json::array();
      for (const AffRoot& r : chain) jchain.push_back(affroot_to_json(rs, r));
      out["witness_chain"] = jchain;
    } else {
      out["witness_chain"] = nullptr;
    }
    emit(out);
    return 0;
  }

  if (info->parsed()) {
    AffElem w = element_from_json(rs, parse_json_arg(elem_text));
    Json out;
    out["schema"] = "alcove.element.v1";
    out["canonical"] = element_to_json(rs, w);
    out["length"] = aff_length(rs, w);
    std::vector<int> word = aff_reduced_word(rs, w);
    out["affine_word"] = word;
    Json chambers = Json::array();
    for (int c = 0; c < rs.weyl_order(); ++c)
      if (in_chamber(rs, w, c)) chambers.push_back(chamber_key(rs, c));
    out["in_chambers"] = chambers;
    if (info_psi >= 0) {
      if (info_psi >= rs.num_psi()) throw UsageError("psi index out of range");
      PsiFactorization f = psi_factorize(rs, info_psi, w);
      out["psi_factorization"]["levi"] = element_to_json(rs, f.levi);
      out["psi_factorization"]["min"] = element_to_json(rs, f.min);
    }
    emit(out);
    return 0;
  }

  if (tcheck->parsed()) {
    ChamberTuple t = tuple_from_json(rs, parse_json_arg(tuple_text));
    Json out;
    out["schema"] = "alcove.tuple_check.v1";
    if (!flag_admissible && !flag_quasi) flag_admissible = flag_quasi = true;
    if (flag_quasi) out["quasi_admissible"] = is_quasi_admissible(rs, t);
    if (flag_admissible) out["admissible"] = is_admissible(ord, t);
    emit(out);
    return 0;
  }

  if (tmeet->parsed()) {
    QACoords a = coords_from_json(rs, parse_json_arg(tuple_text));
    QACoords b = coords_from_json(rs, parse_json_arg(tuple_text2));
    Json out;
    out["schema"] = "alcove.meet.v1";
    out["meet"] = coords_to_json(rs, meet(a, b));
    emit(out);
    return 0;
  }

  if (tcoords->parsed()) {
    Json j = parse_json_arg(tuple_text);
    Json out;
    out["schema"] = "alcove.coords.v1";
    if (j.contains("coords")) {
      ChamberTuple t = from_coords(rs, coords_from_json(rs, j));
      out["tuple"] = tuple_to_json(rs, t);
    } else {
      ChamberTuple t = tuple_from_json(rs, j);
      out["coords"] = coords_to_json(rs, to_coords(rs, t));
    }
    emit(out);
    return 0;
  }

  if (stuple->parsed()) {
    SchubertModel model(ord);
    AffElem w = element_from_json(rs, parse_json_arg(elem_text));
    Json out;
    out["schema"] = "alcove.schubert_tuple.v1";
    out["tuple"] = tuple_to_json(rs, model.schubert_tuple(w));
    emit(out);
    return 0;
  }

  if (list->parsed()) {
    Json out;
    out["schema"] = "alcove.lemmas.v1";
    out["lemmas"] = Verifier::names();
    emit(out);
    return 0;
  }

  if (thm->parsed() || lemma->parsed()) {
    Verifier vf(ord);
    VerifyOptions opt;
    opt.max_length = max_length;
    opt.bound = bound;
    opt.m = mreg;
    opt.samples = samples;
    opt.seed = seed;
    opt.jobs = jobs;
    Report rep = vf.run(thm->parsed() ? "thm-sch" : lemma_name, opt);
    Json out;
    out["schema"] = "alcove.report.v1";
    out["lemma"] = rep.lemma;
    out["type"] = to_string(rs.type());
    out["window"] = rep.window;
    out["cases"] = rep.cases;
    out["failures"] = rep.failures;
    emit(out);
    return rep.ok() ? 0 : 1;
  }

  if (hilb->parsed() || trunc->parsed()) {
    Json jb = parse_json_arg(sublattice_text);
    if (!jb.is_array()) throw UsageError("--sublattice must be a JSON array of vectors");
    std::vector<VecI> basis;
    for (const Json& row : jb) {
      if (!row.is_array() || static_cast<int>(row.size()) != rs.rank())
        throw UsageError("sublattice vectors must have rank many coordinates");
      VecI v(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) v[i] = row[static_cast<std::size_t>(i)].get<Int>();
      basis.push_back(v);
    }
    Sublattice sub = make_sublattice(rs, basis);
    if (hilb->parsed()) {
      HilbertBasisResult hb = hilbert_basis(rs, sub, bound);
      Json out;
      out["schema"] = "alcove.hilbert.v1";
      out["bound"] = hb.bound;
      out["stable"] = hb.stable;
      out["generation_verified"] = hb.generation_verified;
      Json jbasis = Json::array();
      for (const ReesElem& e : hb.basis) {
        Json je;
        je["mu"] = std::vector<Int>(e.mu.data(), e.mu.data() + e.mu.size());
        je["degree"] = e.degree;
        jbasis.push_back(je);
      }
      out["basis"] = jbasis;
      emit(out);
      return (hb.generation_verified && hb.stable) ? 0 : 1;
    }
    QACoords x = coords_from_json(rs, parse_json_arg(coords_text));
    TruncCheckResult res = trunc_check(rs, sub, trunc_psi, x);
    Json out;
    out["schema"] = "alcove.trunc.v1";
    out["holds"] = res.holds;
    out["mechanism"] = res.mechanism;
    out["regularity"] = regularity(rs, x);
    emit(out);
    return res.holds ? 0 : 1;
  }

  if (lower->parsed()) {
    if (rs.rank() != 2) throw UsageError("plot lower-set needs a rank-2 type");
    RelSpec spec = parse_rel(rs, plot_rel);
    AffElem w = element_from_json(rs, parse_json_arg(elem_text));
    std::function<bool(const AffElem&)> member;
    AffElemSet interval_set;
    switch (spec.kind) {
      case RelSpec::Bruhat: {
        auto iv = ord.bruhat().lower_interval(w);
        interval_set.insert(iv.begin(), iv.end());
        member = [&](const AffElem& x) { return interval_set.count(x) > 0; };
        break;
      }
      case RelSpec::Chamber:
        member = [&](const AffElem& x) {
          return ord.leq_chamber(x, w, spec.index);
        };
        break;
      case RelSpec::Psi:
        member = [&](const AffElem& x) { return ord.leq_psi(x, w, spec.index); };
        break;
      case RelSpec::Alpha:
        member = [&](const AffElem& x) {
          return ord.leq_subset(x, w, ord.single_mask(spec.index));
        };
        break;
    }
    std::string svg = render_alcove_svg(rs, window, member);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output path " + out_path);
    out << svg;
    return 0;
  }

  throw UsageError("no subcommand executed");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
