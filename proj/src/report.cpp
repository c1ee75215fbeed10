#include "gentle/report.hpp"

#include <sstream>

#include "gentle/generate.hpp"
#include "gentle/oracle.hpp"

namespace gentle {

namespace {

std::string join(const std::vector<long>& xs) {
  std::string out;
  for (long x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Finite: return "Finite";
    case Shape::Right: return "N";
    case Shape::Left: return "-N";
    case Shape::Bi: return "Z";
    case Shape::Periodic: return "Periodic";
  }
  return "?";
}

}  // namespace

std::string report_validate(const Presentation& pres) {
  std::ostringstream out;
  out << "gentle presentation: " << pres.num_vertices() << " vertices, " << pres.num_arrows() << " arrows, "
      << pres.relations().size() << " relations\n";
  auto cycles = primitive_cycles(pres);
  out << "primitive cycles:";
  if (cycles.empty()) out << " none";
  for (const Path& c : cycles) out << " " << render_path(pres, c, PathStyle::Joined);
  out << "\nfinite-dimensional: " << (cycles.empty() ? "yes" : "no") << "\n";
  return out.str();
}

std::string report_signs(const Presentation& pres, const ReportOptions& opts) {
  return render_signs(pres, assign_signs(pres, opts.flip_signs));
}

std::string report_word(const Presentation& pres, const std::string& text, const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  Word w = parse_word(pres, text);
  Classification cl = classify_word(pres, signs, w);
  std::ostringstream out;
  out << "word: " << render_word(pres, w) << "\n";
  out << "shape: " << shape_name(w.shape) << "\n";
  out << "classification: " << classification_name(cl.kind) << "\n";
  if (cl.kind == Classification::Kind::StringWord) {
    out << "shift: " << cl.shift << "\n";
    out << "peaks: " << join(cl.decomposition.peaks) << "\n";
    out << "B: " << render_word(pres, cl.decomposition.B) << "\n";
    out << "A: " << render_word(pres, cl.decomposition.A) << "\n";
    out << "D: " << render_word(pres, cl.decomposition.D) << "\n";
  } else if (cl.kind == Classification::Kind::BandWord) {
    out << "shift: " << cl.shift << "\n";
    out << "period: " << w.period() << "\n";
    out << "band shifts: " << join(cl.band_shifts) << "\n";
  }
  return out.str();
}

std::string report_module(const Presentation& pres, const std::string& text, const std::optional<TModule>& v,
                          const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  Word w = parse_word(pres, text);
  ModulePresentation m;
  if (w.shape == Shape::Periodic) {
    if (!v) fail(ErrorKind::NotAStringWord, "periodic words give band modules and need --matrix");
    m = band_module(pres, signs, w, *v);
  } else {
    m = string_module(pres, signs, w);
  }
  if (!opts.human) return render_module(pres, m);
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : m.generators) out << " " << g.label << "@" << pres.vertex_name(g.vertex);
  out << "\nrelations:\n";
  for (const auto& r : m.relations) out << "  " << render_relation(pres, m, r) << "\n";
  return out.str();
}

std::string report_resolve(const Presentation& pres, const std::string& text, const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  Word w = parse_word(pres, text);
  if (w.shape == Shape::Periodic)
    return "R_C = " + render_genword(pres, resolution_of_band(pres, signs, w), opts.human) + ", degree 0\n";
  StringResolution r = resolution_of_string(pres, signs, w);
  return "R_C = " + render_genword(pres, r.word, opts.human) + ", degree " + std::to_string(r.degree) + "\n";
}

std::string report_complex(const Presentation& pres, const std::string& text, const std::optional<DegreeWindow>& window,
                           const std::optional<TModule>& v, const ReportOptions& opts) {
  (void)opts;
  GenWord g = parse_genword(pres, text);
  if (g.shape == Shape::Periodic) return render_complex(pres, band_complex(pres, g, v ? *v : identity_tmodule(2, 1)));
  return render_complex(pres, string_complex(pres, g, window));
}

std::string report_homword(const Presentation& pres, const std::string& text, const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  GenWord g = parse_genword(pres, text);
  ResolutionVerdict verdict = recognize_resolution(pres, signs, g);
  if (verdict.kind == ResolutionVerdict::Kind::NotAResolution)
    fail(ErrorKind::NotARecognizedResolution, verdict.reason);
  Word h = homology_word(pres, signs, shift(g, verdict.shift));
  return "recognized: " + render_verdict(verdict) + "\nH(C) = " + render_word(pres, h) + "\n";
}

std::string report_kernel(const Presentation& pres, const std::string& text, long degree, const ReportOptions& opts) {
  (void)opts;
  GenWord g = parse_genword(pres, text);
  std::ostringstream out;
  for (const KernelEntry& k : kernel_generators(pres, g, degree))
    out << "kappa(" << k.index << ") = " << render_kernel_entry(pres, k) << "\n";
  return out.str();
}

ModuleSpec parse_module_spec(const Presentation& pres, const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind != "string" && kind != "band") fail(ErrorKind::Parse, "module spec must start with `string` or `band`");
  const auto open = text.find('"');
  const auto close = open == std::string::npos ? open : text.find('"', open + 1);
  if (close == std::string::npos) fail(ErrorKind::Parse, "module spec needs a double-quoted word");
  ModuleSpec spec;
  spec.word = parse_word(pres, text.substr(open + 1, close - open - 1));
  std::istringstream rest(text.substr(close + 1));
  std::string matrix, extra;
  rest >> matrix;
  if (rest >> extra) fail(ErrorKind::Parse, "unexpected '" + extra + "' in module spec");
  if (kind == "string") {
    if (!matrix.empty()) fail(ErrorKind::Parse, "string module specs take no matrix file");
    spec.kind = ModuleSpec::Kind::String;
  } else {
    if (matrix.empty()) fail(ErrorKind::Parse, "band module specs need a matrix file");
    spec.kind = ModuleSpec::Kind::Band;
    spec.v = load_tmodule(matrix);
  }
  return spec;
}

std::string report_iso(const Presentation& pres, const std::string& lhs, const std::string& rhs, const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  ModuleSpec a = parse_module_spec(pres, lhs), b = parse_module_spec(pres, rhs);
  auto w = modules_isomorphic(pres, signs, a, b);
  if (!w) return "not isomorphic\n";
  std::string out = "isomorphic: shift " + std::to_string(w->shift) + (w->inverted ? ", inverted" : "") + "\n";
  if (a.kind == ModuleSpec::Kind::Band) {
    out += "invariant factors:";
    for (const auto& f : w->invariant_factors) out += " (" + render_poly(f) + ")";
    out += "\n";
  }
  return out;
}

VerifyOutcome report_verify(const Presentation& pres, const VerifyOptions& vopts, const ReportOptions& opts) {
  Signs signs = assign_signs(pres, opts.flip_signs);
  ExpandedAlgebra alg = expand_algebra(pres, vopts.prime);
  VerifyOutcome result;
  std::ostringstream out;
  long strings = 0, string_failures = 0;
  for (const Word& w : enumerate_finite_words(pres, vopts.max_len)) {
    ++strings;
    VerificationReport rep = verify_string_resolution(pres, signs, alg, w);
    if (rep.ok()) continue;
    ++string_failures;
    const Check* f = rep.first_failure();
    out << "fail string " << render_word(pres, w) << ": " << f->name << " " << f->detail << "\n";
  }
  out << "strings: " << strings << " checked, " << string_failures << " failed\n";

  std::vector<TModule> pool = similarity_representatives(vopts.prime, vopts.max_rank);
  Rng rng(vopts.seed);
  const int big = vopts.max_rank + 1;
  std::uniform_int_distribution<int> entry(0, vopts.prime - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    fp::Mat m = fp::zeros(static_cast<std::size_t>(big), static_cast<std::size_t>(big));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (fp::inverse(m, vopts.prime)) {
      pool.push_back(make_tmodule(vopts.prime, m));
      break;
    }
  }
  long bands = 0, band_failures = 0;
  for (const Word& w : enumerate_cyclic_words(pres, vopts.max_len)) {
    if (classify_word(pres, signs, w).kind != Classification::Kind::BandWord) continue;
    for (const TModule& v : pool) {
      ++bands;
      VerificationReport rep = verify_band_resolution(pres, signs, alg, w, v);
      if (rep.ok()) continue;
      ++band_failures;
      const Check* f = rep.first_failure();
      out << "fail band " << render_word(pres, w) << " rank " << v.rank << ": " << f->name << " " << f->detail << "\n";
    }
  }
  out << "bands: " << bands << " checked, " << band_failures << " failed\n";
  result.ok = string_failures == 0 && band_failures == 0;
  out << "result: " << (result.ok ? "pass" : "fail") << "\n";
  result.text = out.str();
  return result;
}

}  // namespace gentle
