#include <functional>

#include "wlink/cli/report.hpp"
#include "wlink/errors.hpp"

namespace wlink::cli {

namespace {

// Runs `block`; in lenient mode an inadmissible result becomes a warning.
template <typename Fn>
void guarded(const Sections& sections, const char* name, std::vector<std::string>& warnings,
             Fn&& block) {
  if (sections.strict) {
    block();
    return;
  }
  try {
    block();
  } catch (const Error& e) {
    if (error_class(e.code()) != ErrorClass::Inadmissible) throw;
    warnings.push_back(std::string(name) + " block omitted: " + e.what());
  }
}

LinkClassification classify(std::size_t variables, const BigInt& b, bool torsion_free) {
  const auto n = static_cast<std::int64_t>(variables) - 1;
  if (n == 3) return classify_5d(b, torsion_free);
  LinkClassification c;
  c.dimension = 2 * n - 1;
  c.betti = b;
  c.torsion_free_assumed = torsion_free;
  c.verdict = LinkVerdict::Unknown;
  c.reason = "classification covers 5-dimensional links only";
  return c;
}

}  // namespace

InvariantReport build_report(const InputDescription& input, const Sections& sections,
                             const ReportOptions& options) {
  const WeightVector w = input.weight_vector();
  const std::int64_t d = input.degree;
  if (d <= 0) {
    throw Error(ErrorCode::InvalidInput, "build_report",
                "degree must be positive, got " + std::to_string(d));
  }
  const std::optional<QhPolynomial> f = input.polynomial();
  const bool surface = w.size() == 4;

  InvariantReport r;
  r.weights.assign(w.values().begin(), w.values().end());
  r.degree = d;
  r.index = index_of(w, d);

  if (sections.conditions) {
    ConditionsBlock c;
    const WellFormedness wf = is_well_formed(w);
    c.well_formed = wf.well_formed;
    c.offending = wf.offending;
    if (!wf.well_formed) r.warnings.push_back("P" + w.str() + " is not well-formed");
    if (f && surface) {
      const std::vector<Monomial> support = f->support();
      const QuasiSmoothReport qs = quasi_smooth_conditions(w, d, support);
      c.ii = qs.ii_pass();
      c.iii = qs.iii_pass();
      c.iv = qs.iv_pass();
      c.first_failure = qs.first_failure();
      if (!qs.all_pass()) {
        r.warnings.push_back("support of f fails quasi-smoothness condition " +
                             c.first_failure);
      }
    }
    r.conditions = std::move(c);
  }

  // Betti number of the link is needed by both the link and orbifold blocks.
  std::optional<BigInt> link_betti;
  if (sections.link || sections.orbifold) {
    LinkBlock link;
    link.mu = milnor_number(w, d);
    link.divisor = divisor_of_delta(w, d);
    link.char_poly = factored_char_poly(link.divisor);
    link.betti = betti(link.divisor);
    link.connectivity = connectivity(static_cast<std::int64_t>(w.size()) - 1);
    link.classification = classify(w.size(), link.betti, input.assume_torsion_free);
    if (options.expand) {
      if (link.mu <= options.expand_limit) {
        link.char_poly_dense = expand(link.char_poly);
      } else {
        r.warnings.push_back("dense characteristic polynomial omitted: mu = " +
                             link.mu.get_str() + " exceeds " +
                             std::to_string(options.expand_limit));
      }
    }
    link_betti = link.betti;
    if (sections.link) r.link = std::move(link);
  }

  if (sections.orbifold) {
    if (!surface) {
      if (sections.strict) {
        throw Error(ErrorCode::DimensionUnsupported, "orbifold",
                    "expected 4 weights, got " + std::to_string(w.size()));
      }
      r.warnings.push_back("orbifold block omitted: needs exactly 4 weights");
    } else if (!f) {
      if (sections.strict) {
        throw Error(ErrorCode::InvalidInput, "orbifold", "input has no monomials for f");
      }
      r.warnings.push_back("orbifold block omitted: input has no monomials for f");
    } else {
      guarded(sections, "orbifold", r.warnings, [&] {
        OrbifoldOptions opt;
        opt.surface_betti_offset = static_cast<long>(input.surface_betti_offset);
        r.orbifold = orbifold_report(*f, *link_betti, opt);
        r.warnings.push_back("b2(Z) = b2(L) + " + std::to_string(input.surface_betti_offset) +
                             " assumed (circle V-bundle rule)");
      });
    }
  }

  if (sections.moduli) {
    guarded(sections, "moduli", r.warnings, [&] {
      r.moduli = moduli_dimension(w, d);
      r.warnings.push_back(
          "moduli dimension is the naive count dim S^d - dim G; parameters may be ineffective");
    });
  }

  if (sections.klt) {
    if (!input.klt) {
      if (sections.strict) {
        throw Error(ErrorCode::InvalidInput, "klt-cert", "input has no \"klt\" block");
      }
    } else {
      guarded(sections, "klt", r.warnings, [&] { r.klt = certify(*input.klt); });
    }
    const std::vector<std::int64_t> z16{1, 3, 5, 8};
    if (f && r.weights == z16 && d == 16) {
      guarded(sections, "splitting", r.warnings, [&] {
        try {
          r.splitting = splitting_condition(*f);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::MissingQuadraticPart) throw;
          r.warnings.push_back(std::string("splitting condition not evaluated: ") + e.what());
        }
      });
    }
  }
  return r;
}

}  // namespace wlink::cli
