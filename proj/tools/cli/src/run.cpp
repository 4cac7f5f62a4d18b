#include "wlink/cli/run.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "wlink/cli/input.hpp"
#include "wlink/cli/report.hpp"
#include "wlink/errors.hpp"
#include "wlink/scan.hpp"

namespace wlink::cli {

namespace {

struct Flags {
  std::string input_path;
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  std::string format = "json";
  bool expand = false;
  std::int64_t expand_limit = ReportOptions{}.expand_limit;
  bool preset_z16 = false;
  // scan
  std::int64_t index = 1;
  std::int64_t max_weight = 1;
  unsigned jobs = 1;
};

InputDescription load_input(const Flags& f, const std::string& command) {
  if (!f.input_path.empty()) {
    if (!f.weights.empty()) {
      throw Error(ErrorCode::InvalidInput, command,
                  "give either an input file or --weights/--degree, not both");
    }
    return read_input_file(f.input_path);
  }
  if (f.weights.empty()) {
    throw Error(ErrorCode::InvalidInput, command, "no input file and no --weights given");
  }
  InputDescription in;
  in.weights = f.weights;
  in.degree = f.degree;
  return in;
}

InputDescription z16_input() {
  InputDescription in;
  const KltInputs k = z16_preset();
  in.weights = k.weights;
  in.degree = k.degree;
  in.klt = k;
  return in;
}

int emit_report(const InputDescription& in, const Sections& sections, const Flags& f,
                std::ostream& out) {
  ReportOptions opt;
  opt.expand = f.expand;
  opt.expand_limit = f.expand_limit;
  const InvariantReport r = build_report(in, sections, opt);
  out << (f.format == "text" ? render_text(r) : render_json(r));
  return kOk;
}

int run_scan(const Flags& f, std::ostream& out) {
  ScanOptions opt;
  opt.index = f.index;
  opt.max_weight = f.max_weight;
  opt.workers = f.jobs;
  for (const Candidate& c : scan_candidates(opt)) {
    if (f.format == "text") {
      out << "(";
      for (std::size_t i = 0; i < c.weights.size(); ++i) out << (i ? "," : "") << c.weights[i];
      out << "; " << c.degree << ")";
      if (c.invariants) {
        out << " mu=" << to_string(c.invariants->mu) << " b2=" << to_string(c.invariants->betti)
            << " c1^2=" << to_string(c.invariants->c1_sq);
      } else {
        out << " skipped: " << c.skip_reason;
      }
      out << "\n";
    } else {
      out << candidate_to_json(c).dump() << "\n";
    }
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (error_class(code)) {
    case ErrorClass::Validation: return kValidation;
    case ErrorClass::Inadmissible: return kInadmissible;
    case ErrorClass::Internal: return kInternal;
  }
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of weighted homogeneous hypersurface links", "wlink"};
  app.require_subcommand(1);
  Flags f;

  auto add_input = [&f](CLI::App* cmd) {
    cmd->add_option("input", f.input_path, "Input description (JSON)");
    cmd->add_option("--weights", f.weights, "Weights, instead of an input file")->delimiter(',');
    cmd->add_option("--degree", f.degree, "Degree, with --weights");
  };
  auto add_format = [&f](CLI::App* cmd) {
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_expand = [&f](CLI::App* cmd) {
    cmd->add_flag("--expand", f.expand, "Include the dense characteristic polynomial");
    cmd->add_option("--expand-limit", f.expand_limit,
                    "Skip dense expansion above this Milnor number");
  };

  CLI::App* report = app.add_subcommand("report", "All invariants");
  add_input(report);
  add_format(report);
  add_expand(report);
  CLI::App* charpoly = app.add_subcommand("charpoly", "Milnor number, divisor and Delta(t)");
  add_input(charpoly);
  add_format(charpoly);
  add_expand(charpoly);
  CLI::App* orbifold = app.add_subcommand("orbifold", "Orbifold invariants of the quotient");
  add_input(orbifold);
  add_format(orbifold);
  CLI::App* moduli = app.add_subcommand("moduli", "Naive moduli count");
  add_input(moduli);
  add_format(moduli);
  CLI::App* klt = app.add_subcommand("klt-cert", "klt certificate arithmetic");
  add_input(klt);
  add_format(klt);
  klt->add_flag("--preset-z16", f.preset_z16, "Use the built-in degree 16 data");
  CLI::App* scan = app.add_subcommand("scan", "Enumerate candidate weight vectors");
  add_format(scan);
  scan->add_option("--index", f.index, "Index |w| - d")->required();
  scan->add_option("--max-weight", f.max_weight, "Largest weight")->required();
  scan->add_option("--jobs", f.jobs, "Worker threads (0 = hardware)");

  std::vector<const char*> argv{"wlink"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wlink: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (scan->parsed()) return run_scan(f, out);
    if (report->parsed()) {
      return emit_report(load_input(f, "report"), Sections::full_report(), f, out);
    }
    if (charpoly->parsed()) {
      Sections s;
      s.link = true;
      return emit_report(load_input(f, "charpoly"), s, f, out);
    }
    if (orbifold->parsed()) {
      Sections s;
      s.orbifold = true;
      return emit_report(load_input(f, "orbifold"), s, f, out);
    }
    if (moduli->parsed()) {
      Sections s;
      s.moduli = true;
      return emit_report(load_input(f, "moduli"), s, f, out);
    }
    if (klt->parsed()) {
      Sections s;
      s.klt = true;
      InputDescription in;
      if (f.preset_z16) {
        if (!f.input_path.empty() || !f.weights.empty()) {
          throw Error(ErrorCode::InvalidInput, "klt-cert",
                      "--preset-z16 takes no input file or weights");
        }
        in = z16_input();
      } else {
        in = load_input(f, "klt-cert");
      }
      return emit_report(in, s, f, out);
    }
  } catch (const Error& e) {
    err << "wlink: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "wlink: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace wlink::cli
