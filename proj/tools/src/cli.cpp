#include "free2/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <vector>

#include "free2/automorphism.hpp"
#include "free2/classifier.hpp"
#include "free2/error.hpp"
#include "free2/kpq_family.hpp"
#include "free2/report.hpp"
#include "free2/structure.hpp"
#include "free2/word.hpp"

namespace free2::cli {
namespace {

// Bad arguments that CLI11 itself accepted (ranges, window, env overrides).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t length_cap_from_env() {
  const char* raw = std::getenv("FREE2_LENGTH_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultLengthCap;
  const std::string_view s(raw);
  std::size_t cap = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || end != s.data() + s.size() || cap == 0) {
    throw UsageError("FREE2_LENGTH_CAP must be a positive integer, got '" +
                     std::string(s) + "'");
  }
  return cap;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text,
                                                  std::string_view flag) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  auto bad = [&] {
    return UsageError(std::string(flag) + " expects a:b, got '" + text + "'");
  };
  if (colon == std::string::npos) throw bad();
  auto num = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      throw bad();
    }
    return v;
  };
  const std::int64_t lo = num(std::string_view(text).substr(0, colon));
  const std::int64_t hi = num(std::string_view(text).substr(colon + 1));
  if (lo > hi) throw bad();
  return {lo, hi};
}

int clamp_window(int window, std::ostream& err) {
  if (window < 0) throw UsageError("--window must be non-negative");
  if (window > kMaxWindow) {
    err << "warning: --window " << window << " capped at " << kMaxWindow
        << "; cost grows quickly with the window\n";
    return kMaxWindow;
  }
  return window;
}

ReportFormat format_from(const std::string& name) {
  const auto f = parse_report_format(name);
  if (!f) throw UsageError("--format must be json or csv, got '" + name + "'");
  return *f;
}

void print_word(const Word& w, std::ostream& out) {
  const CyclicReduction cr = cyclic_reduce(w);
  const AbelianImage ab = exponent_sums(w);
  out << "reduced: " << format_word(w) << '\n'
      << "length: " << w.size() << '\n'
      << "cyclic: " << format_cyclic(cr.core) << '\n'
      << "conjugator: " << format_word(cr.conjugator) << '\n'
      << "exponent sums: x " << ab.ex << ", y " << ab.ey << '\n';
}

void print_classification(const Word& w, std::ostream& out) {
  const CyclicWord core = CyclicWord::of(w);
  if (core.empty()) {
    out << "trivial: yes\n";
    return;
  }
  const MultiplicityResult mu = multiplicity(w);
  out << "primitive: " << (is_primitive(core) ? "yes" : "no") << '\n';
  if (mu.exponent >= 2) {
    out << "power: root (" << format_cyclic(mu.root) << "), exponent "
        << mu.exponent << ", root "
        << (mu.root_is_primitive ? "primitive" : "not primitive") << '\n';
  } else {
    out << "power: no\n";
  }
  out << "multiplicity: "
      << (mu.is_proper_power_of_primitive() ? mu.exponent : 1) << '\n'
      << "shape filter: " << (shape_filter(core) ? "pass" : "reject") << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Free group F(x,y) word calculus and K(p,q) classifier",
               "free2"};
  app.require_subcommand(1);

  std::string e1, e2, family_name, format_name = "json", p_range, q_range;
  std::int64_t n = 0, p = 0, q = 0;
  int window = kDefaultWindow;
  unsigned threads = 0;

  auto* word_cmd =
      app.add_subcommand("word", "Reduced and cyclic forms, exponent sums");
  word_cmd->add_option("expr", e1, "Word expression")->required();

  auto* classify_cmd = app.add_subcommand(
      "classify-word", "Primitivity, power and multiplicity verdicts");
  classify_cmd->add_option("expr", e1, "Word expression")->required();

  auto* equiv_cmd = app.add_subcommand(
      "equiv", "Equality up to conjugation and inversion");
  equiv_cmd->add_option("e1", e1)->required();
  equiv_cmd->add_option("e2", e2)->required();

  auto* orbit_cmd = app.add_subcommand(
      "orbit", "Automorphism-orbit equivalence with a witness");
  orbit_cmd->add_option("e1", e1)->required();
  orbit_cmd->add_option("e2", e2)->required();

  auto* kpq_cmd = app.add_subcommand("kpq", "Generate a family word");
  kpq_cmd->add_option("family", family_name,
                      "c0p c0pp c1p c1pp l0 l1 d2 m0 m1 dp")
      ->required();
  kpq_cmd->add_option("--n", n);
  kpq_cmd->add_option("--p", p)->required();
  kpq_cmd->add_option("--q", q)->required();

  auto* point_cmd = app.add_subcommand("point", "Classify one (p,q)");
  point_cmd->add_option("--p", p)->required();
  point_cmd->add_option("--q", q)->required();
  point_cmd->add_option("--window", window);
  point_cmd->add_option("--format", format_name);

  auto* survey_cmd =
      app.add_subcommand("survey", "Classify a rectangular (p,q) grid");
  survey_cmd->add_option("--p-range", p_range, "a:b inclusive")->required();
  survey_cmd->add_option("--q-range", q_range, "c:d inclusive")->required();
  survey_cmd->add_option("--window", window);
  survey_cmd->add_option("--format", format_name);
  survey_cmd->add_option("--threads", threads, "0 = hardware concurrency");

  std::vector<const char*> argv{"free2"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ClassifierOptions opts;
  // Word-syntax and argument problems are the caller's fault (exit 2);
  // anything thrown while computing is exit 1.
  std::optional<Word> w1, w2;
  try {
    opts.length_cap = length_cap_from_env();
    const bool two_words = equiv_cmd->parsed() || orbit_cmd->parsed();
    if (two_words || word_cmd->parsed() || classify_cmd->parsed()) {
      w1 = parse_word(e1, opts.length_cap);
    }
    if (two_words) w2 = parse_word(e2, opts.length_cap);
    if (point_cmd->parsed() || survey_cmd->parsed()) {
      opts.window = clamp_window(window, err);
      format_from(format_name);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const free2::ParseError& e) {
    err << "error: cannot parse word: " << e.what() << '\n';
    return kExitUsage;
  } catch (const free2::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (word_cmd->parsed()) {
      print_word(*w1, out);
    } else if (classify_cmd->parsed()) {
      print_classification(*w1, out);
    } else if (equiv_cmd->parsed()) {
      out << (equiv(*w1, *w2) ? "equivalent" : "not equivalent") << '\n';
    } else if (orbit_cmd->parsed()) {
      const auto phi =
          orbit_equivalent(CyclicWord::of(*w1), CyclicWord::of(*w2));
      if (!phi) {
        out << "not orbit-equivalent\n";
      } else {
        out << "orbit-equivalent\n"
            << "witness: " << phi->factorization_string() << '\n'
            << "x -> " << format_word(phi->image_of_x()) << '\n'
            << "y -> " << format_word(phi->image_of_y()) << '\n';
      }
    } else if (kpq_cmd->parsed()) {
      const auto f = parse_family(family_name);
      if (!f) {
        err << "error: unknown family '" << family_name << "'\n";
        return kExitUsage;
      }
      out << format_word(generate(*f, {n, p, q}, opts.length_cap)) << '\n';
    } else if (point_cmd->parsed()) {
      const ReportFormat fmt = format_from(format_name);
      write_row(out, classify(p, q, opts), fmt, true);
    } else if (survey_cmd->parsed()) {
      SurveyGrid grid;
      try {
        std::tie(grid.p_lo, grid.p_hi) = parse_range(p_range, "--p-range");
        std::tie(grid.q_lo, grid.q_hi) = parse_range(q_range, "--q-range");
      } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      const ReportFormat fmt = format_from(format_name);
      bool first = true;
      survey_stream(grid, opts, threads, [&](const ClassificationReport& r) {
        write_row(out, r, fmt, first);
        first = false;
      });
    }
  } catch (const std::exception& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  out.flush();
  return kExitOk;
}

}  // namespace free2::cli
