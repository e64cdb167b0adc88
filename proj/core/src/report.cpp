#include "free2/report.hpp"

#include <json.hpp>
#include <type_traits>

namespace free2 {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
std::string csv_opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string to_json(const ClassificationReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["form"] = r.form.name();
  if (const auto t = r.form.torus_params()) {
    j["torus_params"] = {t->first, t->second};
  } else {
    j["torus_params"] = nullptr;
  }
  j["slope"] = r.slope;
  j["pi1_injective"] =
      r.pi1_injective ? ordered_json(*r.pi1_injective) : ordered_json(nullptr);
  j["tunnel_witness"] = r.tunnel ? ordered_json(format_word(r.tunnel->word))
                                 : ordered_json(nullptr);
  if (r.atoroidality) {
    j["atoroidal_window"] = r.atoroidality->window;
    j["atoroidal_ok"] = r.atoroidality->ok;
  } else {
    j["atoroidal_window"] = nullptr;
    j["atoroidal_ok"] = nullptr;
  }
  ordered_json one;
  one["decided"] = r.one_one.decided;
  one["window"] = r.one_one.window;
  if (r.one_one.witness) {
    const OneOneWitness& w = *r.one_one.witness;
    ordered_json wj;
    wj["n"] = w.n;
    wj["c0"] = family_tag(w.c0);
    wj["c1"] = family_tag(w.c1);
    wj["condition"] = to_string(w.detail.condition);
    one["witness"] = wj;
  } else {
    one["witness"] = nullptr;
  }
  j["one_one"] = one;
  if (r.surgery) {
    ordered_json s;
    s["slope"] = r.surgery->slope;
    s["index"] = r.surgery->seifert_index;
    j["surgery"] = s;
  } else {
    j["surgery"] = nullptr;
  }
  return j.dump();
}

std::string csv_header() {
  return "p,q,form,torus_a,torus_b,slope,pi1_injective,tunnel_witness,"
         "atoroidal_window,atoroidal_ok,one_one_decided,one_one_window,"
         "one_one_n,one_one_c0,one_one_c1,one_one_condition,surgery_slope,"
         "surgery_index";
}

std::string to_csv(const ClassificationReport& r) {
  std::string out;
  auto col = [&](std::string_view v) {
    if (!out.empty()) out += ',';
    out += v;
  };
  const auto torus = r.form.torus_params();
  const auto& w = r.one_one.witness;
  col(std::to_string(r.p));
  col(std::to_string(r.q));
  col(r.form.name());
  col(torus ? std::to_string(torus->first) : "");
  col(torus ? std::to_string(torus->second) : "");
  col(std::to_string(r.slope));
  col(csv_opt(r.pi1_injective));
  col(r.tunnel ? format_word(r.tunnel->word) : "");
  col(r.atoroidality ? std::to_string(r.atoroidality->window) : "");
  col(r.atoroidality ? (r.atoroidality->ok ? "true" : "false") : "");
  col(r.one_one.decided ? "true" : "false");
  col(std::to_string(r.one_one.window));
  col(w ? std::to_string(w->n) : "");
  col(w ? family_tag(w->c0) : "");
  col(w ? family_tag(w->c1) : "");
  col(w ? to_string(w->detail.condition) : "");
  col(r.surgery ? std::to_string(r.surgery->slope) : "");
  col(r.surgery ? std::to_string(r.surgery->seifert_index) : "");
  return out;
}

void write_row(std::ostream& out, const ClassificationReport& r,
               ReportFormat format, bool first_row) {
  if (format == ReportFormat::json) {
    out << to_json(r) << '\n';
    return;
  }
  if (first_row) out << csv_header() << '\n';
  out << to_csv(r) << '\n';
}

void write_rows(std::ostream& out, std::span<const ClassificationReport> rows,
                ReportFormat format) {
  bool first = true;
  for (const auto& r : rows) {
    write_row(out, r, format, first);
    first = false;
  }
}

}  // namespace free2
