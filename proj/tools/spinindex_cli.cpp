#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinindex/error.hpp"
#include "spinindex/ghat.hpp"
#include "spinindex/icosa.hpp"
#include "spinindex/reptheory.hpp"
#include "spinindex/serialize.hpp"
#include "spinindex/spinindex.hpp"
#include "spinindex/verify.hpp"

namespace si = spinindex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Report {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // printed after the table in pretty mode
  si::Json json;
  bool passed = true;
};

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << r.json.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
  } else {
    std::vector<std::size_t> width(r.header.size(), 0);
    for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = display_width(r.header[i]);
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        text += cells[i];
        if (i + 1 < cells.size()) text += std::string(width[i] - display_width(cells[i]) + 2, ' ');
      }
      out << text << "\n";
    };
    if (!r.header.empty()) line(r.header);
    for (const auto& row : r.rows) line(row);
    for (const auto& note : r.notes) out << note << "\n";
  }
  return out.str();
}

std::string golden_text(const si::GoldenNumber& x) { return x.to_compact(); }

// ---------------------------------------------------------------------------

Report icosa_table() {
  const auto& g = si::BinaryIcosahedralGroup::instance();
  Report r;
  r.header = {"class", "size", "order", "re"};
  for (auto rep : si::kIcosaReps) r.header.emplace_back(si::rep_label(rep));
  r.json = si::Json::object();
  r.json["classes"] = si::Json::array();
  for (auto c : si::kIcosaClasses) {
    std::vector<std::string> row = {std::string(si::class_label(c)), std::to_string(si::class_size(c)),
                                    std::to_string(si::class_element_order(c)),
                                    golden_text(g.element(g.class_representative(c)).re())};
    si::Json chars = si::Json::object();
    for (auto rep : si::kIcosaReps) {
      const auto& value = si::character_2I(rep)[si::index_of(c)];
      row.push_back(value.to_compact());
      chars[std::string(si::rep_label(rep))] = si::to_json(value.re());
    }
    r.rows.push_back(row);
    r.json["classes"].push_back({{"class", si::class_label(c)},
                                 {"size", si::class_size(c)},
                                 {"order", si::class_element_order(c)},
                                 {"re", si::to_json(g.element(g.class_representative(c)).re())},
                                 {"characters", chars}});
  }
  return r;
}

Report ghat_classes() {
  const auto& G = si::GhatGroup::instance();
  Report r;
  r.header = {"index", "name", "ord", "size", "coset", "minus"};
  r.json = si::Json::object();
  r.json["classes"] = si::Json::array();
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    const auto& cls = G.classes()[c];
    const auto& minus = G.classes()[G.minus_class(c)].name;
    r.rows.push_back({std::to_string(c), cls.name, std::to_string(cls.order), std::to_string(cls.size()),
                      cls.coset ? "1" : "0", minus});
    r.json["classes"].push_back({{"index", c},
                                 {"name", cls.name},
                                 {"ord", cls.order},
                                 {"size", cls.size()},
                                 {"coset", cls.coset},
                                 {"minus", minus}});
  }
  return r;
}

Report ghat_chartable(bool check) {
  const auto& G = si::GhatGroup::instance();
  const auto& table = si::chartable_ghat();
  Report r;
  r.header = {"irrep", "dim", "spinorial"};
  for (const auto& cls : G.classes()) r.header.push_back(cls.name);
  r.json = si::Json::object();
  r.json["classes"] = si::Json::array();
  for (const auto& cls : G.classes()) r.json["classes"].push_back(cls.name);
  r.json["irreps"] = si::Json::array();
  for (const auto& chi : table) {
    std::vector<std::string> row = {chi.label.name(), std::to_string(chi.dimension), chi.spinorial ? "1" : "0"};
    si::Json values = si::Json::array();
    for (const auto& v : chi.values) {
      row.push_back(v.to_compact());
      values.push_back(si::to_json(v));
    }
    r.rows.push_back(row);
    r.json["irreps"].push_back(
        {{"name", chi.label.name()}, {"dim", chi.dimension}, {"spinorial", chi.spinorial}, {"values", values}});
  }
  if (check) {
    const auto report = si::check_orthogonality(table);
    r.passed = report.ok();
    r.json["check"] = {{"rows_orthonormal", report.rows_orthonormal},
                       {"columns_orthogonal", report.columns_orthogonal},
                       {"dimension_sum", report.dimension_sum},
                       {"detail", report.detail}};
    r.notes.push_back(std::string("orthogonality: ") + (report.ok() ? "pass" : "FAIL ") + report.detail);
  }
  return r;
}

std::string fp_text(const std::optional<int>& fp) { return fp ? std::to_string(*fp) : "inf"; }

Report spin_davis() {
  const auto table = si::davis_spin_character();
  Report r;
  r.header = {"name", "ord", "size", "fp", "spin", "provenance", "via_minus"};
  r.json = si::Json::object();
  r.json["rows"] = si::Json::array();
  for (const auto& e : table.entries) {
    r.rows.push_back({e.name, std::to_string(e.order), std::to_string(e.size), fp_text(e.fp_count),
                      golden_text(e.spin), std::string(si::provenance_label(e.provenance)),
                      e.via_minus ? "1" : "0"});
    si::Json fp = e.fp_count ? si::Json(*e.fp_count) : si::Json("inf");
    r.json["rows"].push_back({{"name", e.name},
                              {"ord", e.order},
                              {"size", e.size},
                              {"fp_count", fp},
                              {"spin", si::to_json(e.spin)},
                              {"provenance", si::provenance_label(e.provenance)},
                              {"via_minus", e.via_minus}});
  }
  return r;
}

Report spin_decompose() {
  const auto d = si::decompose_davis_index();
  const auto& table = si::chartable_ghat();
  Report r;
  r.header = {"irrep", "dim", "spinorial", "multiplicity"};
  r.json = si::Json::object();
  si::Json mult = si::Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    r.rows.push_back({table[i].label.name(), std::to_string(table[i].dimension), table[i].spinorial ? "1" : "0",
                      std::to_string(d.multiplicities[i])});
    mult.push_back({{"irrep", table[i].label.name()}, {"multiplicity", d.multiplicities[i]}});
  }
  std::string summary = "not a difference of two irreducibles";
  if (d.positive && d.negative) {
    summary = "+ " + table[*d.positive].label.name() + ", − " + table[*d.negative].label.name();
    r.json["positive"] = table[*d.positive].label.name();
    r.json["negative"] = table[*d.negative].label.name();
    r.json["min_total_dimension"] = d.min_total_dimension;
    r.json["dimension_step"] = d.dimension_step;
  }
  r.json["summary"] = summary;
  r.json["norm"] = si::to_json(d.norm);
  r.json["multiplicities"] = mult;
  r.notes.push_back(summary);
  r.notes.push_back("norm " + d.norm.to_compact());
  if (d.positive) {
    r.notes.push_back("dim H+ + dim H- = " + std::to_string(d.min_total_dimension) + " + " +
                      std::to_string(d.dimension_step) + "k");
  }
  return r;
}

si::Json read_json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw si::ParseError("cannot read " + text.substr(1));
    return si::Json::parse(in);
  }
  return si::Json::parse(text);
}

Report spin_nu(int dim, const std::string& phat_text, const std::string& x_text) {
  const si::Json phat = read_json_arg(phat_text);
  const si::Json xj = read_json_arg(x_text);
  Report r;
  r.header = {"dim", "nu", "numeric", "oracle"};
  if (dim == 4) {
    si::IsolatedFixedPoint4 fp{{}, si::spin_matrix4_from_json(phat)};
    if (!xj.is_array() || xj.size() != 5) throw si::ParseError("--x must be a list of 5 coordinates");
    si::HyperboloidPoint4<double> xd{};
    for (std::size_t i = 0; i < 5; ++i) {
      fp.x[i] = si::golden_from_json(xj[i]);
      xd[i] = fp.x[i].to_double();
    }
    const auto value = si::nu_isolated_4d(fp);
    const si::SpinMatrix4<double> m{si::quaternion_cast<double>(fp.phi_hat.a), si::quaternion_cast<double>(fp.phi_hat.b),
                                    si::quaternion_cast<double>(fp.phi_hat.c), si::quaternion_cast<double>(fp.phi_hat.d)};
    const double oracle = si::nu_numeric_oracle(m, xd);
    std::ostringstream a, b;
    a.precision(17);
    b.precision(17);
    a << value.re().to_double();
    b << oracle;
    r.rows.push_back({"4", value.to_compact(), a.str(), b.str()});
    r.json = {{"dim", 4}, {"nu", si::to_json(value)}, {"numeric", value.re().to_double()}, {"oracle", oracle}};
  } else if (dim == 2) {
    const auto phi_hat = si::spin_matrix2_from_json(phat);
    if (!xj.is_array() || xj.size() != 3) throw si::ParseError("--x must be a list of 3 coordinates");
    si::HyperboloidPoint2<si::GoldenNumber> x;
    si::HyperboloidPoint2<double> xd{};
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = si::golden_from_json(xj[i]);
      xd[i] = x[i].to_double();
    }
    const auto value = si::nu_isolated_2d(phi_hat, x);
    auto c = [](const si::GoldenComplex& z) { return std::complex<double>(z.re().to_double(), z.im().to_double()); };
    const si::SpinMatrix2<std::complex<double>> m{c(phi_hat.a), c(phi_hat.b), c(phi_hat.c), c(phi_hat.d)};
    const auto oracle = si::nu_numeric_oracle_2d(m, xd);
    std::ostringstream a, b;
    a.precision(17);
    b.precision(17);
    a << value.im().to_double() << "i";
    b << oracle.imag() << "i";
    r.rows.push_back({"2", value.to_compact(), a.str(), b.str()});
    r.json = {{"dim", 2}, {"nu", si::to_json(value)}, {"numeric_im", value.im().to_double()}, {"oracle_im", oracle.imag()}};
  } else {
    throw si::DomainError("--dim must be 2 or 4");
  }
  return r;
}

Report verify() {
  const auto results = si::run_verification_suite();
  Report r;
  r.header = {"check", "status", "detail"};
  r.json = si::Json::array();
  std::size_t failed = 0;
  for (const auto& c : results) {
    const std::string status = c.passed ? "pass" : "fail";
    if (!c.passed) ++failed;
    r.rows.push_back({c.name, status, c.detail});
    r.json.push_back({{"check", c.name}, {"status", status}, {"detail", c.detail}});
  }
  r.passed = failed == 0;
  r.notes.push_back(std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " checks passed");
  return r;
}

// "spin davis" -> "spin-davis"
std::vector<std::string> join_two_word_commands(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2 && (args[0] == "icosa" || args[0] == "ghat" || args[0] == "spin") && !args[1].empty() &&
      args[1][0] != '-') {
    args[0] += "-" + args[1];
    args.erase(args.begin() + 1);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spin-number and G-hat character computations", "spinindex"};
  app.require_subcommand(1);
  std::string format;
  std::string output;
  app.add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("-o,--output", output, "write to this file instead of stdout");

  auto* icosa = app.add_subcommand("icosa-table", "2I classes and character table");
  auto* classes = app.add_subcommand("ghat-classes", "the 54 conjugacy classes of G-hat");
  auto* chartable = app.add_subcommand("ghat-chartable", "the 54 irreducible characters of G-hat");
  bool check = false;
  chartable->add_flag("--check", check, "verify the orthogonality relations");
  auto* davis = app.add_subcommand("spin-davis", "spin numbers of the Davis manifold on every class");
  auto* decompose = app.add_subcommand("spin-decompose", "the G-hat index as a virtual representation");
  auto* nu = app.add_subcommand("spin-nu", "nu for one isolated fixed point");
  int dim = 4;
  std::string phat, x;
  nu->add_option("--dim", dim, "2 or 4")->check(CLI::IsMember({2, 4}));
  nu->add_option("--phat", phat, "JSON matrix [[a,b],[c,d]] or @file")->required();
  nu->add_option("--x", x, "JSON list of hyperboloid coordinates or @file")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run the full invariant suite");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    auto args = join_two_word_commands(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  std::string default_format = "pretty";
  try {
    if (icosa->parsed()) report = icosa_table();
    if (classes->parsed()) report = ghat_classes();
    if (chartable->parsed()) report = ghat_chartable(check);
    if (davis->parsed()) report = spin_davis();
    if (decompose->parsed()) report = spin_decompose();
    if (nu->parsed()) report = spin_nu(dim, phat, x);
    if (verify_cmd->parsed()) {
      report = verify();
      default_format = "json";
    }
  } catch (const si::Error& e) {
    std::cerr << "spinindex: " << e.what() << "\n";
    return kExitUsage;
  } catch (const si::Json::exception& e) {
    std::cerr << "spinindex: malformed JSON argument: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = render(report, format.empty() ? default_format : format);
  if (output.empty()) {
    std::cout << text;
    if (!std::cout) return kExitUsage;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "spinindex: cannot write " << output << "\n";
      return kExitUsage;
    }
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}
