#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "braidcount/braid.hpp"
#include "braidcount/classes.hpp"
#include "braidcount/counting.hpp"
#include "braidcount/error.hpp"
#include "braidcount/invariants.hpp"
#include "braidcount/numeric.hpp"
#include "braidcount/verify.hpp"
#include "braidcount/words.hpp"

namespace braidcount::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kMaxPairs = 4096;
constexpr unsigned kMaxWorkers = 256;
constexpr unsigned kMaxConjLen = 8;

// Rows share one key order; json prints a single object when `single`.
struct Table {
  std::vector<Json> rows;
  bool single = false;
  std::vector<std::string> plain;  // replaces the key=value rendering when set
};

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    const Json doc = t.single && t.rows.size() == 1 ? t.rows.front() : Json(t.rows);
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::vector<std::string> keys;
    for (const auto& row : t.rows) {
      for (const auto& [k, v] : row.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
      }
    }
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(keys[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        out << (i ? "," : "") << (row.contains(keys[i]) ? csv_field(scalar_text(row[keys[i]])) : "");
      }
      out << '\n';
    }
    return;
  }
  if (!t.plain.empty()) {
    for (const auto& line : t.plain) out << line << '\n';
    return;
  }
  for (const auto& row : t.rows) {
    std::string line;
    for (const auto& [k, v] : row.items()) {
      if (v.is_null()) continue;
      if (!line.empty()) line += ' ';
      line += k + '=' + scalar_text(v);
    }
    out << line << '\n';
  }
}

mpz_class parse_integer(const std::string& flag, const std::string& text) {
  if (text.empty()) throw ParseError(flag + " expects a nonnegative integer", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(flag + " expects a nonnegative integer", i);
    }
  }
  return mpz_class(text);
}

Threshold threshold_of(const std::string& x_text, const std::string& y_text) {
  if (x_text.empty() == y_text.empty()) throw PreconditionError("give exactly one of --X and --Y");
  if (!x_text.empty()) return Threshold(parse_integer("--X", x_text));
  return threshold_from_Y(parse_closed_form(y_text));
}

Json interval_json(const BoundInterval& b) {
  Json j;
  j["exact_zero"] = b.exact_zero;
  j["lower_log_arg"] = b.exact_zero ? Json() : Json(b.lower_arg.argument().get_str());
  j["upper_log_arg"] = b.exact_zero ? Json() : Json(b.upper_arg.argument().get_str());
  j["lower_value"] = b.lower_text();
  j["upper_value"] = b.upper_text();
  return j;
}

Json bound_row(const std::string& quantity, const BoundInterval& b, const std::string& note) {
  Json row;
  row["quantity"] = quantity;
  const auto interval = interval_json(b);
  for (const auto& [k, v] : interval.items()) row[k] = v;
  row["note"] = note;
  return row;
}

Json omitted_row(const std::string& quantity, const std::string& reason) {
  Json row;
  row["quantity"] = quantity;
  for (const char* k : {"exact_zero", "lower_log_arg", "upper_log_arg", "lower_value", "upper_value"}) row[k] = nullptr;
  row["note"] = "omitted: " + reason;
  return row;
}

Json entropy_row(const FreeWord& w) {
  if (w.is_identity()) return omitted_row("entropy", "identity has zero entropy");
  if (!is_cyclically_reduced(w)) return omitted_row("entropy", "word is not cyclically reduced");
  try {
    return bound_row("entropy", entropy_bounds(w), kEntropyConversion);
  } catch (const PreconditionError& e) {
    return omitted_row("entropy", e.what());
  }
}

Table cmd_normalize(const std::string& text) {
  const auto x = eval(parse_braid(text));
  const auto form = normal_form(x);
  Json row;
  row["input"] = text;
  row["coset"] = render(x);
  if (const auto* g = std::get_if<GeneralForm>(&form)) {
    row["tag"] = "general";
    row["j"] = g->j;
    row["k"] = g->k;
    row["b1"] = render(g->b1);
    row["ell"] = g->ell;
  } else {
    row["tag"] = "power_of_delta";
    row["j"] = nullptr;
    row["k"] = nullptr;
    row["b1"] = nullptr;
    row["ell"] = std::get<PowerOfDelta>(form).ell;
  }
  row["form"] = render(form);
  return {{row}, true, {render(form), "coset " + render(x)}};
}

Table cmd_syllables(const std::string& text) {
  const auto w = parse_word(text);
  Table t;
  std::size_t index = 0;
  for (const auto& s : syllable_decompose(w)) {
    Json row;
    row["index"] = index++;
    row["kind"] = s.kind == SyllableKind::first ? "first" : "second";
    row["degree"] = s.degree;
    row["sign"] = s.sign;
    row["start"] = s.start == Generator::a1 ? "a1" : "a2";
    const auto e = s.expand();
    row["expansion"] = render(reduce(e));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_theta(const std::string& text) {
  const auto form = normal_form(parse_braid(text));
  Json row;
  row["input"] = text;
  row["form"] = render(form);
  const auto th = theta(form);
  row["theta"] = render(th);
  row["degree"] = th.degree();
  return {{row}, true, {render(th).empty() ? "e" : render(th)}};
}

Table cmd_bounds(const std::string& word_text, const std::string& braid_text) {
  if (word_text.empty() == braid_text.empty()) throw PreconditionError("give exactly one of --word and --braid");
  Table t;
  if (!word_text.empty()) {
    const auto w = parse_word(word_text);
    t.rows.push_back(bound_row("lambda_tr", lambda_tr_bounds_word(w), ""));
    t.rows.push_back(entropy_row(w));
    return t;
  }
  const auto x = eval(parse_braid(braid_text));
  t.rows.push_back(bound_row("lambda_tr", lambda_tr_bounds_braid(x), ""));
  if (is_pure(x)) {
    t.rows.push_back(entropy_row(pure_word(x)));
  } else {
    t.rows.push_back(omitted_row("entropy", "braid is not pure modulo the center"));
  }
  return t;
}

Json count_row(const std::string& function, std::optional<unsigned> j, const Threshold* t) {
  Json row;
  row["function"] = function;
  row["j"] = j ? Json(*j) : Json();
  row["X"] = t ? Json(t->x.get_str()) : Json();
  return row;
}

Table cmd_count_tuples(const Threshold& t, std::optional<unsigned> j) {
  Table out;
  if (j) {
    if (*j == 0) throw PreconditionError("--j must be >= 1");
    const auto exact = count_tuples_j(*j, t);
    const auto bound = bound_tuples_j(*j, t);
    auto row = count_row("tuples_j", j, &t);
    row["exact"] = exact.get_str();
    row["bound"] = bound ? Json(format_up(*bound)) : Json();
    row["satisfied"] = bound ? mpfr_cmp_z(bound->get(), exact.get_mpz_t()) >= 0 : exact == 0;
    out.rows.push_back(std::move(row));
    return out;
  }
  const auto exact = count_tuples(t);
  const auto bound = bound_tuples_total(t);
  auto row = count_row("tuples", std::nullopt, &t);
  row["exact"] = exact.get_str();
  row["bound"] = format_up(bound);
  row["satisfied"] = mpfr_cmp_z(bound.get(), exact.get_mpz_t()) >= 0;
  out.rows.push_back(std::move(row));
  return out;
}

Table cmd_count_words(const Threshold& t, std::optional<std::int64_t> max_len, unsigned workers) {
  if (workers == 0 || workers > kMaxWorkers) throw PreconditionError("--workers must be in 1..256");
  const Count exact = max_len ? count_words_bounded(t, *max_len) : count_words(t, workers);
  const auto bound = bound_words(t);
  const std::string name = max_len ? "words_bounded" : "words";
  Table out;
  auto cube = count_row(name, std::nullopt, &t);
  cube["exact"] = exact.get_str();
  cube["bound"] = format_rational(bound.half_cube);
  cube["satisfied"] = cmp(mpq_class(exact), bound.half_cube) <= 0;
  out.rows.push_back(std::move(cube));
  auto chain = count_row(name + "_chain", std::nullopt, &t);
  chain["exact"] = exact.get_str();
  chain["bound"] = bound.chain.get_str();
  chain["satisfied"] = exact <= bound.chain;
  out.rows.push_back(std::move(chain));
  return out;
}

Table cmd_count_classes(unsigned pairs) {
  if (pairs == 0 || pairs > kMaxPairs) throw PreconditionError("--pairs must be in 1..4096");
  const auto exact = class_count(pairs);
  mpz_class family;
  mpz_ui_pow_ui(family.get_mpz_t(), 2, 2 * pairs);
  const mpq_class floor_value(family, mpz_class(2 * pairs));
  auto row = count_row("classes", pairs, nullptr);
  row["exact"] = exact.get_str();
  row["bound"] = format_rational(floor_value);
  row["satisfied"] = cmp(mpq_class(exact), floor_value) >= 0;
  return {{row}, false, {}};
}

Table cmd_report(const std::string& variant_text, const std::string& y_text) {
  const auto variant = variant_text == "entropy" ? ReportVariant::entropy : ReportVariant::lambda;
  const auto r = lower_bound_report(parse_closed_form(y_text), variant);
  Json row;
  row["variant"] = variant_text;
  row["Y"] = r.y.to_string();
  row["index"] = r.index;
  row["family_size"] = r.family_size.get_str();
  row["class_count"] = r.classes ? Json(r.classes->get_str()) : Json();
  row["target_bound"] = r.target_bound;
  row["family_within_y"] = r.family_within_y;
  row["bound_satisfied"] = r.bound_satisfied;
  row["satisfied"] = r.satisfied();
  return {{row}, true, {}};
}

Table cmd_verify(const std::string& suite, const verify::Limits& limits, bool& all_passed) {
  if (limits.max_len > 14) throw PreconditionError("--max-len must be <= 14");
  if (limits.conj_len > kMaxConjLen) throw PreconditionError("--conj-len must be <= 8");
  if (limits.pairs == 0 || limits.pairs > 10) throw PreconditionError("--pairs must be in 1..10");
  Table t;
  all_passed = true;
  for (const auto& r : verify::run_suite(suite, limits)) {
    Json row;
    row["suite"] = r.suite;
    row["check"] = r.name;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    all_passed = all_passed && r.passed;
    t.plain.push_back(std::string(r.passed ? "PASS " : "FAIL ") + r.suite + ": " + r.name +
                      (r.detail.empty() ? "" : " (" + r.detail + ")"));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and counting functions for 3-braids modulo the center", "braidcount"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));

  std::string braid_text, word_text, x_text, y_text, suite = "all", variant;
  std::optional<unsigned> j;
  std::optional<std::int64_t> max_len;
  unsigned workers = 1;
  unsigned pairs = 0;
  verify::Limits limits;

  auto* normalize = app.add_subcommand("normalize", "Normal form of a braid modulo the center");
  normalize->add_option("braid", braid_text, "braid word, e.g. \"s1 S2^3 D\"")->required();

  auto* syllables = app.add_subcommand("syllables", "Syllable decomposition of a free word");
  syllables->add_option("--word", word_text, "word in a1, a2, e.g. \"a1^2 A2\"")->required();

  auto* theta_cmd = app.add_subcommand("theta", "Pure word attached to a braid's normal form");
  theta_cmd->add_option("--braid", braid_text)->required();

  auto* bounds = app.add_subcommand("bounds", "Extremal length and entropy intervals");
  bounds->add_option("--word", word_text);
  bounds->add_option("--braid", braid_text);

  auto* count = app.add_subcommand("count", "Exact counting functions against their bounds");
  count->require_subcommand(1);
  auto* tuples = count->add_subcommand("tuples", "degree tuples with prod(3 d) <= X");
  auto* words = count->add_subcommand("words", "reduced words with prod(3 d) <= X");
  auto* classes = count->add_subcommand("classes", "orbits of the alternating family");
  for (auto* sub : {tuples, words}) {
    sub->add_option("--X", x_text, "integer threshold");
    sub->add_option("--Y", y_text, "closed-form Y; X = floor(e^Y)");
  }
  tuples->add_option("--j", j, "tuple length");
  words->add_option("--max-len", max_len, "restrict to total degree <= max-len");
  words->add_option("--workers", workers, "threads for the top-level split");
  classes->add_option("--pairs,--j", pairs, "family index j (2j terms)")->required();

  auto* report = app.add_subcommand("report", "Exponential lower-bound witness at a given Y");
  report->add_option("variant", variant)->required()->check(CLI::IsMember({"lambda", "entropy"}));
  report->add_option("--Y", y_text, "closed form such as 600*log(8)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run property batteries");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "words", "braid", "counting", "classes"}));
  verify_cmd->add_option("--max-x", limits.max_x);
  verify_cmd->add_option("--max-len", limits.max_len);
  verify_cmd->add_option("--conj-len", limits.conj_len);
  verify_cmd->add_option("--pairs", limits.pairs);

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Table table;
    bool passed = true;
    if (*normalize) {
      table = cmd_normalize(braid_text);
    } else if (*syllables) {
      table = cmd_syllables(word_text);
    } else if (*theta_cmd) {
      table = cmd_theta(braid_text);
    } else if (*bounds) {
      table = cmd_bounds(word_text, braid_text);
    } else if (*tuples) {
      table = cmd_count_tuples(threshold_of(x_text, y_text), j);
    } else if (*words) {
      table = cmd_count_words(threshold_of(x_text, y_text), max_len, workers);
    } else if (*classes) {
      table = cmd_count_classes(pairs);
    } else if (*report) {
      table = cmd_report(variant, y_text);
    } else if (*verify_cmd) {
      table = cmd_verify(suite, limits, passed);
    }
    emit(table, format, out);
    return passed ? 0 : 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace braidcount::cli
