#include "cli.hpp"

#include "orbital/counting.hpp"
#include "orbital/oracle.hpp"
#include "orbital/strata.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace orbital::cli {

using nlohmann::json;

json to_json(const OutputRecord& r) {
  json j;
  j["kind"] = r.kind;
  j["dim"] = r.dim;
  j["q"] = r.q;
  j["n"] = r.n;
  j["multiset"] = r.multiset;
  if (r.stratum) j["stratum"] = *r.stratum;
  j["value"] = r.value;
  if (r.terms) {
    json t = json::object();
    for (const auto& [label, v] : *r.terms) t[label] = v;
    j["terms"] = t;
  }
  if (r.oracle) j["oracle"] = *r.oracle;
  if (r.match) j["match"] = *r.match;
  if (r.elements) j["elements"] = *r.elements;
  if (r.error) j["error"] = *r.error;
  j["millis"] = r.millis;
  return j;
}

OutputRecord record_from_json(const json& j) {
  OutputRecord r;
  r.kind = j.at("kind").get<std::string>();
  r.dim = j.at("dim").get<unsigned>();
  r.q = j.at("q").get<std::uint64_t>();
  r.n = j.at("n").get<unsigned>();
  r.multiset = j.at("multiset").get<bool>();
  if (j.contains("stratum")) r.stratum = j["stratum"].get<std::string>();
  r.value = j.at("value").get<std::string>();
  if (j.contains("terms")) {
    r.terms.emplace();
    // json objects iterate in key order; term labels are single letters
    for (const auto& [label, v] : j["terms"].items()) r.terms->emplace_back(label, v.get<std::string>());
  }
  if (j.contains("oracle")) r.oracle = j["oracle"].get<std::string>();
  if (j.contains("match")) r.match = j["match"].get<bool>();
  if (j.contains("elements")) r.elements = j["elements"].get<std::uint64_t>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  r.millis = j.at("millis").get<double>();
  return r;
}

std::string csv_header() { return "dim,q,n,multiset,value,oracle,match,millis"; }

std::string to_csv(const OutputRecord& r) {
  std::ostringstream s;
  s << r.dim << ',' << r.q << ',' << r.n << ',' << (r.multiset ? "true" : "false") << ',' << r.value << ','
    << r.oracle.value_or("") << ',' << (r.match ? (*r.match ? "true" : "false") : "") << ',' << std::fixed
    << std::setprecision(3) << r.millis;
  return s.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Column {
  std::string header;
  std::function<std::string(const OutputRecord&)> cell;
};

void print_table(const std::vector<OutputRecord>& rows, std::ostream& out) {
  const auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  const std::string index = rows.empty()                ? "n"
                            : rows[0].kind == "tdos"   ? "r"
                            : rows[0].kind == "pdotze" ? "N"
                                                       : "n";
  std::vector<Column> all = {
      {"stratum", [](const OutputRecord& r) { return r.stratum.value_or(""); }},
      {"dim", [](const OutputRecord& r) { return r.kind == "series" ? std::string() : std::to_string(r.dim); }},
      {"q", [](const OutputRecord& r) { return std::to_string(r.q); }},
      {index, [](const OutputRecord& r) { return std::to_string(r.n); }},
      {"multiset",
       [&](const OutputRecord& r) {
         return r.kind == "tdos" || r.kind == "pdotze" ? std::string() : yes_no(r.multiset);
       }},
      {"value", [](const OutputRecord& r) { return r.value; }},
      {"oracle", [](const OutputRecord& r) { return r.oracle.value_or(""); }},
      {"elements", [](const OutputRecord& r) { return r.elements ? std::to_string(*r.elements) : ""; }},
      {"match", [&](const OutputRecord& r) { return r.match ? yes_no(*r.match) : ""; }},
      {"error", [](const OutputRecord& r) { return r.error.value_or(""); }},
  };
  std::vector<Column> cols;
  for (auto& c : all)
    if (std::any_of(rows.begin(), rows.end(), [&](const OutputRecord& r) { return !c.cell(r).empty(); }))
      cols.push_back(std::move(c));
  std::vector<std::size_t> width;
  for (const auto& c : cols) {
    std::size_t w = c.header.size();
    for (const auto& r : rows) w = std::max(w, c.cell(r).size());
    width.push_back(w);
  }
  const auto line = [&](const std::function<std::string(const Column&)>& text) {
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string t = text(cols[i]);
      if (i + 1 < cols.size()) t.resize(width[i] + 2, ' ');
      s += t;
    }
    out << s << '\n';
  };
  line([](const Column& c) { return c.header; });
  for (const auto& r : rows) {
    line([&](const Column& c) { return c.cell(r); });
    if (r.terms)
      for (const auto& [label, v] : *r.terms) out << "    " << label << ": " << v << '\n';
  }
}

void emit(const std::vector<OutputRecord>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      for (const auto& r : rows) out << to_json(r).dump() << '\n';
      break;
    case Format::csv:
      out << csv_header() << '\n';
      for (const auto& r : rows) out << to_csv(r) << '\n';
      break;
    case Format::table:
      // one table per run of rows of the same kind
      for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].kind == rows[i].kind) ++j;
        if (i != 0) out << '\n';
        print_table(std::vector<OutputRecord>(rows.begin() + i, rows.begin() + j), out);
        i = j;
      }
      break;
  }
}

int exit_code(const std::vector<OutputRecord>& rows) {
  bool skipped = false;
  for (const auto& r : rows) {
    if (r.match && !*r.match) return 1;
    if (!r.match) skipped = true;
  }
  return skipped ? 3 : 0;
}

OutputRecord record(std::string kind, unsigned dim, std::uint64_t q, unsigned n, bool multiset = false) {
  OutputRecord r;
  r.kind = std::move(kind);
  r.dim = dim;
  r.q = q;
  r.n = n;
  r.multiset = multiset;
  return r;
}

PrimePower parse_q(std::uint64_t q) { return PrimePower::from_q(q); }

std::string catalog_listing() {
  std::string s;
  for (const auto& st : catalog()) s += (s.empty() ? "" : ", ") + st.name();
  return s;
}

struct Options {
  unsigned dim = 1;
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned max_n = 0;
  unsigned max_r = 0;
  std::size_t terms = 0;
  std::string stratum;
  std::string dump;
  bool multiset = false;
  bool breakdown = false;
  bool tdos = false;
  bool pdotze = false;
  bool json = false;
  bool csv = false;
  std::uint64_t max_group = oracle::Budget{}.max_group_order;
};

std::vector<OutputRecord> cmd_count(const Options& o) {
  const auto start = Clock::now();
  const CountRequest req{o.dim, parse_q(o.q), o.n, o.multiset};
  OutputRecord r = record("count", o.dim, o.q, o.n, o.multiset);
  r.value = to_string(count(req));
  if (o.breakdown) {
    r.terms.emplace();
    for (const auto& [label, s] : breakdown(req).terms) r.terms->emplace_back(label, to_string(coeff(s, o.n)));
  }
  r.millis = millis_since(start);
  return {r};
}

std::vector<OutputRecord> cmd_series(const Options& o) {
  const auto stratum = Stratum::parse(o.stratum);
  if (!stratum) throw std::invalid_argument("unknown stratum '" + o.stratum + "'; known strata: " + catalog_listing());
  if (o.q < 2) throw std::invalid_argument("q must be at least 2");
  const auto start = Clock::now();
  const Series s = gf_series(*stratum, o.q, o.terms, o.multiset);
  const double ms = millis_since(start);
  std::vector<OutputRecord> rows;
  for (unsigned n = 0; n <= o.terms; ++n) {
    OutputRecord r = record("series", stratum->dim, o.q, n, o.multiset);
    r.stratum = stratum->name();
    r.value = to_string(coeff(s, n));
    r.millis = ms;
    rows.push_back(std::move(r));
  }
  return rows;
}

oracle::Budget budget_of(const Options& o) {
  oracle::Budget b;
  b.max_group_order = o.max_group;
  return b;
}

void write_dump(const std::string& path, const std::vector<oracle::FixedSetRecord>& records) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  for (const auto& rec : records) {
    json j;
    const auto& m = rec.gamma.matrix();
    json rows = json::array();
    for (unsigned i = 0; i < m.size; ++i) {
      json row = json::array();
      for (unsigned k = 0; k < m.size; ++k) row.push_back(m.at(i, k).code);
      rows.push_back(row);
    }
    j["gamma"] = rows;
    j["sets"] = json::array();
    j["multisets"] = json::array();
    for (const auto& v : rec.sets) j["sets"].push_back(v.get_str());
    for (const auto& v : rec.multisets) j["multisets"].push_back(v.get_str());
    f << j.dump() << '\n';
  }
}

std::vector<OutputRecord> cmd_oracle(const Options& o) {
  const auto q = parse_q(o.q);
  const auto start = Clock::now();
  OutputRecord r = record("oracle", o.dim, o.q, o.n, o.multiset);
  try {
    const oracle::BurnsideContext ctx(o.dim, q, o.n, budget_of(o));
    std::vector<oracle::FixedSetRecord> records;
    const auto table = oracle::burnside_table(ctx, o.dump.empty() ? nullptr : &records);
    r.oracle = to_string(o.multiset ? table.multisets[o.n] : table.sets[o.n]);
    if (!o.dump.empty()) write_dump(o.dump, records);
    r.value = to_string(count({o.dim, q, o.n, o.multiset}));
    r.match = *r.oracle == r.value;
  } catch (const gfq::BudgetExceeded& e) {
    r.error = std::string("budget exceeded: ") + e.what();
  }
  r.millis = millis_since(start);
  return {r};
}

// Largest context with nmax <= max_n that fits the budget, with the reason
// higher levels were dropped.
std::optional<oracle::BurnsideContext> fitting_context(const Options& o, const PrimePower& q, std::string& why) {
  for (unsigned nmax = o.max_n + 1; nmax-- > 0;) {
    try {
      return oracle::BurnsideContext(o.dim, q, nmax, budget_of(o));
    } catch (const gfq::BudgetExceeded& e) {
      if (why.empty()) why = e.what();
    }
  }
  return std::nullopt;
}

std::vector<OutputRecord> cmd_verify(const Options& o) {
  const auto q = parse_q(o.q);
  std::vector<OutputRecord> rows;
  for (unsigned n = 0; n <= o.max_n; ++n) {
    const auto start = Clock::now();
    OutputRecord r = record("verify", o.dim, o.q, n, o.multiset);
    r.value = to_string(count({o.dim, q, n, o.multiset}));
    r.millis = millis_since(start);
    rows.push_back(std::move(r));
  }

  // one oracle pass covers every n; its time is charged to the first row
  const auto start = Clock::now();
  std::string why;
  std::optional<oracle::BurnsideTable> table;
  if (auto ctx = fitting_context(o, q, why)) table = oracle::burnside_table(*ctx);
  rows.front().millis += millis_since(start);
  for (auto& r : rows) {
    if (table && r.n < table->sets.size()) {
      r.oracle = to_string(o.multiset ? table->multisets[r.n] : table->sets[r.n]);
      r.match = *r.oracle == r.value;
    } else {
      r.error = "oracle budget exceeded: " + why;
    }
  }

  if (o.tdos) {
    const unsigned max_r = o.max_r != 0 ? o.max_r : std::min(std::max(o.max_n, 1U), o.dim == 1 ? 4U : 3U);
    std::optional<std::vector<oracle::ProjMatrix>> group;
    std::string group_error;
    try {
      group = oracle::enumerate_pgl(o.dim, q, budget_of(o));
    } catch (const gfq::BudgetExceeded& e) {
      group_error = e.what();
    }
    for (unsigned r = 1; r <= max_r; ++r) {
      const auto t0 = Clock::now();
      OutputRecord row = record("tdos", o.dim, o.q, r);
      const Integer qr = ipow(Integer(static_cast<unsigned long>(o.q)), r);
      const Integer expected = (ipow(qr, o.dim + 1) - 1) / (qr - 1);
      row.value = to_string(expected);
      if (!group) {
        row.error = "oracle budget exceeded: " + group_error;
      } else {
        try {
          bool all = true;
          Integer seen = expected;
          for (const auto& g : *group) {
            const Integer c = oracle::quotient_point_count(g, q, r, oracle::QuotientMethod::automatic, budget_of(o));
            if (c != expected && all) {
              all = false;
              seen = c;
            }
          }
          row.oracle = to_string(seen);
          row.match = all;
          row.elements = group->size();
        } catch (const gfq::BudgetExceeded& e) {
          row.error = std::string("oracle budget exceeded: ") + e.what();
        }
      }
      row.millis = millis_since(t0);
      rows.push_back(std::move(row));
    }
  }

  if (o.pdotze) {
    const auto t0 = Clock::now();
    const unsigned N = o.dim + 1;
    OutputRecord row = record("pdotze", N, o.q, N);
    const Integer expected = ipow(Integer(static_cast<unsigned long>(o.q)), N);
    row.value = to_string(expected);
    try {
      const auto group = oracle::enumerate_gl(N, q, budget_of(o));
      bool all = true;
      Integer seen = expected;
      for (const auto& g : group) {
        const Integer c = oracle::affine_quotient_count(g, q, oracle::QuotientMethod::automatic, budget_of(o));
        if (c != expected && all) {
          all = false;
          seen = c;
        }
      }
      row.oracle = to_string(seen);
      row.match = all;
      row.elements = group.size();
    } catch (const gfq::BudgetExceeded& e) {
      row.error = std::string("oracle budget exceeded: ") + e.what();
    }
    row.millis = millis_since(t0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit counts of rational n-sets and n-multisets of P^1 and P^2 over finite fields"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "One JSON object per line");
    auto* c = sub->add_flag("--csv", o.csv, "CSV with header " + csv_header());
    j->excludes(c);
  };
  const auto add_dim_q = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Projective dimension N")->required()->check(CLI::IsMember({1U, 2U}));
    sub->add_option("--q", o.q, "Field size (a prime power)")->required();
  };

  auto* count_cmd = app.add_subcommand("count", "Number of orbits of rational n-sets (n-multisets)");
  add_dim_q(count_cmd);
  count_cmd->add_option("--n", o.n, "Size n")->required();
  count_cmd->add_flag("--multiset", o.multiset, "Count multisets");
  count_cmd->add_flag("--breakdown", o.breakdown, "Show the per-type terms");
  add_format(count_cmd);

  auto* series_cmd = app.add_subcommand("series", "Generating-function coefficients of a stratum");
  series_cmd->add_option("--stratum", o.stratum, "Stratum name")->required();
  series_cmd->add_option("--q", o.q, "Field size")->required();
  series_cmd->add_option("--terms", o.terms, "Last coefficient index")->required();
  series_cmd->add_flag("--multiset", o.multiset, "Multiset series (the zeta function)");
  add_format(series_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force orbit count over the whole group");
  add_dim_q(oracle_cmd);
  oracle_cmd->add_option("--n", o.n, "Size n")->required();
  oracle_cmd->add_flag("--multiset", o.multiset, "Count multisets");
  oracle_cmd->add_option("--dump", o.dump, "Write per-element fixed-set counts as JSON lines");
  oracle_cmd->add_option("--max-group", o.max_group, "Largest group to enumerate");
  add_format(oracle_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare formulas with the oracle for n = 0..max-n");
  add_dim_q(verify_cmd);
  verify_cmd->add_option("--max-n", o.max_n, "Largest n")->required();
  verify_cmd->add_flag("--multiset", o.multiset, "Compare multiset counts");
  verify_cmd->add_flag("--tdos", o.tdos, "Check |(P^N/gamma)(F_{q^r})| for every gamma");
  verify_cmd->add_flag("--pdotze", o.pdotze, "Check |(A^{N+1}/gamma)(F_q)| = q^{N+1} for every gamma");
  verify_cmd->add_option("--max-r", o.max_r, "Largest r for --tdos (default min(max-n, 4) for N=1, 3 for N=2)");
  verify_cmd->add_option("--max-group", o.max_group, "Largest group to enumerate");
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format format = o.json ? Format::json : o.csv ? Format::csv : Format::table;
  try {
    std::vector<OutputRecord> rows;
    if (*count_cmd) rows = cmd_count(o);
    else if (*series_cmd) rows = cmd_series(o);
    else if (*oracle_cmd) rows = cmd_oracle(o);
    else rows = cmd_verify(o);
    emit(rows, format, out);
    if (*verify_cmd) return exit_code(rows);
    if (*oracle_cmd) return exit_code(rows);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace orbital::cli
