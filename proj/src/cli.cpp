#include "polyapery/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyapery/registry.hpp"
#include "polyapery/report.hpp"

namespace polyapery {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

ConstExpr value(const std::string& s) {
  try {
    return parse_value(s);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

std::vector<ConstExpr> values(const std::string& s) {
  std::vector<ConstExpr> out;
  for (const auto& t : split(s, ',')) out.push_back(value(t));
  return out;
}

Composition composition(const std::string& s) {
  std::vector<int> parts;
  for (const auto& t : split(s, ',')) parts.push_back(parse_int(t));
  try {
    return Composition(std::move(parts));
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

ConstExpr eval_target(const std::vector<std::string>& t) {
  auto need = [&](std::size_t n) {
    if (t.size() != n) throw UsageError("'" + t[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
  };
  if (t.empty()) throw UsageError("missing eval target");
  const std::string& kind = t[0];
  if (kind == "li") {
    need(3);
    return expr::li(parse_int(t[1]), value(t[2]));
  }
  if (kind == "mpl") {
    need(3);
    return expr::mpl(composition(t[1]), values(t[2]));
  }
  if (kind == "nielsen") {
    need(4);
    return expr::nielsen(parse_int(t[1]), parse_int(t[2]), value(t[3]));
  }
  if (kind == "word") {
    need(2);
    return expr::word(values(t[1]));
  }
  if (kind == "h1001") {
    need(2);
    return expr::h_m1001(value(t[1]));
  }
  if (kind == "const") {
    need(2);
    return value(t[1]);
  }
  throw UsageError("unknown eval target '" + kind + "' (li, mpl, nielsen, word, h1001, const)");
}

void print_value(std::ostream& out, OutputFormat format, const std::string& what, const CertifiedReal& v,
                 long digits) {
  const std::string value_str = v.value.to_string(static_cast<int>(digits));
  const std::string bound = format_number(v.error);
  if (format == OutputFormat::kMachine) {
    nlohmann::ordered_json j;
    j["target"] = what;
    j["digits"] = digits;
    j["value"] = value_str;
    j["certified_bound"] = bound;
    j["terms_used"] = v.terms;
    out << j.dump() << '\n';
  } else {
    out << what << " = " << value_str << '\n' << "certified_bound = " << bound << '\n'
        << "terms_used = " << v.terms << '\n';
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified evaluation of polylogarithms and central binomial sums", "polyapery"};
  app.fallthrough();
  app.require_subcommand(1);
  long digits = 30;
  std::string format_name = "text";
  app.add_option("--digits", digits, "decimal digits (10..1000)")->check(CLI::Range(10L, 1000L));
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "machine"}));

  auto* eval = app.add_subcommand("eval", "evaluate li k x | mpl k1,..,kr x1,..,xr | nielsen a b z | "
                                          "word a1,..,an | h1001 y | const name");
  std::vector<std::string> target;
  eval->add_option("target", target, "target and its arguments")->required()->allow_extra_args();

  auto* sum = app.add_subcommand("sum", "sum u^n/(n^s C(2n,n)) * weight(n)");
  std::string u_text;
  int s = 2;
  std::string weight_text = "1";
  sum->add_option("-u", u_text, "u, |u| < 4")->required();
  sum->add_option("-s", s, "power of n (>= 2)");
  sum->add_option("-w", weight_text, "harmonic weight, e.g. \"H2(n-1)\" or \"10*H(n) - 3/n\"");

  auto* verify_cmd = app.add_subcommand("verify", "verify registry identities");
  std::vector<std::string> ids;
  bool all = false;
  std::string u_grid_text;
  verify_cmd->add_option("ids", ids, "identity ids");
  verify_cmd->add_flag("--all", all, "verify every identity");
  verify_cmd->add_option("--u-grid", u_grid_text, "comma-separated u values for parameterized records");

  auto* list = app.add_subcommand("list", "list registry identities with citations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  }
  const OutputFormat format = format_name == "machine" ? OutputFormat::kMachine : OutputFormat::kText;

  try {
    if (eval->parsed()) {
      const ConstExpr e = eval_target(target);
      CertifiedReal v;
      try {
        v = eval_expr(e, make_context(digits));
      } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitEvalError;
      }
      print_value(out, format, join(target), v, digits);
      return kExitOk;
    }

    if (sum->parsed()) {
      HarmonicWeight w;
      try {
        w = HarmonicWeight::parse(weight_text);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      const ConstExpr e = expr::apery(value(u_text), s, w);
      CertifiedReal v;
      try {
        v = eval_expr(e, make_context(digits));
      } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitEvalError;
      }
      print_value(out, format, "sum u=" + u_text + " s=" + std::to_string(s) + " w=" + w.to_string(), v, digits);
      return kExitOk;
    }

    if (list->parsed()) {
      for (const auto& rec : builtin_registry()) {
        out << (format == OutputFormat::kMachine ? to_machine_line(rec) : to_text_line(rec)) << '\n';
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<const IdentityRecord*> records;
      if (all) {
        for (const auto& rec : builtin_registry()) records.push_back(&rec);
      }
      for (const auto& id : ids) {
        const IdentityRecord* rec = lookup(id);
        if (!rec) throw UsageError("unknown identity id '" + id + "'");
        if (std::find(records.begin(), records.end(), rec) == records.end()) records.push_back(rec);
      }
      if (records.empty()) throw UsageError("verify needs identity ids or --all");
      std::vector<std::string> grid;
      if (!u_grid_text.empty()) {
        grid = split(u_grid_text, ',');
        for (const auto& t : grid) value(t);
      }
      const auto reports = verify_many(records, digits, grid);
      bool any_fail = false;
      bool any_uncertain = false;
      for (const auto& r : reports) {
        out << (format == OutputFormat::kMachine ? to_machine_line(r) : to_text_line(r)) << '\n';
        if (format == OutputFormat::kMachine && !r.diagnostic.empty()) err << r.id << ": " << r.diagnostic << '\n';
        any_fail |= r.verdict == Verdict::kFail;
        any_uncertain |= r.verdict == Verdict::kUncertain;
      }
      if (any_fail) return kExitFail;
      return any_uncertain ? kExitUncertain : kExitOk;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitEvalError;
  }
  return kExitUsage;
}

}  // namespace polyapery
