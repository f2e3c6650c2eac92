#include "bmw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bmw/error.hpp"

namespace bmw::cli {

namespace {

struct RawOptions {
  int n = -1;
  std::vector<std::string> positional;
};

bool looks_like_element(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return text.find('[') != std::string::npos || (first != std::string::npos && text.substr(first) == "0");
}

int require_n(const RawOptions& raw, std::size_t positional_index, const std::string& command) {
  int n = raw.n;
  if (n < 0 && raw.positional.size() > positional_index) {
    const std::string& s = raw.positional[positional_index];
    try {
      std::size_t used = 0;
      n = std::stoi(s, &used);
      if (used != s.size()) throw UsageError(command + ": strand count must be an integer, got '" + s + "'");
    } catch (const std::logic_error&) {
      throw UsageError(command + ": strand count must be an integer, got '" + s + "'");
    }
  }
  if (n < 0) throw UsageError(command + ": strand count n >= 0 is required");
  return n;
}

}  // namespace

Command parse_input(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations in the BMW / Kauffman tangle algebra", "bmw"};
  app.require_subcommand(0, 1);

  Command cmd;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cmd.seed, "Seed for randomized checks");
  app.add_option("--max-gram-n", cmd.max_gram_n, "Largest n accepted by gram");

  RawOptions raw;
  struct Spec {
    const char* name;
    const char* help;
    const char* positional_help;
  };
  const Spec specs[] = {
      {"dim", "Dimension |C_n| of the algebra", "n"},
      {"connectors", "List the n-connectors", "n"},
      {"normalize", "Reduce words to the connector basis", "words (summed)"},
      {"mul", "Multiply two elements or words", "x y"},
      {"kauffman", "Dubrovnik polynomial of a closed word or element", "word or element"},
      {"gram", "Closure pairing matrix and its certificate", "n"},
      {"verify", "Relation and identity suite", "n"},
      {"spanning", "Spanning family of rank r", "n r"},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-n", raw.n, "Strand count");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cmd.seed, "Seed for randomized checks");
    sub->add_option("--max-gram-n", cmd.max_gram_n, "Largest n accepted by gram");
    if (std::string_view(s.name) == "kauffman")
      sub->add_flag("--unknot-one", cmd.unknot_one, "Normalise the unknot to 1 instead of d");
    // Operands are taken verbatim; CLI11 would split bracketed text into a list.
    sub->allow_extras(true);
    sub->footer(std::string("Operands: ") + s.positional_help);
  }

  std::vector<const char*> argv{"bmw"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cmd.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (app.get_subcommands().empty()) throw UsageError("a subcommand is required\n" + app.help());
  CLI::App* sub = app.get_subcommands().front();
  cmd.name = sub->get_name();
  for (const std::string& extra : sub->remaining()) {
    if (extra.starts_with("--")) throw UsageError(cmd.name + ": unknown option " + extra);
    raw.positional.push_back(extra);
  }

  const auto& pos = raw.positional;
  if (cmd.name == "dim" || cmd.name == "connectors" || cmd.name == "gram" || cmd.name == "verify") {
    cmd.n = require_n(raw, 0, cmd.name);
    if (pos.size() > (raw.n < 0 ? 1U : 0U)) throw UsageError(cmd.name + ": too many arguments");
  } else if (cmd.name == "spanning") {
    cmd.n = require_n(raw, 0, cmd.name);
    std::size_t r_at = raw.n < 0 ? 1 : 0;
    if (pos.size() != r_at + 1) throw UsageError("spanning: expected n and r");
    RawOptions r_raw{-1, {pos[r_at]}};
    cmd.r = require_n(r_raw, 0, "spanning");
  } else {
    cmd.n = require_n(raw, 0, cmd.name);
    if (raw.n < 0) throw UsageError(cmd.name + ": pass the strand count with -n");
    std::size_t expected = cmd.name == "mul" ? 2 : cmd.name == "kauffman" ? 1 : 0;
    if (expected != 0 && pos.size() != expected)
      throw UsageError(cmd.name + ": expected " + std::to_string(expected) + " operand(s)");
    if (cmd.name == "normalize" && pos.empty()) throw UsageError("normalize: expected at least one word");
    for (const std::string& text : pos) {
      bool is_element = looks_like_element(text);
      if (is_element)
        cmd.elements.push_back(AlgebraElement::parse(text, cmd.n));
      else
        cmd.words.push_back(SliceWord::parse(text, cmd.n));
      cmd.operand_is_element.push_back(is_element);
    }
    if (cmd.name == "normalize" && !cmd.elements.empty()) throw UsageError("normalize: operands must be words");
  }
  return cmd;
}

namespace {

using nlohmann::json;

AlgebraElement operand(const Command& cmd, std::size_t& word_at, std::size_t& element_at, bool element_first) {
  if (element_first) return cmd.elements[element_at++];
  return normalize(cmd.words[word_at++]);
}

std::string render(const AlgebraElement& x, OutputFormat f) { return f == OutputFormat::Json ? x.to_json() : x.to_string(); }

}  // namespace

Outcome run_command(const Command& cmd) {
  Outcome o;
  if (cmd.help) {
    o.out = cmd.help_text;
    return o;
  }
  const bool as_json = cmd.format == OutputFormat::Json;
  std::ostringstream out;

  if (cmd.name == "dim") {
    Integer d = connector_count(cmd.n);
    if (as_json)
      out << json{{"n", cmd.n}, {"dim", d.get_str()}}.dump();
    else
      out << d.get_str();
  } else if (cmd.name == "connectors") {
    auto all = enumerate_connectors(cmd.n);
    if (as_json) {
      json j = json::array();
      for (const Connector& c : all) j.push_back(c.to_string());
      out << j.dump();
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) out << (i ? "\n" : "") << all[i].to_string();
    }
  } else if (cmd.name == "normalize") {
    AlgebraElement x(cmd.n);
    for (const SliceWord& w : cmd.words) x += normalize(w);
    out << render(x, cmd.format);
  } else if (cmd.name == "mul") {
    std::vector<AlgebraElement> ops;
    std::size_t wi = 0, ei = 0;
    for (bool is_element : cmd.operand_is_element) ops.push_back(operand(cmd, wi, ei, is_element));
    out << render(multiply(ops[0], ops[1]), cmd.format);
  } else if (cmd.name == "kauffman") {
    RingElem value = cmd.elements.empty() ? dubrovnik(cmd.words.front()) : dubrovnik(cmd.elements.front());
    std::string text = value.to_string();
    if (cmd.unknot_one) {
      try {
        text = exact_divide(embed_laurent(value), embed_laurent(RingElem::delta())).to_string();
      } catch (const InexactDivision&) {
        throw UsageError("kauffman: the value " + text + " is not divisible by d");
      }
    }
    if (as_json)
      out << json{{"n", cmd.n}, {"value", text}}.dump();
    else
      out << text;
  } else if (cmd.name == "gram") {
    GramMatrix a = gram_matrix(cmd.n, cmd.max_gram_n);
    GramCertificate cert = gram_certificate(a);
    if (as_json) {
      out << gram_to_json(a, cert);
    } else {
      for (std::size_t i = 0; i < a.index.size(); ++i) {
        out << a.index[i].to_string() << ":";
        for (const RingElem& e : a.entries[i]) out << "  " << e.to_string();
        out << "\n";
      }
      out << "pattern_ok=" << (cert.pattern_ok ? "true" : "false") << " delta_n2_coeff=" << cert.delta_n2_coeff.get_str()
          << " top_degree=" << cert.top_degree << " top_coeff=" << cert.top_coeff.get_str()
          << " det_nonzero=" << (cert.det_nonzero ? "true" : "false");
      if (cert.full_det_nonzero) out << " full_det_nonzero=" << (*cert.full_det_nonzero ? "true" : "false");
    }
    if (!cert.pattern_ok || !cert.det_nonzero || cert.full_det_nonzero == false) o.exit_code = 1;
  } else if (cmd.name == "verify") {
    VerifyReport report = verify_suite(cmd.n, cmd.seed);
    std::string text = as_json ? report.to_json() : report.to_text();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out << text;
    if (report.failures() != 0) o.exit_code = 1;
  } else if (cmd.name == "spanning") {
    if (cmd.r > cmd.n || (cmd.n - cmd.r) % 2 != 0) throw UsageError("spanning: need n - r even and non-negative");
    auto family = spanning_family(cmd.n, cmd.r);
    Integer expected = spanning_count(cmd.n, cmd.r);
    std::set<Connector> leading;
    bool ranks_ok = true;
    for (const SpanningMember& m : family) {
      leading.insert(m.leading);
      ranks_ok = ranks_ok && m.leading.rank() == cmd.r && rank_of(m.value) == cmd.r &&
                 !m.value.coefficient(m.leading).is_zero();
    }
    bool distinct = leading.size() == family.size();
    bool count_ok = Integer(static_cast<unsigned long>(family.size())) == expected;
    if (as_json) {
      json members = json::array();
      for (const SpanningMember& m : family)
        members.push_back({{"word", m.word.to_string()}, {"leading", m.leading.to_string()}});
      out << json{{"n", cmd.n},
                  {"r", cmd.r},
                  {"count", family.size()},
                  {"expected", expected.get_str()},
                  {"distinct", distinct},
                  {"ranks_ok", ranks_ok},
                  {"members", members}}
                 .dump(2);
    } else {
      out << "n=" << cmd.n << " r=" << cmd.r << " count=" << family.size() << " expected=" << expected.get_str()
          << " distinct=" << (distinct ? "true" : "false") << " ranks_ok=" << (ranks_ok ? "true" : "false");
    }
    if (!distinct || !ranks_ok || !count_ok) o.exit_code = 1;
  } else {
    throw UsageError("unknown command '" + cmd.name + "'");
  }
  o.out = out.str();
  if (!o.out.empty() && o.out.back() != '\n') o.out += '\n';
  return o;
}

Outcome run(const std::vector<std::string>& args) {
  try {
    return run_command(parse_input(args));
  } catch (const UsageError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::out_of_range& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace bmw::cli
