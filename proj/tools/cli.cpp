#include "cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "steinberg/steinberg.hpp"

namespace steinberg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A";
  int rank = 1;
  std::optional<std::int64_t> p;
  std::string lattice = "sc";
  std::string output = "json";
  std::vector<std::string> weights;
  std::vector<std::string> chars;
  std::optional<std::string> cls;
  unsigned r = 1;
  std::string method = "sum";
};

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Session {
 public:
  Session(const Options& opt, Group group) : opt_(opt), group_(std::move(group)) {}

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] const Options& options() const { return opt_; }

  [[nodiscard]] std::int64_t p() const {
    if (!opt_.p) throw UsageError("this subcommand needs --p");
    return *opt_.p;
  }

  [[nodiscard]] std::size_t num_weights() const { return opt_.weights.size(); }

  [[nodiscard]] Weight weight(std::size_t i = 0) const {
    if (i >= opt_.weights.size()) {
      throw UsageError("this subcommand needs " + std::to_string(i + 1) + " --weight value(s)");
    }
    return parse_weight(opt_.weights[i], group_.rank());
  }

  [[nodiscard]] KElement cls() const {
    if (!opt_.cls) throw UsageError("this subcommand needs --class");
    return class_from_json(parse_json(*opt_.cls), group_.rank());
  }

  [[nodiscard]] Character character(std::size_t i) const {
    Character chi = character_from_json(parse_json(opt_.chars.at(i)), group_.rank());
    return chi;
  }

  /// Operands given as --char documents followed by --weight values, the
  /// latter read as Weyl characters.
  [[nodiscard]] std::vector<Character> character_operands() const {
    std::vector<Character> out;
    for (std::size_t i = 0; i < opt_.chars.size(); ++i) out.push_back(character(i));
    for (std::size_t i = 0; i < opt_.weights.size(); ++i) out.push_back(group_.weyl_character(weight(i)));
    return out;
  }

  /// Exactly one character operand.
  [[nodiscard]] Character single_character() const {
    auto ops = character_operands();
    if (ops.size() != 1) throw UsageError("expected exactly one --char (or --weight) operand");
    return std::move(ops.front());
  }

 private:
  const Options& opt_;
  Group group_;
};

json bool_json(bool b) { return json(b); }

// Handlers -------------------------------------------------------------------

json rs_info(const Session& s) {
  const Group& g = s.group();
  const RootSystem& rs = g.roots();
  const WeylGroup& w = g.weyl();
  json out;
  out["root_system"] = to_json(rs);
  json cartan = json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  out["cartan"] = cartan;
  json roots = json::array();
  for (const Weight& beta : rs.positive_roots()) roots.push_back(to_json(beta));
  out["positive_roots"] = roots;
  out["num_positive_roots"] = rs.num_positive_roots();
  out["weyl_order"] = w.order();
  out["longest_length"] = w.longest().length;
  out["longest_word"] = w.longest().word;
  out["rho"] = to_json(rs.rho());
  out["root_lattice_index"] = rs.root_lattice_index();
  out["lattice"] = g.lattice() == LatticeMode::adjoint ? "adj" : "sc";

  if (s.num_weights() > 0) {
    const Weight lambda = s.weight();
    json wj;
    wj["weight"] = to_json(lambda);
    json simple = json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) simple.push_back(rs.pairing_simple(lambda, i));
    wj["pairings_simple"] = simple;
    json positive = json::array();
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) positive.push_back(rs.pairing_root(lambda, k));
    wj["pairings_positive"] = positive;
    wj["dominant"] = is_dominant(lambda);
    wj["in_root_lattice"] = rs.in_root_lattice(lambda);
    const auto rep = w.dominant_representative(lambda);
    wj["dominant_representative"] = {{"word", w[rep.element].word}, {"weight", to_json(rep.weight)}};
    wj["w0_act"] = to_json(act(w.longest(), lambda));
    wj["w0_dot_act"] = to_json(dot_act(w.longest(), lambda));
    if (s.options().p) {
      const std::int64_t p = s.p();
      wj["restricted"] = is_restricted(lambda, p);
      wj["p_dot"] = to_json(dot_multiply(p, lambda));
      if (is_dominant(lambda)) {
        const auto split = steinberg_split(lambda, p);
        wj["steinberg_split"] = {{"restricted", to_json(split.restricted)}, {"quotient", to_json(split.quotient)}};
      }
    }
    out["weight"] = wj;
  }
  return out;
}

json char_weyl(const Session& s) {
  const Group& g = s.group();
  if (s.options().cls) return to_json(class_to_char(g, s.cls()));
  if (s.num_weights() == 0) {
    if (!s.options().p) throw UsageError("char weyl needs --weight, --class, or --p (Steinberg character)");
    return to_json(steinberg_char(g, s.p(), s.options().r));
  }
  if (s.num_weights() != 1) throw UsageError("char weyl takes one --weight");
  return to_json(weyl_character(g, s.weight()));
}

json char_tensor(const Session& s) {
  auto ops = s.character_operands();
  if (ops.empty()) throw UsageError("char tensor needs at least one --char or --weight operand");
  Character acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = tensor(acc, ops[i]);
  return to_json(acc);
}

json char_twist(const Session& s) {
  return to_json(frobenius_twist(s.single_character(), s.options().r, s.p()));
}

json char_euler(const Session& s) { return to_json(euler_characteristic(s.group(), s.weight())); }

json char_contract(const Session& s) { return to_json(contract_weights(s.single_character(), s.p())); }

json class_decompose(const Session& s) {
  auto ops = s.character_operands();
  if (ops.empty()) throw UsageError("class decompose needs --char or --weight operands");
  Character chi = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) chi = tensor(chi, ops[i]);
  const std::string& method = s.options().method;
  if (method == "peel") return to_json(char_to_class_peeling(s.group(), chi));
  return to_json(char_to_class(s.group(), chi));
}

json class_tensor_delta(const Session& s) {
  if (s.options().chars.size() != 1) throw UsageError("class tensor-delta needs exactly one --char");
  return to_json(tensor_delta_expansion(s.group(), s.weight(), s.character(0)));
}

json class_st_forward(const Session& s) {
  return to_json(steinberg_forward(s.group(), s.cls(), s.p(), s.options().r));
}

json class_st_inverse(const Session& s) { return to_json(steinberg_inverse(s.group(), s.cls(), s.p())); }

json class_contract(const Session& s) {
  if (s.options().chars.size() != 1) throw UsageError("class contract needs exactly one --char");
  const Character chi = s.character(0);
  if (s.num_weights() > 0) {
    const Weight lambda = s.weight();
    return {{"weight", to_json(lambda)},
            {"multiplicity", steinberg_delta_multiplicity(s.group(), chi, lambda, s.p())}};
  }
  return to_json(frobenius_contract_class(s.group(), chi, s.p()));
}

json class_pr_block(const Session& s) { return to_json(pr_block(s.group(), s.cls(), s.weight(), s.p())); }

json linkage_test(const Session& s) {
  if (s.num_weights() != 2) throw UsageError("linkage test needs two --weight values");
  return {{"linked", bool_json(linked(s.group(), s.weight(0), s.weight(1), s.p()))}};
}

json linkage_rep(const Session& s) {
  const Weight lambda = s.weight();
  const Weight rep = fundamental_alcove_rep(s.group(), lambda, s.p());
  return {{"weight", to_json(lambda)},
          {"position", to_json(alcove_position(s.group(), lambda, s.p()))},
          {"rep", to_json(rep)},
          {"rep_position", to_json(alcove_position(s.group(), rep, s.p()))}};
}

json linkage_blocks(const Session& s) { return to_json(block_decompose(s.group(), s.cls(), s.p())); }

json linkage_special(const Session& s) {
  const Weight lambda = s.weight();
  json out{{"weight", to_json(lambda)}, {"special", is_special_point(s.group(), lambda, s.p())}};
  if (is_dominant(lambda) && s.group().in_lattice(lambda)) out["st_level"] = st_level(s.group(), lambda, s.p());
  return out;
}

json simple_a1(const Session& s) {
  if (!s.options().chars.empty()) {
    if (s.options().chars.size() != 1) throw UsageError("simple a1 takes one --char");
    return to_json(decompose_in_simple_basis_a1(s.group(), s.character(0), s.p()));
  }
  return to_json(simple_character_a1(s.group(), s.weight(), s.p()));
}

struct Leaf {
  SubcommandInfo info;
  std::string help;
  std::function<json(const Session&)> handler;
};

const std::vector<Leaf>& leaves() {
  static const std::vector<Leaf> table = {
      {{"rs info",
        {"build_root_system", "generate", "pairing", "is_dominant", "is_restricted", "in_root_lattice",
         "dot_multiply", "steinberg_split", "act", "dot_act", "dominant_representative"}},
       "Root datum and Weyl group summary; with --weight, weight arithmetic",
       rs_info},
      {{"char weyl", {"weyl_character", "steinberg_char", "class_to_char"}},
       "ch Delta(--weight); character of --class; or St_r for --p/--r",
       char_weyl},
      {{"char tensor", {"tensor"}}, "Product of the --char / --weight operands", char_tensor},
      {{"char twist", {"frobenius_twist"}}, "Frobenius twist by p^r", char_twist},
      {{"char euler", {"euler_characteristic"}}, "Euler characteristic of line-bundle induction", char_euler},
      {{"char contract", {"contract_weights"}}, "Weights divisible by p, divided by p", char_contract},
      {{"class decompose", {"char_to_class"}},
       "Weyl-module coordinates of a character (--method sum|peel)",
       class_decompose},
      {{"class tensor-delta", {"tensor_delta_expansion"}}, "[Delta(--weight) (x) M] from ch M", class_tensor_delta},
      {{"class st-forward", {"steinberg_forward"}}, "Steinberg equivalence F^r on a class", class_st_forward},
      {{"class st-inverse", {"steinberg_inverse"}}, "Inverse Steinberg equivalence on a class", class_st_inverse},
      {{"class contract", {"frobenius_contract_class", "steinberg_delta_multiplicity"}},
       "Class of the Frobenius contraction; with --weight, one Steinberg multiplicity",
       class_contract},
      {{"class pr-block", {"pr_block"}}, "Projection onto the linkage class of --weight", class_pr_block},
      {{"linkage test", {"linked"}}, "Whether two weights are linked", linkage_test},
      {{"linkage rep", {"fundamental_alcove_rep", "alcove_position"}},
       "Representative in the closed bottom alcove",
       linkage_rep},
      {{"linkage blocks", {"block_decompose"}}, "Split a class by linkage class", linkage_blocks},
      {{"linkage special", {"is_special_point", "st_level"}}, "Special-point test and Steinberg level",
       linkage_special},
      {{"simple a1", {"simple_character_a1", "decompose_in_simple_basis_a1"}},
       "Simple characters in type A1; with --char, decompose in the simple basis",
       simple_a1},
  };
  return table;
}

// Text rendering ---------------------------------------------------------------

std::string coords_text(const json& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += w[i].dump();
  }
  return s + "]";
}

void render_terms(const json& j, std::ostream& out, const std::string& indent = "") {
  if (j.contains("weights")) {
    for (const json& t : j["weights"]) out << indent << t["mult"].get<std::int64_t>() << " · e^" << coords_text(t["w"]) << '\n';
    return;
  }
  const std::string name = j["basis"] == "simple" ? "L" : "Δ";
  for (const json& t : j["terms"])
    out << indent << t["coeff"].get<std::int64_t>() << " · [" << name << coords_text(t["w"]) << "]\n";
}

void render_text(const json& j, std::ostream& out) {
  if (j.is_object() && (j.contains("weights") || (j.contains("basis") && j.contains("terms")))) {
    render_terms(j, out);
  } else if (j.is_array()) {
    for (const json& b : j) {
      out << "block " << coords_text(b["rep"]) << ":\n";
      render_terms(b["component"], out, "  ");
    }
  } else if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) out << k << std::string(width - k.size(), ' ') << "  " << v.dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

}  // namespace

const std::vector<SubcommandInfo>& registry() {
  static const std::vector<SubcommandInfo> infos = [] {
    std::vector<SubcommandInfo> v;
    for (const Leaf& l : leaves()) v.push_back(l.info);
    return v;
  }();
  return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters and Grothendieck-group classes for the Steinberg component", "steinberg"};
  app.require_subcommand(1);
  Options opt;

  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Leaf*>> leaf_apps;
  for (const Leaf& leaf : leaves()) {
    const auto space = leaf.info.path.find(' ');
    const std::string group = leaf.info.path.substr(0, space);
    const std::string name = leaf.info.path.substr(space + 1);
    CLI::App*& parent = groups[group];
    if (parent == nullptr) {
      static const std::map<std::string, std::string> blurbs = {
          {"rs", "Root system and Weyl group data"},
          {"char", "Formal characters"},
          {"class", "Classes in the Weyl-module basis"},
          {"linkage", "Linkage classes and alcoves"},
          {"simple", "Simple characters in type A1"}};
      parent = app.add_subcommand(group, blurbs.at(group));
      parent->require_subcommand(1);
    }
    CLI::App* sub = parent->add_subcommand(name, leaf.help);
    sub->add_option("--type", opt.type, "Root system series A-G")->capture_default_str();
    sub->add_option("--rank", opt.rank, "Rank (at most 6)")->capture_default_str();
    sub->add_option("--p", opt.p, "Prime characteristic");
    sub->add_option("--lattice", opt.lattice, "Character lattice: sc or adj")
        ->check(CLI::IsMember({"sc", "adj"}))
        ->capture_default_str();
    sub->add_option("--output", opt.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--weight", opt.weights, "Weight as 1,2 or [1,2]; repeatable")->allow_extra_args(false);
    sub->add_option("--char", opt.chars, "Character JSON; repeatable")->allow_extra_args(false);
    sub->add_option("--class", opt.cls, "Class JSON in the Weyl-module basis");
    sub->add_option("--r", opt.r, "Twist / functor degree")->capture_default_str();
    if (leaf.info.path == "class decompose") {
      sub->add_option("--method", opt.method, "sum (alternating sum) or peel")
          ->check(CLI::IsMember({"sum", "peel"}))
          ->capture_default_str();
    }
    leaf_apps.emplace_back(sub, &leaf);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Leaf* chosen = nullptr;
  for (const auto& [sub, leaf] : leaf_apps)
    if (sub->parsed()) chosen = leaf;
  if (chosen == nullptr) {
    err << "usage error: no subcommand\n";
    return 2;
  }

  try {
    const Series series = parse_series(opt.type);
    const LatticeMode mode = opt.lattice == "adj" ? LatticeMode::adjoint : LatticeMode::simply_connected;
    Group group(series, opt.rank, mode);
    if (opt.p) {
      if (!is_prime(*opt.p)) throw UsageError("--p must be a prime, got " + std::to_string(*opt.p));
      check_lattice_config(group.roots(), mode, *opt.p);
    }
    if (opt.r > 64) throw UsageError("--r is too large");
    Session session(opt, group);
    const json result = chosen->handler(session);
    if (opt.output == "text") {
      render_text(result, out);
    } else {
      out << result.dump() << '\n';
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace steinberg::cli
